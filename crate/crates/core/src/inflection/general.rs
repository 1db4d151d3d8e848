use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use super::basic::basic_inflection;
use super::legendre::legendre_f;
use super::oracle::derivative_forms;
use super::{check_series_params, Construction, InflectionPoly, X};
use crate::error::{Error, Result};
use crate::exactalg::{det_polymatrix, poly_to_value, Rational, SparsePoly};
use crate::report::{CheckReport, Verdict};

/// `a (a-1) ... (a-i+1)`, which is 0 once `i > a`.
pub fn falling_factorial(a: i64, i: i64) -> Result<BigInt> {
    if a < 0 || i < 0 {
        return Err(Error::Parameter(format!("falling factorial needs a, i >= 0, got a={a}, i={i}")));
    }
    Ok((0..i).fold(BigInt::one(), |acc, s| acc * BigInt::from(a - s)))
}

/// Name of the template variable `t_l`, e.g. `t_-1`, `t_0`.
pub fn t_var(l: i64) -> String {
    format!("t_{l}")
}

/// The determinant `Q(mu, n)` in the variables `t_(1-mu), ..., t_(mu-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QTemplate {
    pub mu: u32,
    pub n: u32,
    pub poly: SparsePoly,
}

impl QTemplate {
    /// Substitutes `t_l -> images(l)` for every template variable.
    pub fn substitute(&self, mut images: impl FnMut(i64) -> SparsePoly) -> Result<SparsePoly> {
        let lo = 1 - self.mu as i64;
        let imgs: Vec<SparsePoly> = (lo..=-lo).map(&mut images).collect();
        self.poly.compose(&imgs)
    }
}

/// `det((n+j)_(i) t_(j-i))` over `0 <= i, j < mu`.
pub fn q_template(mu: u32, n: u32) -> Result<QTemplate> {
    if mu == 0 {
        return Err(Error::Parameter("mu must be positive".into()));
    }
    let m = mu as i64;
    let vars: Vec<String> = (1 - m..m).map(t_var).collect();
    let matrix = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let c = falling_factorial(n as i64 + j, i)?;
                    let t = SparsePoly::var(&vars, &t_var(j - i))?;
                    Ok(t.scale(&Rational::from_integer(c)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QTemplate {
        mu,
        n,
        poly: det_polymatrix(&matrix)?,
    })
}

/// `P(mu, k)` as `Q(mu, k+1)` with `t_l -> P(1, k+l)`; `mu = 1` is the
/// recurrence itself.
pub fn general_inflection(mu: u32, k: u32) -> Result<InflectionPoly> {
    check_series_params(mu, k)?;
    if mu == 1 {
        return Ok(basic_inflection(k));
    }
    // mu >= 2 and k > mu already give k >= 3, so the template always applies
    let poly = template_unchecked(mu, k)?;
    InflectionPoly::new(mu, k, poly, Construction::Template)
}

fn template_unchecked(mu: u32, k: u32) -> Result<SparsePoly> {
    let q = q_template(mu, k + 1)?;
    q.substitute(|l| basic_inflection((k as i64 + l) as u32).poly)
}

/// Determinant of the Wronskian matrix reduced to
/// `((n+j)_(i) N_(n+j-i))` with `n = k+1` and `N_m` the numerators from
/// [`derivative_oracle`](super::derivative_oracle). Pulling `f^i` out of row
/// `i` and `f^-j` out of column `j` leaves the common factor
/// `(y f^-(k+1))^mu` and nothing else.
pub fn wronskian_direct(mu: u32, k: u32) -> Result<InflectionPoly> {
    check_series_params(mu, k)?;
    let poly = direct_unchecked(mu, k)?;
    InflectionPoly::new(mu, k, poly, Construction::Wronskian)
}

fn direct_unchecked(mu: u32, k: u32) -> Result<SparsePoly> {
    let n = k as i64 + 1;
    let m = mu as i64;
    let forms = derivative_forms((n + m - 1) as u32);
    let matrix = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let order = n + j - i;
                    let c = falling_factorial(n + j, i)?;
                    Ok(forms[(order - 1) as usize].numerator.scale(&Rational::from_integer(c)))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    det_polymatrix(&matrix)
}

/// `P(mu, k)` straight from `det(D^j(x^i y))`, rows `0 <= i < mu`, columns
/// `k+1 <= j <= k+mu`. By Leibniz, `f^j / y` times entry `(i, j)` is
/// `sum_s C(j,s) i_(s) x^(i-s) N_(j-s) f^s`; the determinant of those
/// polynomials is `P(mu, k) f^(mu(mu-1)/2)`.
pub fn wronskian_by_leibniz(mu: u32, k: u32) -> Result<InflectionPoly> {
    check_series_params(mu, k)?;
    let f = legendre_f();
    let top = k + mu;
    let forms = derivative_forms(top);
    let one = SparsePoly::constant(f.vars(), Rational::one());
    let numerator = |m: u32| if m == 0 { one.clone() } else { forms[m as usize - 1].numerator.clone() };
    let x = SparsePoly::var(f.vars(), X)?;
    let matrix = (0..mu as i64)
        .map(|i| {
            (k as i64 + 1..=top as i64)
                .map(|j| {
                    let mut entry = SparsePoly::zero(f.vars());
                    for s in 0..=i.min(j) {
                        let c = binomial(j, s) * falling_factorial(i, s)?;
                        if c.is_zero() {
                            continue;
                        }
                        let term = &(&x.pow((i - s) as u32) * &numerator((j - s) as u32)) * &f.pow(s as u32);
                        entry = &entry + &term.scale(&Rational::from_integer(c));
                    }
                    Ok(entry)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let det = det_polymatrix(&matrix)?;
    let poly = det.exact_div(&f.pow(mu * (mu - 1) / 2))?;
    InflectionPoly::new(mu, k, poly, Construction::Definition)
}

fn binomial(n: i64, s: i64) -> BigInt {
    (0..s).fold(BigInt::one(), |acc, t| acc * BigInt::from(n - t) / BigInt::from(t + 1))
}

/// Compares the template with the direct Wronskian. Inside the stated range
/// (`mu >= 2`, `k > mu`) this is the template identity itself; outside it
/// (for instance `mu = k`) it is a probe, and agreement or disagreement is
/// reported as PASS or FAIL without either being treated as an error.
pub fn probe_lemma_hypothesis(mu: u32, k: u32) -> Result<CheckReport> {
    if mu < 2 || k + 1 < mu {
        return Err(Error::Parameter(format!("probe needs mu >= 2 and k >= mu - 1, got mu={mu}, k={k}")));
    }
    let template = template_unchecked(mu, k)?;
    let direct = direct_unchecked(mu, k)?;
    let params = json!({"mu": mu, "k": k});
    let in_range = mu < k && k >= 3;
    let data = json!({
        "in_stated_range": in_range,
        "deg_x": direct.degree_in(X)?,
        "terms": direct.len(),
    });
    if template == direct {
        Ok(CheckReport::with_verdict("template_identity", params, Verdict::Pass, None, data))
    } else {
        let witness = json!({"template": poly_to_value(&template), "wronskian": poly_to_value(&direct)});
        Ok(CheckReport::fail("template_identity", params, witness, data))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::inflection::LAMBDA;

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 2).unwrap(), BigInt::from(20));
        assert_eq!(falling_factorial(7, 0).unwrap(), BigInt::from(1));
        assert_eq!(falling_factorial(3, 3).unwrap(), BigInt::from(6));
        assert_eq!(falling_factorial(2, 3).unwrap(), BigInt::from(0));
        assert!(falling_factorial(-1, 2).is_err());
        assert!(falling_factorial(3, -1).is_err());
    }

    fn t(l: i64) -> String {
        t_var(l)
    }

    #[test]
    fn template_small_cases() {
        let q1 = q_template(1, 5).unwrap();
        assert_eq!(q1.poly, SparsePoly::var(&[t(0)], &t(0)).unwrap());

        let vars = [t(-1), t(0), t(1)];
        let t0 = SparsePoly::var(&vars, &t(0)).unwrap();
        let tm = SparsePoly::var(&vars, &t(-1)).unwrap();
        let tp = SparsePoly::var(&vars, &t(1)).unwrap();
        for n in 2..9i64 {
            let want = &(&t0 * &t0).scale(&rat(n + 1, 1)) - &(&tm * &tp).scale(&rat(n, 1));
            assert_eq!(q_template(2, n as u32).unwrap().poly, want, "n={n}");
        }
        assert_eq!(q_template(2, 4).unwrap().poly.to_string(), "-4*t_-1*t_1 + 5*t_0^2");
    }

    #[test]
    fn template_is_homogeneous_with_integer_coefficients() {
        for mu in 1..=4 {
            for n in 2..=6 {
                let q = q_template(mu, n).unwrap();
                assert!(q.poly.is_homogeneous());
                assert_eq!(q.poly.total_degree(), Some(mu));
                assert!(q.poly.terms().all(|(_, c)| c.is_integer()));
                // the t-indices of every monomial sum to zero
                for (m, _) in q.poly.terms() {
                    let s: i64 = m.exps().iter().enumerate().map(|(v, &e)| (v as i64 + 1 - mu as i64) * e as i64).sum();
                    assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn mu_one_delegates() {
        assert_eq!(general_inflection(1, 2).unwrap().poly, basic_inflection(2).poly);
        assert_eq!(wronskian_direct(1, 2).unwrap().poly, basic_inflection(2).poly);
        assert_eq!(wronskian_by_leibniz(1, 2).unwrap().poly, basic_inflection(2).poly);
        assert_eq!(general_inflection(1, 0).unwrap().poly, basic_inflection(0).poly);
    }

    #[test]
    fn template_matches_wronskians() {
        for (mu, k) in [(2, 3), (2, 4), (3, 4), (2, 5)] {
            let g = general_inflection(mu, k).unwrap();
            let w = wronskian_direct(mu, k).unwrap();
            assert_eq!(g.poly, w.poly, "direct mu={mu} k={k}");
            let l = wronskian_by_leibniz(mu, k).unwrap();
            assert_eq!(g.poly, l.poly, "leibniz mu={mu} k={k}");
        }
    }

    #[test]
    fn degree_contracts() {
        let p = general_inflection(2, 3).unwrap();
        assert_eq!((p.deg_x(), p.deg_lambda()), (16, 8));
        let p = wronskian_direct(3, 4).unwrap();
        assert_eq!((p.deg_x(), p.deg_lambda()), (30, 15));
    }

    #[test]
    fn explicit_mu_two_formula() {
        let p = |m| basic_inflection(m).poly;
        let want = &(&p(3) * &p(3)).scale(&rat(5, 1)) - &(&p(2) * &p(4)).scale(&rat(4, 1));
        assert_eq!(general_inflection(2, 3).unwrap().poly, want);
    }

    #[test]
    fn out_of_range_parameters() {
        assert!(general_inflection(2, 2).is_err());
        assert!(general_inflection(0, 3).is_err());
        assert!(wronskian_direct(3, 3).is_err());
        assert!(q_template(0, 3).is_err());
    }

    #[test]
    fn probe_outside_stated_range_reports() {
        let r = probe_lemma_hypothesis(2, 2).unwrap();
        assert_eq!(r.data["in_stated_range"], json!(false));
        assert!(matches!(r.verdict, Verdict::Pass | Verdict::Fail));
        let r = probe_lemma_hypothesis(2, 3).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn only_x_and_lambda_survive() {
        let p = general_inflection(2, 3).unwrap();
        assert_eq!(p.poly.vars(), &[X.to_string(), LAMBDA.to_string()]);
    }
}
