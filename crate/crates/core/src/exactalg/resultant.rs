use num_traits::One;

use super::matrix::bareiss_det;
use super::poly::SparsePoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sylvester matrix of `a` and `b` with respect to `var`.
///
/// With `m = deg a` and `n = deg b`, the first `n` rows carry the
/// coefficients of `a` (leading coefficient first), each shifted one column
/// right of the previous, and the last `m` rows do the same for `b`. Under
/// this convention `res(x - p, x - q) = p - q`.
pub fn sylvester_matrix(a: &SparsePoly, b: &SparsePoly, var: &str) -> Result<Vec<Vec<SparsePoly>>> {
    let ca = a.coefficients_in(var)?;
    let cb = b.coefficients_in(var)?;
    let (m, n) = (ca.len().saturating_sub(1), cb.len().saturating_sub(1));
    let size = m + n;
    let rest_vars: Vec<String> = ca
        .first()
        .or(cb.first())
        .map(|p| p.vars().to_vec())
        .unwrap_or_default();
    let zero = SparsePoly::zero(&rest_vars);
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (i, c) in ca.iter().rev().enumerate() {
            row[r + i] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for (i, c) in cb.iter().rev().enumerate() {
            row[r + i] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Resultant of `a` and `b` with respect to `var`, as a polynomial in the
/// remaining variables, via a fraction-free determinant of the Sylvester
/// matrix (row convention documented on [`sylvester_matrix`]).
pub fn resultant(a: &SparsePoly, b: &SparsePoly, var: &str) -> Result<SparsePoly> {
    if a.vars() != b.vars() {
        return Err(Error::VarMismatch {
            left: a.vars().to_vec(),
            right: b.vars().to_vec(),
        });
    }
    let i = a.var_index(var)?;
    let rest: Vec<String> = a
        .vars()
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, v)| v.clone())
        .collect();
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (true, false) | (false, true) => return Ok(SparsePoly::zero(&rest)),
        _ => {}
    }
    let syl = sylvester_matrix(a, b, var)?;
    if syl.is_empty() {
        // both constant in `var`
        return Ok(SparsePoly::constant(&rest, Rational::one()));
    }
    match rest.len() {
        0 => {
            let m = syl
                .iter()
                .map(|row| row.iter().map(|e| e.constant_term()).collect())
                .collect();
            Ok(SparsePoly::constant(&rest, bareiss_det::<Rational>(m)?))
        }
        1 => {
            let m = syl
                .iter()
                .map(|row| row.iter().map(|e| e.to_univariate()).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let d = bareiss_det(m)?;
            Ok(SparsePoly::from_univariate(&d, &rest[0]))
        }
        _ => bareiss_det(syl),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;
    use crate::exactalg::univariate::UniPoly;
    use proptest::prelude::*;

    fn bi(terms: &[(&[u32], i64)]) -> SparsePoly {
        SparsePoly::from_terms(&["x", "a", "b"], terms.iter().map(|(e, c)| (e.to_vec(), rat(*c, 1)))).unwrap()
    }

    #[test]
    fn linear_factors_sign_convention() {
        let p = bi(&[(&[1, 0, 0], 1), (&[0, 1, 0], -1)]);
        let q = bi(&[(&[1, 0, 0], 1), (&[0, 0, 1], -1)]);
        let r = resultant(&p, &q, "x").unwrap();
        let want = SparsePoly::from_terms(&["a", "b"], [(vec![1, 0], rat(1, 1)), (vec![0, 1], rat(-1, 1))]).unwrap();
        assert_eq!(r, want);
    }

    #[test]
    fn shared_root_gives_zero() {
        let p = SparsePoly::from_univariate(&UniPoly::from_i64(&[-1, 0, 1]), "x");
        let q = SparsePoly::from_univariate(&UniPoly::from_i64(&[-1, 1]), "x");
        assert!(resultant(&p, &q, "x").unwrap().is_zero());
    }

    #[test]
    fn three_by_three_sylvester() {
        // res_x(x^2 - lambda, x - 1) = 1 - lambda
        let vars = ["x", "lambda"];
        let p = SparsePoly::from_terms(&vars, [(vec![2, 0], rat(1, 1)), (vec![0, 1], rat(-1, 1))]).unwrap();
        let q = SparsePoly::from_terms(&vars, [(vec![1, 0], rat(1, 1)), (vec![0, 0], rat(-1, 1))]).unwrap();
        let r = resultant(&p, &q, "x").unwrap();
        let want = SparsePoly::from_terms(&["lambda"], [(vec![0], rat(1, 1)), (vec![1], rat(-1, 1))]).unwrap();
        assert_eq!(r, want);
        // same answer through the multivariate path
        let p3 = p.with_vars(&["x", "lambda", "mu"]).unwrap();
        let q3 = q.with_vars(&["x", "lambda", "mu"]).unwrap();
        assert_eq!(resultant(&p3, &q3, "x").unwrap(), want.with_vars(&["lambda", "mu"]).unwrap());
    }

    #[test]
    fn both_zero_is_error() {
        let z = SparsePoly::zero(&["x"]);
        assert_eq!(resultant(&z, &z, "x"), Err(Error::ZeroPolynomial));
    }

    fn arb_uni() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-4i64..5, 1..4).prop_map(|c| UniPoly::from_i64(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn vanishes_iff_common_factor(a in arb_uni(), b in arb_uni(), g in arb_uni()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let a = SparsePoly::from_univariate(&a, "x");
            let b = SparsePoly::from_univariate(&b, "x");
            let r = resultant(&a, &b, "x").unwrap();
            let gcd = a.to_univariate().unwrap().gcd(&b.to_univariate().unwrap());
            prop_assert_eq!(r.is_zero(), gcd.degree().unwrap() > 0);

            // planted common factor of positive degree
            prop_assume!(g.degree().unwrap_or(0) > 0);
            let g = SparsePoly::from_univariate(&g, "x");
            prop_assert!(resultant(&(&a * &g), &(&b * &g), "x").unwrap().is_zero());
        }
    }
}
