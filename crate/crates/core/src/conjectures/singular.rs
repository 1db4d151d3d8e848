use std::fmt;

use num_traits::Zero;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{poly_to_value, rat, resultant, Rational, SparsePoly, UniPoly};
use crate::inflection::{basic_inflection, LAMBDA, X};
use crate::report::{CheckReport, Verdict};

const Z: &str = "z";

/// A point `[x : lambda : z]` of the projective plane with rational
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint(pub [Rational; 3]);

impl ProjPoint {
    pub fn from_ints(x: i64, l: i64, z: i64) -> Self {
        ProjPoint([rat(x, 1), rat(l, 1), rat(z, 1)])
    }

    /// Affine coordinates `(x, lambda)` when `z != 0`.
    fn affine(&self) -> Option<(Rational, Rational)> {
        let [x, l, z] = &self.0;
        (!z.is_zero()).then(|| (x / z, l / z))
    }

    /// `x / lambda` for points `[x : lambda : 0]` with `lambda != 0`.
    fn at_infinity_chart(&self) -> Option<Rational> {
        let [x, l, z] = &self.0;
        (z.is_zero() && !l.is_zero()).then(|| x / l)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(f, "[{a}:{b}:{c}]")
    }
}

fn distinguished_points() -> Vec<ProjPoint> {
    vec![ProjPoint::from_ints(0, 0, 1), ProjPoint::from_ints(0, 1, 0), ProjPoint::from_ints(1, 1, 1)]
}

fn strip_root(mut g: UniPoly, r: &Rational) -> UniPoly {
    let lin = UniPoly::linear_root(r);
    while let Ok(q) = g.exact_div(&lin) {
        g = q;
    }
    g
}

fn uni_value(p: &UniPoly) -> serde_json::Value {
    poly_to_value(&SparsePoly::from_univariate(p, "t"))
}

/// Singular points of the projective closure of `p(x, lambda) = 0`
/// (homogenized with `z` to `degree`), compared against `allowed`.
///
/// Affine points with `lambda` outside the `lambda`-coordinates of the
/// allowed affine points are excluded by the gcd of the resultants
/// `res_x(P, P_x)`, `res_x(P, P_lambda)`, `res_x(P_x, P_lambda)`,
/// `res_x(P, P_x + P_lambda)` once those `lambda` factors are removed: if the
/// remainder is constant there are none over the complex numbers. On each
/// special line `lambda = b` the singular points are the roots of the
/// univariate gcd of `P, P_x, P_lambda`. The line at infinity is covered by
/// the chart `lambda = 1` plus the single point `[1:0:0]`.
///
/// Exact gcds prove the existence of any extra singular point (FAIL); a
/// nonconstant resultant remainder that cannot be split further is
/// UNRESOLVED.
pub fn singular_probe_poly(p: &SparsePoly, degree: u32, allowed: &[ProjPoint]) -> Result<CheckReport> {
    if p.vars() != [X, LAMBDA] {
        return Err(Error::Parameter("singular probe expects a polynomial in (x, lambda)".into()));
    }
    let px = p.derivative(X)?;
    let pl = p.derivative(LAMBDA)?;
    let mut certified: Vec<String> = Vec::new();
    let mut extra: Vec<serde_json::Value> = Vec::new();

    // generic lambda
    let pairs = [(p, &px), (p, &pl), (&px, &pl)];
    let sum = &px + &pl;
    let mut g = UniPoly::zero();
    for (a, b) in pairs.into_iter().chain(std::iter::once((p, &sum))) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        g = g.gcd(&resultant(a, b, X)?.to_univariate()?);
    }
    let special_lambdas: Vec<Rational> = {
        let mut v: Vec<Rational> = allowed.iter().filter_map(|q| q.affine().map(|(_, l)| l)).collect();
        v.sort();
        v.dedup();
        v
    };
    let mut remainder = g.clone();
    for l in &special_lambdas {
        remainder = strip_root(remainder, l);
    }
    let unresolved = remainder.is_zero() || remainder.degree() != Some(0);

    // special lambda lines
    for l in &special_lambdas {
        let at = |q: &SparsePoly| -> Result<UniPoly> { q.specialize(LAMBDA, l)?.to_univariate() };
        let mut h = at(p)?.gcd(&at(&px)?).gcd(&at(&pl)?);
        for q in allowed {
            if let Some((x0, l0)) = q.affine() {
                if &l0 == l && h.root_multiplicity(&x0) > 0 {
                    certified.push(q.to_string());
                    h = strip_root(h, &x0);
                }
            }
        }
        if h.degree() != Some(0) {
            extra.push(json!({"lambda": l.to_string(), "x_factor": uni_value(&h)}));
        }
    }

    // line at infinity, chart lambda = 1
    let f = p.homogenize(Z, degree)?;
    let grads = [f.clone(), f.derivative(X)?, f.derivative(LAMBDA)?, f.derivative(Z)?];
    let mut h = UniPoly::zero();
    for q in &grads {
        h = h.gcd(&q.specialize(LAMBDA, &rat(1, 1))?.specialize(Z, &rat(0, 1))?.to_univariate()?);
    }
    for q in allowed {
        if let Some(x0) = q.at_infinity_chart() {
            if h.root_multiplicity(&x0) > 0 {
                certified.push(q.to_string());
                h = strip_root(h, &x0);
            }
        }
    }
    if h.is_zero() || h.degree() != Some(0) {
        extra.push(json!({"at_infinity": true, "x_over_lambda_factor": uni_value(&h)}));
    }

    // [1:0:0]
    let corner = [rat(1, 1), rat(0, 1), rat(0, 1)];
    if grads.iter().all(|q| q.evaluate_positional(&corner).is_zero()) {
        let pt = ProjPoint(corner.clone());
        if allowed.contains(&pt) {
            certified.push(pt.to_string());
        } else {
            extra.push(json!({"point": pt.to_string()}));
        }
    }

    certified.sort();
    let data = json!({
        "allowed": allowed.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "certified_singular": certified,
        "resultant_gcd_degree": g.degree(),
        "resultant_gcd_multiplicities": special_lambdas
            .iter()
            .map(|l| json!({"lambda": l.to_string(), "multiplicity": g.root_multiplicity(l)}))
            .collect::<Vec<_>>(),
        "resultant_remainder": uni_value(&remainder),
    });
    let params = json!({"degree": degree});
    Ok(if !extra.is_empty() {
        CheckReport::fail("singular_probe", params, json!(extra), data)
    } else if unresolved {
        CheckReport::with_verdict(
            "singular_probe",
            params,
            Verdict::Unresolved,
            Some(json!({"unresolved_lambda_factor": uni_value(&remainder)})),
            data,
        )
    } else {
        CheckReport::pass("singular_probe", params, data)
    })
}

/// Singular points of the closure of `P(1,k) = 0` against
/// `{[0:0:1], [0:1:0], [1:1:1]}`.
pub fn singular_probe(k: u32) -> Result<CheckReport> {
    let p = basic_inflection(k).poly;
    let mut r = singular_probe_poly(&p, 2 * k + 2, &distinguished_points())?;
    r.params = json!({"k": k});
    r.data["origin_on_curve"] = json!(p.constant_term().is_zero());
    Ok(r)
}
