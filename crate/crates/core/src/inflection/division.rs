use serde_json::json;

use super::general::general_inflection;
use super::legendre::{check_lambda, legendre_f};
use super::{LAMBDA, XL};
use crate::error::{Error, Result};
use crate::exactalg::{poly_to_value, rat, Rational, SparsePoly};
use crate::report::CheckReport;

/// `g_0, ..., g_max` where `psi_m = g_m` for odd `m` and `psi_m = g_m y`
/// for even `m`, on `y^2 = x^3 + a2 x^2 + a4 x` with `a2 = -(1+lambda)`,
/// `a4 = lambda`. Normalized so that `psi_2 = 2y`.
pub fn division_polynomials(max: u32) -> Vec<SparsePoly> {
    let f = legendre_f();
    let vars = f.vars().to_vec();
    let c = |v: i64| SparsePoly::constant(&vars, rat(v, 1));
    let x = SparsePoly::var(&vars, XL[0]).unwrap();
    let lam = SparsePoly::var(&vars, LAMBDA).unwrap();
    let a2 = &(-&lam) - &c(1);
    let a4 = lam;
    let b2 = a2.scale(&rat(4, 1));
    let b4 = a4.scale(&rat(2, 1));
    let b8 = -&(&a4 * &a4);
    let xp = |e: u32| x.pow(e);

    let g3 = &(&(&xp(4).scale(&rat(3, 1)) + &(&b2 * &xp(3))) + &(&b4 * &xp(2)).scale(&rat(3, 1))) + &b8;
    // b6 = 0 drops three terms of the general quartic factor
    let inner = &(&(&(&xp(6).scale(&rat(2, 1)) + &(&b2 * &xp(5))) + &(&b4 * &xp(4)).scale(&rat(5, 1)))
        + &(&b8 * &xp(2)).scale(&rat(10, 1)))
        + &(&(&(&b2 * &b8) * &x) + &(&b4 * &b8));
    let g4 = inner.scale(&rat(2, 1));

    let mut g = vec![c(0), c(1), c(2), g3, g4];
    g.truncate(max as usize + 1);
    let f2 = &f * &f;
    let half = rat(1, 2);
    for idx in 5..=max as usize {
        let m = idx / 2;
        let next = if idx % 2 == 1 {
            let a = &g[m + 2] * &g[m].pow(3);
            let b = &g[m - 1] * &g[m + 1].pow(3);
            if m % 2 == 0 {
                &(&f2 * &a) - &b
            } else {
                &a - &(&f2 * &b)
            }
        } else {
            let a = &g[m + 2] * &g[m - 1].pow(2);
            let b = &g[m - 2] * &g[m + 1].pow(2);
            (&g[m] * &(&a - &b)).scale(&half)
        };
        g.push(next);
    }
    g
}

/// The reduced division polynomial `g_m` (see [`division_polynomials`]).
pub fn division_polynomial(m: u32) -> Result<SparsePoly> {
    if m == 0 {
        return Err(Error::Parameter("division polynomial index must be positive".into()));
    }
    Ok(division_polynomials(m).pop().expect("nonempty"))
}

/// Checks that `P(k-1, k)(x, lambda0)` is a nonzero rational multiple of
/// `g_(2k)(x, lambda0)`, comparing monic normalizations exactly.
pub fn torsion_check(k: u32, lambda0: &Rational) -> Result<CheckReport> {
    if k < 2 {
        return Err(Error::Parameter(format!("torsion check needs k >= 2, got {k}")));
    }
    check_lambda(lambda0)?;
    let p = general_inflection(k - 1, k)?.poly.specialize(LAMBDA, lambda0)?.to_univariate()?;
    let g = division_polynomial(2 * k)?.specialize(LAMBDA, lambda0)?.to_univariate()?;
    let params = json!({"k": k, "lambda": lambda0.to_string()});
    let (dp, dg) = (p.degree(), g.degree());
    let expected = 2 * (k as usize).pow(2) - 2;
    let mut data = json!({
        "expected_degree": expected,
        "deg_inflection": dp,
        "deg_division": dg,
    });
    if dp != Some(expected) || dg != Some(expected) {
        let witness = json!({"reason": "degree mismatch", "deg_inflection": dp, "deg_division": dg});
        return Ok(CheckReport::fail("torsion", params, witness, data));
    }
    let ratio = p.leading_coeff().unwrap() / g.leading_coeff().unwrap();
    data["ratio"] = json!(ratio.to_string());
    if p.monic() == g.monic() {
        Ok(CheckReport::pass("torsion", params, data))
    } else {
        let diff = &p.monic() - &g.monic();
        let witness = json!({
            "reason": "monic forms differ",
            "difference": poly_to_value(&SparsePoly::from_univariate(&diff, XL[0])),
        });
        Ok(CheckReport::fail("torsion", params, witness, data))
    }
}
