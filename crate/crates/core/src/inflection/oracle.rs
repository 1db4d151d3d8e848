use serde::Serialize;

use super::legendre::legendre_f;
use super::X;
use crate::exactalg::{rat, SparsePoly};

/// `D^m y = y * numerator / f^exponent`, with no factor of `f` left in the
/// numerator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivativeForm {
    pub order: u32,
    #[serde(serialize_with = "ser_poly")]
    pub numerator: SparsePoly,
    pub exponent: u32,
}

fn ser_poly<S: serde::Serializer>(p: &SparsePoly, s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    crate::exactalg::poly_to_value(p).serialize(s)
}

/// Computes `D^m y` on `y^2 = f` by repeated application of the quotient
/// rule to `y * num / den`, starting from `y' = y f' / (2 f)`.
///
/// The denominator is carried as a general polynomial and only afterwards
/// recognised as a power of `f`, so this never uses the inflection
/// recurrence.
pub fn derivative_oracle(m: u32) -> DerivativeForm {
    assert!(m >= 1, "derivative order must be positive");
    derivative_forms(m).pop().expect("m >= 1")
}

/// `D^1 y, ..., D^max y` in one pass.
pub(crate) fn derivative_forms(max: u32) -> Vec<DerivativeForm> {
    let f = legendre_f();
    let df = f.derivative(X).unwrap();
    let two_f = f.scale(&rat(2, 1));
    let mut num = SparsePoly::constant(f.vars(), rat(1, 1));
    let mut den = num.clone();
    let mut out = Vec::with_capacity(max as usize);
    for order in 1..=max {
        // D(y n / d) = y [ f' n d + 2 f (n' d - n d') ] / (2 f d^2)
        let dn = num.derivative(X).unwrap();
        let dd = den.derivative(X).unwrap();
        let inner = &(&dn * &den) - &(&num * &dd);
        let mut n = (&(&(&df * &num) * &den) + &(&two_f * &inner)).scale(&rat(1, 2));
        let mut d = &(&f * &den) * &den;
        while let (Ok(nq), Ok(dq)) = (n.exact_div(&f), d.exact_div(&f)) {
            n = nq;
            d = dq;
        }
        num = n;
        den = d;
        let (exponent, rest) = den.remove_factor(&f).expect("f is not constant");
        // what is left of the denominator must be a constant
        assert!(rest.is_constant() && !rest.is_zero(), "denominator is not a power of f");
        out.push(DerivativeForm {
            order,
            numerator: num.scale(&rest.constant_term().recip()),
            exponent,
        });
    }
    out
}
