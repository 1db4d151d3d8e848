//! Inflection polynomials `P(mu, k)` of the linear series spanned by
//! `1, x, ..., x^k, y, yx, ..., yx^(mu-1)` on `y^2 = f = x(x-1)(x-lambda)`.
//!
//! Four constructions are provided and cross-checked in the tests:
//! the first-order recurrence for `mu = 1` ([`basic_inflection`]), the
//! determinant template in the basic polynomials ([`general_inflection`]),
//! the falling-factorial Wronskian built from an independent derivative
//! oracle ([`wronskian_direct`]), and the literal Wronskian of the basis
//! ([`wronskian_by_leibniz`]).

mod basic;
mod division;
mod formulas;
mod general;
mod legendre;
mod oracle;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::SparsePoly;

pub use basic::{basic_inflection, basic_inflection_with, calibrate_recurrence, Calibration, RecurrenceCoefficient};
pub use division::{division_polynomial, division_polynomials, torsion_check};
pub use formulas::{predicted_delta, predicted_genus};
pub use general::{
    falling_factorial, general_inflection, probe_lemma_hypothesis, q_template, t_var, wronskian_by_leibniz,
    wronskian_direct, QTemplate,
};
pub use legendre::{check_lambda, legendre_f, legendre_f_at};
pub use oracle::{derivative_oracle, DerivativeForm};

pub const X: &str = "x";
pub const LAMBDA: &str = "lambda";
pub const XL: [&str; 2] = [X, LAMBDA];

/// How an [`InflectionPoly`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    Recurrence,
    Template,
    Wronskian,
    Definition,
}

/// `P(mu, k)` as a polynomial in `(x, lambda)`, checked against
/// `deg_x = 2 mu (k+1)` and `deg_lambda = mu (k+1)` on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct InflectionPoly {
    pub mu: u32,
    pub k: u32,
    pub poly: SparsePoly,
    pub construction: Construction,
}

impl InflectionPoly {
    pub fn new(mu: u32, k: u32, poly: SparsePoly, construction: Construction) -> Result<Self> {
        let got_x = poly.degree_in(X)?.unwrap_or(0);
        let got_l = poly.degree_in(LAMBDA)?.unwrap_or(0);
        let want_x = 2 * mu * (k + 1);
        let want_l = mu * (k + 1);
        if got_x != want_x || got_l != want_l || poly.arity() != 2 {
            return Err(Error::DegreeContract {
                mu,
                k,
                want_x,
                want_l,
                got_x,
                got_l,
            });
        }
        Ok(InflectionPoly {
            mu,
            k,
            poly,
            construction,
        })
    }

    pub fn deg_x(&self) -> u32 {
        self.poly.degree_in(X).unwrap().unwrap_or(0)
    }

    pub fn deg_lambda(&self) -> u32 {
        self.poly.degree_in(LAMBDA).unwrap().unwrap_or(0)
    }
}

/// Series parameters: `mu = 1` allows every `k >= 0` (the basic family),
/// `mu >= 2` needs `k > mu`.
pub fn check_series_params(mu: u32, k: u32) -> Result<()> {
    if mu == 0 {
        return Err(Error::Parameter("mu must be positive".into()));
    }
    if mu >= 2 && k <= mu {
        return Err(Error::Parameter(format!("need k > mu, got mu={mu}, k={k}")));
    }
    Ok(())
}
