//! Exact arithmetic substrate.
//!
//! Everything here is a pure function over immutable values. Coefficients
//! are [`Rational`] (`num_rational::BigRational`), always kept reduced.

mod json;
mod matrix;
mod poly;
mod rational;
mod resultant;
mod sturm;
mod univariate;

pub use json::{poly_from_json, poly_to_json, poly_to_value};
pub use matrix::{bareiss_det, det_polymatrix, ExactRing};
pub use poly::{poly_arith, ArithOp, Monomial, SparsePoly};
pub use rational::{parse_rational, rat, rational_to_f64, Rational};
pub use resultant::{resultant, sylvester_matrix};
pub use sturm::{
    isolate_real_roots, isolate_real_roots_to, sign_at_root, sturm_count, Bound,
    IsolatingInterval, SturmChain, DEFAULT_REFINE_WIDTH_LOG2,
};
pub use univariate::{gcd_univariate, UniPoly};
