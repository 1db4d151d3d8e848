//! Exact construction of inflection polynomials for linear series on the
//! Legendre family of elliptic curves `y^2 = x(x-1)(x-lambda)`, together with
//! machinery to check their conjectured properties parameter by parameter.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: rationals, sparse multivariate polynomials, univariate
//!   gcd / resultant / Sturm machinery and fraction-free determinants.
//! * [`inflection`]: the curve, the basic and general inflection polynomials,
//!   the derivative and Wronskian oracles and division polynomials.
//! * [`conjectures`]: finite checks producing [`CheckReport`]s.
//! * [`render`]: sign grids, marching squares and SVG output.

pub mod conjectures;
pub mod error;
pub mod exactalg;
pub mod inflection;
pub mod render;
pub mod report;

pub use conjectures::{NewtonData, RootCensus};
pub use error::{Error, Result};
pub use exactalg::{parse_rational, IsolatingInterval, Monomial, Rational, SparsePoly, SturmChain, UniPoly};
pub use inflection::{InflectionPoly, QTemplate};
pub use render::{SignGrid, Window};
pub use report::{CheckReport, Verdict};
