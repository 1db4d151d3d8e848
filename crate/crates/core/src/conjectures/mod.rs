//! Finite, per-parameter checks of the structural statements about the
//! inflection polynomials: the two symmetries of `P(1,k)`, its Newton
//! polygon, separability and real-root counts of the specializations
//! `P(mu,k)(x, lambda0)`, and the singular locus of `P(1,k) = 0`.
//!
//! Every check returns a [`CheckReport`](crate::report::CheckReport).

mod census;
mod newton;
mod singular;
mod symmetry;

pub use census::{conjecture4_scan, default_lambda_grid, real_root_census, separability_check, ParityRule, RootCensus, CALIBRATED_PARITY};
pub use newton::{
    check_coeff_symmetry, check_face_structure, check_support, face_restriction, lattice_points_in_hull,
    predicted_support, sigma, convex_hull, NewtonData, Point,
};
pub use singular::{singular_probe, singular_probe_poly, ProjPoint};
pub use symmetry::{
    check_homogenization_symmetry, check_shift_symmetry, homogenization_symmetry_of, shift_symmetry_of,
};

use crate::exactalg::{Rational, SparsePoly};

/// Exponent of the first term (in canonical order) where `a` and `b`
/// differ, with both coefficients.
pub(crate) fn first_difference(a: &SparsePoly, b: &SparsePoly) -> Option<(Vec<u32>, Rational, Rational)> {
    let diff = a - b;
    let (m, _) = diff.terms().next()?;
    let e = m.exps().to_vec();
    Some((e.clone(), a.coeff(&e), b.coeff(&e)))
}
