use serde_json::json;

use super::first_difference;
use crate::error::Result;
use crate::exactalg::{rat, SparsePoly};
use crate::inflection::{basic_inflection, LAMBDA, X};
use crate::report::CheckReport;

const Z: &str = "z";

fn difference_witness(lhs: &SparsePoly, rhs: &SparsePoly) -> Option<serde_json::Value> {
    first_difference(lhs, rhs).map(|(e, a, b)| {
        json!({
            "exponent": e,
            "vars": lhs.vars(),
            "lhs": a.to_string(),
            "rhs": b.to_string(),
        })
    })
}

/// Homogenize `p` with `z` to degree `2(k+1)`, set `lambda = 1`, and compare
/// with `p` after renaming `lambda` to `z`.
pub fn homogenization_symmetry_of(p: &SparsePoly, k: u32) -> Result<CheckReport> {
    let lhs = p.homogenize(Z, 2 * (k + 1))?.dehomogenize(LAMBDA)?;
    let rhs = p.rename_var(LAMBDA, Z)?;
    let params = json!({"k": k});
    let data = json!({"terms": p.len()});
    Ok(match difference_witness(&lhs, &rhs) {
        None => CheckReport::pass("homogenization_symmetry", params, data),
        Some(w) => CheckReport::fail("homogenization_symmetry", params, w, data),
    })
}

/// Compares `p(x+1, lambda+1)` with `p(-x, -lambda)`.
pub fn shift_symmetry_of(p: &SparsePoly, k: u32) -> Result<CheckReport> {
    let lhs = p.substitute_affine(&[(X, rat(1, 1), rat(1, 1)), (LAMBDA, rat(1, 1), rat(1, 1))])?;
    let rhs = p.substitute_affine(&[(X, rat(-1, 1), rat(0, 1)), (LAMBDA, rat(-1, 1), rat(0, 1))])?;
    let params = json!({"k": k});
    let data = json!({"terms": p.len()});
    Ok(match difference_witness(&lhs, &rhs) {
        None => CheckReport::pass("shift_symmetry", params, data),
        Some(w) => CheckReport::fail("shift_symmetry", params, w, data),
    })
}

pub fn check_homogenization_symmetry(k: u32) -> Result<CheckReport> {
    homogenization_symmetry_of(&basic_inflection(k).poly, k)
}

pub fn check_shift_symmetry(k: u32) -> Result<CheckReport> {
    shift_symmetry_of(&basic_inflection(k).poly, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    /// Adds 1 to the coefficient of `x^(2k+1)`, a term not fixed by the
    /// reflection.
    fn perturbed(k: u32) -> SparsePoly {
        let p = basic_inflection(k).poly;
        let bump = SparsePoly::from_terms(p.vars(), [(vec![2 * k + 1, 0], rat(1, 1))]).unwrap();
        &p + &bump
    }

    #[test]
    fn k1_homogenized_form() {
        let p = basic_inflection(1).poly;
        let h = p.homogenize(Z, 4).unwrap();
        let want = SparsePoly::from_terms(
            &[X, LAMBDA, Z],
            [
                (vec![4, 0, 0], rat(3, 4)),
                (vec![3, 0, 1], rat(-1, 1)),
                (vec![3, 1, 0], rat(-1, 1)),
                (vec![2, 1, 1], rat(3, 2)),
                (vec![0, 2, 2], rat(-1, 4)),
            ],
        )
        .unwrap();
        assert_eq!(h, want);
    }

    #[test]
    fn k1_shift_closed_form() {
        let p = basic_inflection(1).poly;
        let lhs = p.substitute_affine(&[(X, rat(1, 1), rat(1, 1)), (LAMBDA, rat(1, 1), rat(1, 1))]).unwrap();
        // (3x^4 + 4(1-lambda)x^3 - 6 lambda x^2 - lambda^2)/4
        let want = SparsePoly::from_terms(
            &[X, LAMBDA],
            [
                (vec![4, 0], rat(3, 4)),
                (vec![3, 0], rat(1, 1)),
                (vec![3, 1], rat(-1, 1)),
                (vec![2, 1], rat(-3, 2)),
                (vec![0, 2], rat(-1, 4)),
            ],
        )
        .unwrap();
        assert_eq!(lhs, want);
    }

    #[test]
    fn sweep() {
        for k in 1..=6 {
            assert!(check_homogenization_symmetry(k).unwrap().passed(), "k={k}");
            assert!(check_shift_symmetry(k).unwrap().passed(), "k={k}");
        }
    }

    #[test]
    fn perturbed_controls_fail_with_witness() {
        for k in [1, 2, 3] {
            let q = perturbed(k);
            let r = homogenization_symmetry_of(&q, k).unwrap();
            assert_eq!(r.verdict, Verdict::Fail);
            assert!(r.witness.as_ref().unwrap()["exponent"].is_array());
            let r = shift_symmetry_of(&q, k).unwrap();
            assert_eq!(r.verdict, Verdict::Fail);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(check_shift_symmetry(3).unwrap().to_json(), check_shift_symmetry(3).unwrap().to_json());
    }
}
