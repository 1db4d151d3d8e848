//! Pictures of the real locus `P(x, lambda) = 0` over a window, with the
//! region `f > 0` shaded.
//!
//! Signs are exact at rational grid nodes; the curve is traced by marching
//! squares between nodes, so positional accuracy is one cell. Row-by-row
//! agreement with Sturm counts is available through [`row_consistency`].

mod contour;
mod grid;
mod svg;

pub use contour::{contour_segments, Segment, TIE_RULE};
pub use grid::{sample_sign_grid, SignGrid, Window, DEFAULT_RESOLUTION};
pub use svg::{svg_document, write_svg, SvgMeta};

use serde::Serialize;

use crate::error::Result;
use crate::exactalg::{sturm_count, Bound};
use crate::inflection::{legendre_f, LAMBDA};
use crate::exactalg::SparsePoly;

/// Renders `p = 0` over `w` with `f > 0` shaded and returns the document.
pub fn render_curve(p: &SparsePoly, w: &Window, title: &str) -> Result<String> {
    let curve = sample_sign_grid(p, w)?;
    let shade = sample_sign_grid(&legendre_f(), w)?;
    let segments = contour_segments(&curve);
    svg_document(&segments, Some(&shade), &curve.window, &SvgMeta::for_poly(title, p))
}

/// Sign changes on one grid row against the number of distinct real roots
/// of `p(x, lambda_j)` in `[x_min, x_max]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCount {
    pub row: u32,
    pub lambda: String,
    pub sign_changes: usize,
    pub sturm: usize,
}

pub fn row_consistency(p: &SparsePoly, grid: &SignGrid, rows: &[u32]) -> Result<Vec<RowCount>> {
    let w = &grid.window;
    rows.iter()
        .map(|&j| {
            let l = w.node_lambda(j);
            let u = p.specialize(LAMBDA, &l)?;
            let mut sturm = sturm_count(&u, &Bound::Finite(w.x_min.clone()), &Bound::Finite(w.x_max.clone()))?;
            if u.to_univariate()?.sign_at(&w.x_min) == 0 {
                sturm += 1;
            }
            Ok(RowCount {
                row: j,
                lambda: l.to_string(),
                sign_changes: grid.sign_changes_in_row(j as usize),
                sturm,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inflection::basic_inflection;

    #[test]
    fn determinism_and_row_counts_small() {
        let w = Window::new(
            crate::exactalg::rat(-1, 1),
            crate::exactalg::rat(3, 1),
            crate::exactalg::rat(-1, 1),
            crate::exactalg::rat(3, 1),
            128,
            128,
        )
        .unwrap();
        let p = basic_inflection(2).poly;
        let a = render_curve(&p, &w, "C(1,2)").unwrap();
        let b = render_curve(&p, &w, "C(1,2)").unwrap();
        assert_eq!(a, b);
        assert!(a.contains("<path"));
        let g = sample_sign_grid(&p, &w).unwrap();
        for r in row_consistency(&p, &g, &[3, 40, 100]).unwrap() {
            assert!(r.sign_changes <= r.sturm, "{r:?}");
        }
    }
}
