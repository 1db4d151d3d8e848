use serde::Serialize;

use super::grid::SignGrid;

/// Segment between two edge midpoints, in doubled grid coordinates: node
/// `(i, j)` sits at `(2i, 2j)`, so every endpoint is an integer pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Segment {
    pub from: [u32; 2],
    pub to: [u32; 2],
}

/// Tie rule recorded in the SVG metadata.
pub const TIE_RULE: &str = "exact zeros count as positive; saddle cells join their positive corners";

/// Marching squares over `g`. Cells are visited row by row from the bottom
/// left, so the output order depends only on the grid.
pub fn contour_segments(g: &SignGrid) -> Vec<Segment> {
    let rows = g.values.len();
    let mut out = Vec::new();
    for j in 0..rows.saturating_sub(1) {
        let (lo, hi) = (&g.values[j], &g.values[j + 1]);
        for i in 0..lo.len().saturating_sub(1) {
            let pos = |s: i8| s >= 0;
            // corners counterclockwise from bottom left
            let c = [pos(lo[i]), pos(lo[i + 1]), pos(hi[i + 1]), pos(hi[i])];
            let (x, y) = (2 * i as u32, 2 * j as u32);
            let bottom = [x + 1, y];
            let right = [x + 2, y + 1];
            let top = [x + 1, y + 2];
            let left = [x, y + 1];
            let mut cut = Vec::with_capacity(4);
            if c[0] != c[1] {
                cut.push(bottom);
            }
            if c[1] != c[2] {
                cut.push(right);
            }
            if c[2] != c[3] {
                cut.push(top);
            }
            if c[3] != c[0] {
                cut.push(left);
            }
            match cut.len() {
                2 => out.push(Segment { from: cut[0], to: cut[1] }),
                4 if c[0] => {
                    // bottom-left and top-right positive: cut off the other two
                    out.push(Segment { from: bottom, to: right });
                    out.push(Segment { from: top, to: left });
                }
                4 => {
                    out.push(Segment { from: left, to: bottom });
                    out.push(Segment { from: right, to: top });
                }
                _ => {}
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, SparsePoly};
    use crate::inflection::{X, XL};
    use crate::render::grid::{sample_sign_grid, Window};

    fn grid(values: Vec<Vec<i8>>) -> SignGrid {
        let n = values.len() as u32 - 1;
        let m = values[0].len() as u32 - 1;
        SignGrid {
            window: Window::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1), m.max(2), n.max(2)).unwrap(),
            values,
        }
    }

    #[test]
    fn positive_grid_has_no_segments() {
        assert!(contour_segments(&grid(vec![vec![1; 4]; 4])).is_empty());
    }

    #[test]
    fn zero_counts_as_positive() {
        assert!(contour_segments(&grid(vec![vec![0, 1, 0]; 3])).is_empty());
        assert_eq!(contour_segments(&grid(vec![vec![-1, 0, 1]; 3])).len(), 2);
    }

    #[test]
    fn vertical_line_for_x() {
        let w = Window::new(rat(-1, 1), rat(1, 1), rat(-1, 1), rat(1, 1), 3, 4).unwrap();
        let g = sample_sign_grid(&SparsePoly::var(&XL, X).unwrap(), &w).unwrap();
        let segs = contour_segments(&g);
        assert_eq!(segs.len(), 4);
        // x = 0 lies inside the middle column of cells, between nodes 1 and 2
        assert!(segs.iter().all(|s| s.from[0] == 3 && s.to[0] == 3));
    }

    #[test]
    fn saddles_are_resolved_deterministically() {
        let a = contour_segments(&grid(vec![vec![1, -1], vec![-1, 1]]));
        assert_eq!(a, vec![Segment { from: [1, 0], to: [2, 1] }, Segment { from: [1, 2], to: [0, 1] }]);
        let b = contour_segments(&grid(vec![vec![-1, 1], vec![1, -1]]));
        assert_eq!(b, vec![Segment { from: [0, 1], to: [1, 0] }, Segment { from: [2, 1], to: [1, 2] }]);
    }
}
