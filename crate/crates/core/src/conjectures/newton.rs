use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{poly_to_value, SparsePoly, UniPoly};
use crate::inflection::basic_inflection;
use crate::report::{CheckReport, Verdict};

pub type Point = [i64; 2];

/// Support, convex hull and lower faces of a polynomial in two variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonData {
    /// Sorted exponent pairs with nonzero coefficient.
    pub support: Vec<Point>,
    /// Counterclockwise, starting from the lexicographically smallest point,
    /// without collinear interior points.
    pub hull_vertices: Vec<Point>,
    /// Hull edges whose outward normal has both components negative, in
    /// hull order.
    pub lower_faces: Vec<[Point; 2]>,
}

impl NewtonData {
    pub fn of(p: &SparsePoly) -> Result<Self> {
        if p.arity() != 2 {
            return Err(Error::Parameter(format!("Newton polygon needs 2 variables, got {}", p.arity())));
        }
        let support: Vec<Point> = p
            .terms()
            .map(|(m, _)| [m.exps()[0] as i64, m.exps()[1] as i64])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let hull_vertices = convex_hull(&support);
        let n = hull_vertices.len();
        let lower_faces = if n < 2 {
            Vec::new()
        } else {
            (0..n)
                .map(|i| [hull_vertices[i], hull_vertices[(i + 1) % n]])
                .filter(|[a, b]| b[0] > a[0] && b[1] < a[1])
                .collect()
        };
        Ok(NewtonData {
            support,
            hull_vertices,
            lower_faces,
        })
    }
}

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Monotone-chain hull, counterclockwise, collinear points dropped. A
/// segment comes back as its two endpoints and a point as itself.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn on_segment(a: Point, b: Point, q: Point) -> bool {
    cross(a, b, q) == 0
        && q[0] >= a[0].min(b[0])
        && q[0] <= a[0].max(b[0])
        && q[1] >= a[1].min(b[1])
        && q[1] <= a[1].max(b[1])
}

/// Lattice points inside or on the convex hull of `vertices`, sorted. Works
/// for degenerate hulls (a point or a segment).
pub fn lattice_points_in_hull(vertices: &[Point]) -> Vec<Point> {
    let hull = convex_hull(vertices);
    let Some(&first) = hull.first() else {
        return Vec::new();
    };
    let (x0, x1) = hull.iter().fold((first[0], first[0]), |(lo, hi), p| (lo.min(p[0]), hi.max(p[0])));
    let (y0, y1) = hull.iter().fold((first[1], first[1]), |(lo, hi), p| (lo.min(p[1]), hi.max(p[1])));
    let inside = |q: Point| match hull.len() {
        1 => q == first,
        2 => on_segment(hull[0], hull[1], q),
        n => (0..n).all(|i| cross(hull[i], hull[(i + 1) % n], q) >= 0),
    };
    (x0..=x1)
        .flat_map(|i| (y0..=y1).map(move |j| [i, j]))
        .filter(|&q| inside(q))
        .collect()
}

fn delta1(k: i64) -> [Point; 4] {
    [[0, k + 1], [k - 1, k + 1], [k - 1, 2], [2 * k - 2, 2]]
}

fn delta2(k: i64) -> [Point; 4] {
    [[2 * k, 1], [2 * k + 1, 1], [2 * k + 1, 0], [2 * k + 2, 0]]
}

/// Lattice points of the two predicted support polygons of `P(1,k)`.
pub fn predicted_support(k: u32) -> Vec<Point> {
    let k = k as i64;
    let mut pts: BTreeSet<Point> = lattice_points_in_hull(&delta1(k)).into_iter().collect();
    pts.extend(lattice_points_in_hull(&delta2(k)));
    pts.into_iter().collect()
}

/// The reflection `(i, j) -> (i, 2k+2-i-j)`; `None` when the image leaves
/// the first quadrant.
pub fn sigma(k: u32, p: Point) -> Option<Point> {
    let j = 2 * k as i64 + 2 - p[0] - p[1];
    (j >= 0).then_some([p[0], j])
}

fn params(k: u32) -> serde_json::Value {
    json!({"k": k})
}

pub fn check_support(k: u32) -> Result<CheckReport> {
    let p = basic_inflection(k).poly;
    let actual: BTreeSet<Point> = NewtonData::of(&p)?.support.into_iter().collect();
    let predicted: BTreeSet<Point> = predicted_support(k).into_iter().collect();
    let missing: Vec<Point> = predicted.difference(&actual).copied().collect();
    let extra: Vec<Point> = actual.difference(&predicted).copied().collect();
    let data = json!({
        "support": actual,
        "support_size": actual.len(),
        "predicted_size": predicted.len(),
        "missing": missing,
        "extra": extra,
    });
    Ok(match (missing.first(), extra.first()) {
        (None, None) => CheckReport::pass("support", params(k), data),
        (Some(m), _) => CheckReport::fail("support", params(k), json!({"missing": m}), data),
        (None, Some(e)) => CheckReport::fail("support", params(k), json!({"extra": e}), data),
    })
}

pub fn check_coeff_symmetry(k: u32) -> Result<CheckReport> {
    let p = basic_inflection(k).poly;
    let mut fixed = 0usize;
    for (m, c) in p.terms() {
        let e = [m.exps()[0] as i64, m.exps()[1] as i64];
        let image = sigma(k, e);
        let partner = image.map(|s| p.coeff(&[s[0] as u32, s[1] as u32]));
        if image == Some(e) {
            fixed += 1;
        }
        if partner.as_ref() != Some(c) {
            let witness = json!({
                "exponent": e,
                "image": image,
                "coefficient": c.to_string(),
                "image_coefficient": partner.map(|v| v.to_string()),
            });
            return Ok(CheckReport::fail("coeff_symmetry", params(k), witness, json!({"terms": p.len()})));
        }
    }
    Ok(CheckReport::pass("coeff_symmetry", params(k), json!({"terms": p.len(), "fixed_points": fixed})))
}

/// Terms of `p` whose exponent lies on the closed segment `face`.
pub fn face_restriction(p: &SparsePoly, face: [Point; 2]) -> Result<SparsePoly> {
    if p.arity() != 2 {
        return Err(Error::Parameter(format!("face restriction needs 2 variables, got {}", p.arity())));
    }
    Ok(p.filter_terms(|e| on_segment(face[0], face[1], [e[0] as i64, e[1] as i64])))
}

fn lattice_on_segment(face: [Point; 2]) -> Vec<Point> {
    lattice_points_in_hull(&face)
}

/// Face structure of `P(1,k)` for `k >= 2`:
/// (a) the restriction to the face from `(0,k+1)` to `(k-1,2)` is divisible
/// by `lambda^2` and its cofactor at `lambda = 1` is squarefree of degree
/// `k-1`; (b) the restriction to the face from `(k-1,2)` to `(2k+1,0)` has
/// exactly the two endpoint monomials. Both segments must be lower faces.
pub fn check_face_structure(k: u32) -> Result<CheckReport> {
    if k < 2 {
        return Ok(CheckReport::with_verdict(
            "face_structure",
            params(k),
            Verdict::OutOfRange,
            None,
            json!({"reason": "face description applies for k >= 2"}),
        ));
    }
    let p = basic_inflection(k).poly;
    let nd = NewtonData::of(&p)?;
    let ki = k as i64;
    let gamma1: [Point; 2] = [[0, ki + 1], [ki - 1, 2]];
    let gamma2: [Point; 2] = [[ki - 1, 2], [2 * ki + 1, 0]];

    let r1 = face_restriction(&p, gamma1)?;
    let min_lambda = r1.terms().map(|(m, _)| m.exps()[1]).min().unwrap_or(0);
    let cofactor = UniPoly::new(
        (0..ki)
            .map(|i| p.coeff(&[i as u32, (ki + 1 - i) as u32]))
            .collect(),
    );
    let cofactor_degree = cofactor.degree();
    let squarefree = cofactor.degree().is_some_and(|d| d as i64 == ki - 1)
        && cofactor.gcd(&cofactor.derivative()).degree() == Some(0);

    let r2 = face_restriction(&p, gamma2)?;
    let face2_points: Vec<serde_json::Value> = lattice_on_segment(gamma2)
        .into_iter()
        .map(|q| json!({"point": q, "coefficient": p.coeff(&[q[0] as u32, q[1] as u32]).to_string()}))
        .collect();
    let r2_support: BTreeSet<Point> = r2.terms().map(|(m, _)| [m.exps()[0] as i64, m.exps()[1] as i64]).collect();
    let two_monomials = r2_support == BTreeSet::from(gamma2);

    let g1_lower = nd.lower_faces.contains(&gamma1);
    let g2_lower = nd.lower_faces.contains(&gamma2);
    let data = json!({
        "lower_faces": nd.lower_faces,
        "gamma1_is_lower_face": g1_lower,
        "gamma2_is_lower_face": g2_lower,
        "gamma1_min_lambda_exponent": min_lambda,
        "gamma1_cofactor": poly_to_value(&SparsePoly::from_univariate(&cofactor, "x")),
        "gamma1_cofactor_degree": cofactor_degree,
        "gamma1_cofactor_squarefree": squarefree,
        "gamma2_lattice_points": face2_points,
        "gamma2_restriction": poly_to_value(&r2),
    });
    let failure = if !g1_lower || !g2_lower {
        Some(json!({"reason": "not lower faces", "lower_faces": nd.lower_faces}))
    } else if min_lambda < 2 {
        Some(json!({"reason": "gamma1 restriction not divisible by lambda^2", "min_lambda_exponent": min_lambda}))
    } else if !squarefree {
        Some(json!({"reason": "gamma1 cofactor not squarefree", "cofactor": poly_to_value(&SparsePoly::from_univariate(&cofactor, "x"))}))
    } else if !two_monomials {
        Some(json!({"reason": "gamma2 restriction is not two monomials", "support": r2_support}))
    } else {
        None
    };
    Ok(match failure {
        None => CheckReport::pass("face_structure", params(k), data),
        Some(w) => CheckReport::fail("face_structure", params(k), w, data),
    })
}
