use proptest::prelude::*;

use wronski_core::conjectures::{
    check_support, conjecture4_scan, default_lambda_grid, real_root_census, separability_check,
};
use wronski_core::exactalg::{
    det_polymatrix, gcd_univariate, isolate_real_roots, poly_from_json, poly_to_json, rat, resultant, sign_at_root,
    sturm_count, Bound, Rational, SparsePoly,
};
use wronski_core::inflection::{
    basic_inflection, general_inflection, legendre_f, torsion_check, LAMBDA, X, XL,
};
use wronski_core::render::{contour_segments, row_consistency, sample_sign_grid, svg_document, SvgMeta, Window};

fn uni(coeffs: &[i64]) -> SparsePoly {
    SparsePoly::from_terms(&[X], coeffs.iter().enumerate().map(|(i, &c)| (vec![i as u32], rat(c, 1)))).unwrap()
}

fn arb_uni(max_len: usize) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(-6i64..7, 1..max_len).prop_map(|c| uni(&c))
}

fn arb_xl() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..4).prop_map(|ts| {
        SparsePoly::from_terms(&XL, ts.into_iter().map(|((a, b), c)| (vec![a, b], rat(c, 1)))).unwrap()
    })
}

fn cofactor_det(m: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = m.len();
    if n == 0 {
        return SparsePoly::constant(&XL, rat(1, 1));
    }
    let mut acc = SparsePoly::zero(&XL);
    for j in 0..n {
        let minor: Vec<Vec<SparsePoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isolation_agrees_with_sturm(p in arb_uni(7), roots in prop::collection::vec((-5i64..6, 1i64..4), 0..4)) {
        prop_assume!(!p.is_zero());
        // plant some rational roots, possibly repeated
        let mut q = p;
        for (n, d) in roots {
            q = &q * &SparsePoly::from_terms(&[X], [(vec![1], rat(d, 1)), (vec![0], rat(-n, 1))]).unwrap();
        }
        let isolated = isolate_real_roots(&q).unwrap().len();
        prop_assert_eq!(isolated, sturm_count(&q, &Bound::NegInf, &Bound::PosInf).unwrap());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(a in arb_uni(5), b in arb_uni(5), g in arb_uni(3)) {
        prop_assume!(a.total_degree().unwrap_or(0) > 0 && b.total_degree().unwrap_or(0) > 0);
        let r = resultant(&a, &b, X).unwrap();
        let common = gcd_univariate(&a, &b).unwrap().total_degree().unwrap_or(0) > 0;
        prop_assert_eq!(r.is_zero(), common);
        if g.total_degree().unwrap_or(0) > 0 {
            let planted = resultant(&(&a * &g), &(&b * &g), X).unwrap();
            prop_assert!(planted.is_zero());
        }
    }

    #[test]
    fn det_matches_cofactor_expansion(n in 1usize..=4, entries in prop::collection::vec(arb_xl(), 16)) {
        let m: Vec<Vec<SparsePoly>> = (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
        prop_assert_eq!(det_polymatrix(&m).unwrap(), cofactor_det(&m));
    }

    #[test]
    fn sign_changes_never_exceed_sturm_count(j in 0u32..=48) {
        let w = Window::new(rat(-1, 1), rat(3, 1), rat(-1, 1), rat(3, 1), 48, 48).unwrap();
        let p = basic_inflection(2).poly;
        let g = sample_sign_grid(&p, &w).unwrap();
        for rc in row_consistency(&p, &g, &[j]).unwrap() {
            prop_assert!(rc.sign_changes <= rc.sturm, "{:?}", rc);
        }
    }
}

#[test]
fn constructed_polynomials_round_trip_and_meet_degree_contract() {
    let mut all = Vec::new();
    for k in 0..=8 {
        all.push(basic_inflection(k));
    }
    for (mu, k) in [(2, 3), (2, 4), (3, 4), (2, 5), (3, 5)] {
        all.push(general_inflection(mu, k).unwrap());
    }
    for p in all {
        assert_eq!(poly_from_json(&poly_to_json(&p.poly)).unwrap(), p.poly);
        assert_eq!(p.poly.vars(), &XL[..]);
        assert_eq!(p.deg_x(), 2 * p.mu * (p.k + 1), "mu={} k={}", p.mu, p.k);
        assert_eq!(p.deg_lambda(), p.mu * (p.k + 1), "mu={} k={}", p.mu, p.k);
    }
}

#[test]
fn support_contains_diagonal_endpoints() {
    for k in 1..=8u32 {
        let p = basic_inflection(k).poly;
        assert_ne!(p.coeff(&[2 * k + 2, 0]), rat(0, 1), "k={k}");
        assert_ne!(p.coeff(&[0, k + 1]), rat(0, 1), "k={k}");
    }
}

#[test]
fn torsion_holds_in_every_real_regime() {
    let regimes: [[Rational; 5]; 3] = [
        [rat(-7, 1), rat(-3, 1), rat(-1, 1), rat(-1, 2), rat(-1, 9)],
        [rat(1, 7), rat(1, 3), rat(1, 2), rat(2, 3), rat(9, 10)],
        [rat(11, 10), rat(3, 2), rat(2, 1), rat(5, 1), rat(17, 2)],
    ];
    for k in [2, 3] {
        for l in regimes.iter().flatten() {
            let r = torsion_check(k, l).unwrap();
            assert!(r.passed(), "{}", r.to_json());
        }
    }
}

#[test]
fn separable_census_roots_are_simple() {
    for (mu, k) in [(1, 2), (1, 3), (2, 3)] {
        for l in default_lambda_grid() {
            if !separability_check(mu, k, &l).unwrap().passed() {
                continue;
            }
            let c = real_root_census(mu, k, &l).unwrap();
            let u = general_inflection(mu, k).unwrap().poly.specialize(LAMBDA, &l).unwrap();
            let du = u.derivative(X).unwrap();
            for iv in &c.intervals {
                let at_01 = [rat(0, 1), rat(1, 1)].iter().any(|r| iv.lo <= *r && *r <= iv.hi);
                if !at_01 {
                    assert_ne!(sign_at_root(&du, &u, iv).unwrap(), 0, "mu={mu} k={k} lambda={l}");
                }
            }
        }
    }
}

#[test]
fn census_matches_crossings_on_grid_rows() {
    let w = Window::default();
    let p = basic_inflection(3).poly;
    let g = sample_sign_grid(&p, &w).unwrap();
    for j in [40u32, 100, 200, 300, 400, 480] {
        let l = w.node_lambda(j);
        let c = real_root_census(1, 3, &l).unwrap();
        let inside = c.intervals.iter().filter(|iv| iv.lo >= w.x_min && iv.hi <= w.x_max).count();
        assert_eq!(g.sign_changes_in_row(j as usize), inside, "lambda={l}");
    }
}

#[test]
fn reports_are_deterministic() {
    let grid = default_lambda_grid();
    assert_eq!(check_support(4).unwrap().to_json(), check_support(4).unwrap().to_json());
    assert_eq!(
        conjecture4_scan(2, 3, &grid).unwrap().to_json(),
        conjecture4_scan(2, 3, &grid).unwrap().to_json()
    );
}

#[test]
fn shaded_cells_have_positive_corners() {
    let n = 32;
    let w = Window::new(rat(-1, 1), rat(3, 1), rat(-1, 1), rat(3, 1), n, n).unwrap();
    let f = legendre_f();
    let shade = sample_sign_grid(&f, &w).unwrap();
    let curve = sample_sign_grid(&basic_inflection(2).poly, &w).unwrap();
    let doc = svg_document(&contour_segments(&curve), Some(&shade), &w, &SvgMeta::for_poly("t", &f)).unwrap();
    let group = doc.split(r#"<g id="shade""#).nth(1).unwrap().split("</g>").next().unwrap();
    let cell = 512.0 / n as f64;
    let attr = |line: &str, name: &str| -> f64 {
        let rest = line.split(&format!(r#" {name}=""#)).nth(1).unwrap();
        rest.split('"').next().unwrap().parse().unwrap()
    };
    let mut shaded = 0;
    for line in group.lines().filter(|l| l.starts_with("<rect")) {
        let (x, y, width) = (attr(line, "x"), attr(line, "y"), attr(line, "width"));
        let i0 = ((x - 40.0) / cell).round() as usize;
        let cells = (width / cell).round() as usize;
        // the top edge of the rectangle is row j + 1
        let j = (n as usize) - 1 - ((y - 40.0) / cell).round() as usize;
        for i in i0..i0 + cells {
            let v = &shade.values;
            assert!(v[j][i] > 0 && v[j][i + 1] > 0 && v[j + 1][i] > 0 && v[j + 1][i + 1] > 0, "cell ({i},{j})");
            shaded += 1;
        }
    }
    assert!(shaded > 0);
}
