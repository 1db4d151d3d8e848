//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use serde_json::json;

use wronski_core::conjectures::{
    check_coeff_symmetry, check_face_structure, check_homogenization_symmetry, check_shift_symmetry, check_support,
    conjecture4_scan, default_lambda_grid, separability_check, singular_probe, CALIBRATED_PARITY,
};
use wronski_core::exactalg::{rat, SparsePoly};
use wronski_core::inflection::{
    basic_inflection, calibrate_recurrence, derivative_oracle, general_inflection, predicted_delta, predicted_genus,
    q_template, torsion_check, wronskian_direct, RecurrenceCoefficient, XL,
};
use wronski_core::render::{render_curve, row_consistency, sample_sign_grid, Window};
use wronski_core::CheckReport;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: CheckReport) -> Outcome {
    ensure(r.passed(), || r.to_json())
}

fn seed_and_degrees() -> Outcome {
    let seed = SparsePoly::from_terms(
        &XL,
        [(vec![2, 0], rat(3, 2)), (vec![1, 0], rat(-1, 1)), (vec![1, 1], rat(-1, 1)), (vec![0, 1], rat(1, 2))],
    )
    .unwrap();
    ensure(basic_inflection(0).poly == seed, || format!("seed is {}", basic_inflection(0).poly))?;
    for k in 0..=8 {
        let p = basic_inflection(k);
        ensure(p.deg_x() == 2 * (k + 1) && p.deg_lambda() == k + 1, || {
            format!("k={k}: deg_x={} deg_lambda={}", p.deg_x(), p.deg_lambda())
        })?;
    }
    Ok(())
}

fn recurrence_matches_oracle() -> Outcome {
    for m in 1..=9 {
        let form = derivative_oracle(m);
        ensure(form.exponent == m, || format!("m={m}: f-power {}", form.exponent))?;
        ensure(form.numerator == basic_inflection(m - 1).poly, || format!("m={m}: numerator differs"))?;
    }
    let c = calibrate_recurrence(9);
    ensure(c.matching == vec![RecurrenceCoefficient::Derived] && c.in_use == RecurrenceCoefficient::Derived, || {
        format!("calibration {c:?}")
    })
}

fn template_matches_wronskian() -> Outcome {
    for (mu, k) in [(2, 3), (2, 4), (3, 4), (2, 5)] {
        let t = general_inflection(mu, k).map_err(|e| e.to_string())?;
        let w = wronskian_direct(mu, k).map_err(|e| e.to_string())?;
        ensure(t.poly == w.poly, || format!("(mu,k)=({mu},{k}) differ"))?;
    }
    for mu in 1..=4 {
        for n in 0..=8 {
            let q = q_template(mu, n).map_err(|e| e.to_string())?;
            ensure(q.poly.is_homogeneous() && q.poly.total_degree() == Some(mu), || {
                format!("Q({mu},{n}) is not homogeneous of degree {mu}")
            })?;
        }
    }
    Ok(())
}

fn torsion_identity() -> Outcome {
    for k in [2u32, 3] {
        for l in [rat(-1, 1), rat(-1, 2), rat(1, 3), rat(2, 1), rat(5, 1)] {
            let r = torsion_check(k, &l).map_err(|e| e.to_string())?;
            let want = json!(2 * k * k - 2);
            ensure(r.data["deg_inflection"] == want && r.data["deg_division"] == want, || r.to_json())?;
            passed(r)?;
        }
    }
    Ok(())
}

fn symmetries() -> Outcome {
    for k in 1..=8 {
        passed(check_homogenization_symmetry(k).map_err(|e| e.to_string())?)?;
        passed(check_shift_symmetry(k).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn support_and_sigma() -> Outcome {
    for k in 1..=8 {
        passed(check_support(k).map_err(|e| e.to_string())?)?;
        passed(check_coeff_symmetry(k).map_err(|e| e.to_string())?)?;
    }
    let support: BTreeSet<[u32; 2]> = basic_inflection(1)
        .poly
        .terms()
        .map(|(m, _)| [m.exps()[0], m.exps()[1]])
        .collect();
    let want = BTreeSet::from([[0, 2], [2, 1], [3, 1], [3, 0], [4, 0]]);
    ensure(support == want, || format!("k=1 support {support:?}"))
}

fn face_structure() -> Outcome {
    for k in 2..=6 {
        passed(check_face_structure(k).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

const SERIES: [(u32, u32); 4] = [(1, 2), (1, 3), (1, 4), (2, 3)];

fn separability() -> Outcome {
    for (mu, k) in SERIES {
        for l in default_lambda_grid() {
            passed(separability_check(mu, k, &l).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(())
}

fn real_root_counts() -> Outcome {
    for (mu, k) in SERIES {
        let r = conjecture4_scan(mu, k, &default_lambda_grid()).map_err(|e| e.to_string())?;
        let observed = r.data["observed_f_positive"].as_u64();
        ensure(observed.is_some_and(|n| n == mu as u64 || n == 2 * mu as u64), || r.to_json())?;
        ensure(r.data["calibrated_rule"] == json!(CALIBRATED_PARITY), || r.to_json())?;
        passed(r)?;
    }
    Ok(())
}

fn singular_points() -> Outcome {
    for k in [2, 3] {
        let r = singular_probe(k).map_err(|e| e.to_string())?;
        ensure(r.data["certified_singular"] == json!(["[0:0:1]", "[0:1:0]", "[1:1:1]"]), || r.to_json())?;
        passed(r)?;
    }
    Ok(())
}

fn formulas() -> Outcome {
    let got = (predicted_delta(2), predicted_delta(3), predicted_genus(3));
    ensure(got == (4, 7, 0), || format!("{got:?}"))
}

fn render_consistency() -> Outcome {
    let w = Window::default();
    // 10 rows spread over the window, none on lambda = 0 or lambda = 1
    let rows: Vec<u32> = (0..10).map(|i| 25 + 50 * i).collect();
    for k in [2, 3] {
        let p = basic_inflection(k).poly;
        let grid = sample_sign_grid(&p, &w).map_err(|e| e.to_string())?;
        for rc in row_consistency(&p, &grid, &rows).map_err(|e| e.to_string())? {
            ensure(rc.sign_changes == rc.sturm, || format!("k={k}: {rc:?}"))?;
        }
        let a = render_curve(&p, &w, "C").map_err(|e| e.to_string())?;
        let b = render_curve(&p, &w, "C").map_err(|e| e.to_string())?;
        ensure(a == b, || format!("k={k}: SVG differs between runs"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("seed and degree contract", seed_and_degrees),
        ("recurrence equals derivative oracle", recurrence_matches_oracle),
        ("template equals direct Wronskian", template_matches_wronskian),
        ("torsion identity", torsion_identity),
        ("homogenization and shift symmetry", symmetries),
        ("support and coefficient symmetry", support_and_sigma),
        ("lower face structure", face_structure),
        ("separability on the default grid", separability),
        ("real root census constant in {mu, 2mu}", real_root_counts),
        ("singular points only at the distinguished points", singular_points),
        ("delta and genus formulas", formulas),
        ("render rows match Sturm counts; SVG deterministic", render_consistency),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
