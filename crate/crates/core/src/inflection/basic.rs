use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use super::legendre::legendre_f;
use super::oracle::derivative_oracle;
use super::{Construction, InflectionPoly, X};
use crate::exactalg::{rat, Rational, SparsePoly};

/// Coefficient multiplying `P(1,k) * f'` in the step `k -> k+1`.
///
/// `Derived` is `-(k + 1/2)`, the value forced by differentiating
/// `D^(k+1) y = y P(1,k) / f^(k+1)` once more; `Printed` is `-k + 1/2`.
/// Only `Derived` agrees with [`derivative_oracle`]; see
/// [`calibrate_recurrence`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceCoefficient {
    Printed,
    Derived,
}

impl RecurrenceCoefficient {
    pub fn value(self, k: u32) -> Rational {
        let k = rat(k as i64, 1);
        match self {
            RecurrenceCoefficient::Printed => -k + rat(1, 2),
            RecurrenceCoefficient::Derived => -(k + rat(1, 2)),
        }
    }
}

/// Coefficient used by [`basic_inflection`]; chosen by [`calibrate_recurrence`].
const CALIBRATED: RecurrenceCoefficient = RecurrenceCoefficient::Derived;

fn seed() -> SparsePoly {
    legendre_f().derivative(X).unwrap().scale(&rat(1, 2))
}

fn step(prev: &SparsePoly, k: u32, coefficient: RecurrenceCoefficient) -> SparsePoly {
    let f = legendre_f();
    let df = f.derivative(X).unwrap();
    let lhs = &prev.derivative(X).unwrap() * &f;
    let rhs = (prev * &df).scale(&coefficient.value(k));
    &lhs + &rhs
}

/// Uncached iteration of the recurrence with an explicit coefficient.
pub fn basic_inflection_with(coefficient: RecurrenceCoefficient, k: u32) -> SparsePoly {
    let mut p = seed();
    for j in 0..k {
        p = step(&p, j, coefficient);
    }
    p
}

static CACHE: OnceLock<RwLock<Vec<SparsePoly>>> = OnceLock::new();

/// `P(1, k)`, from the seed `f'/2` and the calibrated recurrence.
/// Results are memoized process-wide in an insert-only table.
pub fn basic_inflection(k: u32) -> InflectionPoly {
    let cache = CACHE.get_or_init(|| RwLock::new(vec![seed()]));
    let idx = k as usize;
    let hit = cache.read().unwrap().get(idx).cloned();
    let poly = match hit {
        Some(p) => p,
        None => {
            let mut table = cache.write().unwrap();
            while table.len() <= idx {
                let j = table.len() as u32 - 1;
                let next = step(table.last().unwrap(), j, CALIBRATED);
                table.push(next);
            }
            table[idx].clone()
        }
    };
    InflectionPoly::new(1, k, poly, Construction::Recurrence).expect("recurrence satisfies the degree contract")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Calibration {
    pub max_k: u32,
    /// Variants whose output matched the oracle for every `k <= max_k`.
    pub matching: Vec<RecurrenceCoefficient>,
    /// First `k` at which the printed variant disagrees with the oracle.
    pub printed_first_mismatch: Option<u32>,
    pub in_use: RecurrenceCoefficient,
}

/// Runs both coefficient variants against the derivative oracle for
/// `0 <= k <= max_k`.
pub fn calibrate_recurrence(max_k: u32) -> Calibration {
    let oracle: Vec<SparsePoly> = (0..=max_k)
        .map(|k| {
            let form = derivative_oracle(k + 1);
            assert_eq!(form.exponent, k + 1, "oracle f-power");
            form.numerator
        })
        .collect();
    let first_mismatch = |c: RecurrenceCoefficient| {
        let mut p = seed();
        for k in 0..=max_k {
            if k > 0 {
                p = step(&p, k - 1, c);
            }
            if p != oracle[k as usize] {
                return Some(k);
            }
        }
        None
    };
    let variants = [RecurrenceCoefficient::Printed, RecurrenceCoefficient::Derived];
    let matching = variants.iter().copied().filter(|c| first_mismatch(*c).is_none()).collect();
    Calibration {
        max_k,
        matching,
        printed_first_mismatch: first_mismatch(RecurrenceCoefficient::Printed),
        in_use: CALIBRATED,
    }
}
