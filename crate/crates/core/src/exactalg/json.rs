//! Canonical polynomial JSON:
//! `{"vars":[...],"terms":[{"e":[...],"n":"<int>","d":"<positive int>"}]}`
//! with terms in descending graded-lex order and reduced fractions. The
//! encoding is compact, so equal polynomials serialize to identical bytes.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::SparsePoly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    vars: Vec<String>,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    e: Vec<u32>,
    n: String,
    d: String,
}

fn doc(p: &SparsePoly) -> PolyDoc {
    PolyDoc {
        vars: p.vars().to_vec(),
        terms: p
            .terms()
            .map(|(m, c)| TermDoc {
                e: m.exps().to_vec(),
                n: c.numer().to_string(),
                d: c.denom().to_string(),
            })
            .collect(),
    }
}

pub fn poly_to_json(p: &SparsePoly) -> String {
    serde_json::to_string(&doc(p)).expect("polynomial JSON serializes")
}

/// The same document as a JSON value, for embedding in reports.
pub fn poly_to_value(p: &SparsePoly) -> serde_json::Value {
    serde_json::to_value(doc(p)).expect("polynomial JSON serializes")
}

/// Parses canonical polynomial JSON. Unreduced fractions are accepted and
/// reduced; zero coefficients, duplicate exponents and non-positive
/// denominators are rejected.
pub fn poly_from_json(s: &str) -> Result<SparsePoly> {
    let d: PolyDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let mut seen = std::collections::HashSet::new();
    let mut terms = Vec::with_capacity(d.terms.len());
    for t in d.terms {
        let n: BigInt = t.n.parse().map_err(|_| Error::Parse(format!("bad numerator `{}`", t.n)))?;
        let den: BigInt = t.d.parse().map_err(|_| Error::Parse(format!("bad denominator `{}`", t.d)))?;
        if !den.is_positive() {
            return Err(Error::Parse(format!("denominator `{}` is not positive", t.d)));
        }
        if n.is_zero() {
            return Err(Error::Parse("zero coefficient stored".into()));
        }
        if !seen.insert(t.e.clone()) {
            return Err(Error::Parse(format!("duplicate exponent {:?}", t.e)));
        }
        terms.push((t.e, Rational::new(n, den)));
    }
    SparsePoly::from_terms(&d.vars, terms)
}
