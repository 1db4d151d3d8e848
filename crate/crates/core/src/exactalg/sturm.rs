//! Sturm sequences and real root isolation over the rationals.
//!
//! Infinite bounds are replaced by the Cauchy bound `1 + max |c_i / c_lead|`,
//! which strictly exceeds the absolute value of every root.

use num_traits::{One, Signed};
use serde::Serialize;

use super::poly::SparsePoly;
use super::rational::{rational_to_f64, Rational};
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// Default refinement target: isolating intervals are bisected until their
/// width is at most `2^-40`.
pub const DEFAULT_REFINE_WIDTH_LOG2: u32 = 40;

pub fn default_refine_width() -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::one() << DEFAULT_REFINE_WIDTH_LOG2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Finite(Rational),
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

/// Half-open interval `(lo, hi]` containing exactly one root of the target
/// polynomial, with neither endpoint a root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatingInterval {
    #[serde(serialize_with = "ser_rational")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub hi: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    /// Floating-point midpoint, for summaries only.
    pub fn approx(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    /// Bisects until the width is at most `width`. `sqf` must be the
    /// squarefree polynomial whose root this interval isolates.
    pub fn refine(&self, sqf: &UniPoly, width: &Rational) -> IsolatingInterval {
        let mut iv = self.clone();
        while iv.width() > *width {
            iv = iv.bisect(sqf);
        }
        iv
    }

    fn bisect(&self, sqf: &UniPoly) -> IsolatingInterval {
        let mid = self.midpoint();
        let s_mid = sqf.sign_at(&mid);
        if s_mid == 0 {
            let quarter = self.width() / Rational::from_integer(4.into());
            return IsolatingInterval {
                lo: &mid - &quarter,
                hi: &mid + &quarter,
            };
        }
        if sqf.sign_at(&self.lo) != s_mid {
            IsolatingInterval {
                lo: self.lo.clone(),
                hi: mid,
            }
        } else {
            IsolatingInterval {
                lo: mid,
                hi: self.hi.clone(),
            }
        }
    }
}

/// Sturm sequence `p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i)`.
///
/// Sign variations are evaluated on the chain divided through by its last
/// element (the gcd of `p` and `p'` up to a constant), so counts are of
/// distinct roots even for non-squarefree input.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UniPoly>,
    reduced: Vec<UniPoly>,
    bound: Rational,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.clone()];
        let dp = p.derivative();
        if !dp.is_zero() {
            chain.push(dp);
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1])?;
                if r.is_zero() {
                    break;
                }
                chain.push(-&r);
            }
        }
        let last = chain.last().unwrap().clone();
        let reduced = chain
            .iter()
            .map(|q| q.exact_div(&last))
            .collect::<Result<Vec<_>>>()?;
        let bound = reduced[0].cauchy_bound();
        Ok(SturmChain {
            chain,
            reduced,
            bound,
        })
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.chain
    }

    /// Cauchy bound of the squarefree part.
    pub fn root_bound(&self) -> &Rational {
        &self.bound
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        count_variations(self.reduced.iter().map(|q| q.sign_at(x)))
    }

    fn resolve(&self, b: &Bound) -> Rational {
        match b {
            Bound::NegInf => -self.bound.clone(),
            Bound::PosInf => self.bound.clone(),
            Bound::Finite(r) => r.clone(),
        }
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize> {
        let (l, h) = (self.resolve(lo), self.resolve(hi));
        if l >= h {
            return Err(Error::EmptyInterval {
                lo: l.to_string(),
                hi: h.to_string(),
            });
        }
        Ok(self.variations_at(&l) - self.variations_at(&h))
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Distinct real roots of a univariate polynomial in `(lo, hi]`.
pub fn sturm_count(p: &SparsePoly, lo: &Bound, hi: &Bound) -> Result<usize> {
    SturmChain::new(&p.to_univariate()?)?.count(lo, hi)
}

/// Isolating intervals for all distinct real roots, in increasing order,
/// refined to the default width of `2^-40`.
pub fn isolate_real_roots(p: &SparsePoly) -> Result<Vec<IsolatingInterval>> {
    isolate_real_roots_to(&p.to_univariate()?, &default_refine_width())
}

/// Isolating intervals refined until each is at most `width` wide.
pub fn isolate_real_roots_to(p: &UniPoly, width: &Rational) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sqf = p.squarefree_part();
    let chain = SturmChain::new(&sqf)?;
    let b = chain.root_bound().clone();
    let mut out = Vec::new();
    let total = chain.count(&Bound::Finite(-b.clone()), &Bound::Finite(b.clone()))?;
    split(&chain, &sqf, -b.clone(), b, total, &mut out)?;
    let mut out: Vec<_> = out.into_iter().map(|iv| iv.refine(&sqf, width)).collect();
    // a root found exactly on a split point gets a symmetric window that can
    // reach into its neighbour's interval; bisect until disjoint
    for i in 1..out.len() {
        while out[i - 1].hi > out[i].lo {
            out[i - 1] = out[i - 1].bisect(&sqf);
            out[i] = out[i].bisect(&sqf);
        }
    }
    Ok(out)
}

fn split(
    chain: &SturmChain,
    sqf: &UniPoly,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<IsolatingInterval>,
) -> Result<()> {
    match count {
        0 => Ok(()),
        1 => {
            out.push(normalize(chain, sqf, lo, hi)?);
            Ok(())
        }
        _ => {
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            let left = chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()))?;
            split(chain, sqf, lo, mid.clone(), left, out)?;
            split(chain, sqf, mid, hi, count - left, out)
        }
    }
}

/// Moves endpoints off roots so that the sign test in `bisect` applies.
/// `(lo, hi]` must contain exactly one root of `sqf`.
fn normalize(chain: &SturmChain, sqf: &UniPoly, lo: Rational, hi: Rational) -> Result<IsolatingInterval> {
    let two = Rational::from_integer(2.into());
    let mut lo = lo;
    if sqf.sign_at(&lo) == 0 {
        // `lo` is a root of the neighbouring interval; nudge right
        let mut step = (&hi - &lo) / &two;
        loop {
            let cand = &lo + &step;
            if sqf.sign_at(&cand) != 0
                && chain.count(&Bound::Finite(cand.clone()), &Bound::Finite(hi.clone()))? == 1
            {
                lo = cand;
                break;
            }
            step /= &two;
        }
    }
    if sqf.sign_at(&hi) != 0 {
        return Ok(IsolatingInterval { lo, hi });
    }
    // the root sits exactly on `hi`; shrink a symmetric window around it
    let root = hi;
    let mut delta = (&root - &lo) / &two;
    loop {
        let l = &root - &delta;
        let h = &root + &delta;
        if sqf.sign_at(&h) != 0
            && chain.count(&Bound::Finite(l.clone()), &Bound::Finite(h.clone()))? == 1
        {
            return Ok(IsolatingInterval { lo: l, hi: h });
        }
        delta /= &two;
    }
}

/// Sign of `q` at the unique root of `p` isolated by `iv`.
pub fn sign_at_root(q: &SparsePoly, p: &SparsePoly, iv: &IsolatingInterval) -> Result<i8> {
    sign_at_root_uni(&q.to_univariate()?, &p.to_univariate()?, iv)
}

pub(crate) fn sign_at_root_uni(q: &UniPoly, p: &UniPoly, iv: &IsolatingInterval) -> Result<i8> {
    let not_isolating = || Error::NotIsolating {
        lo: iv.lo.to_string(),
        hi: iv.hi.to_string(),
    };
    let sqf = p.squarefree_part();
    let chain = SturmChain::new(&sqf)?;
    let (lo, hi) = (Bound::Finite(iv.lo.clone()), Bound::Finite(iv.hi.clone()));
    if iv.lo >= iv.hi || chain.count(&lo, &hi)? != 1 {
        return Err(not_isolating());
    }
    if q.is_zero() {
        return Ok(0);
    }
    let g = p.gcd(q);
    if g.degree().unwrap_or(0) > 0 && SturmChain::new(&g)?.count(&lo, &hi)? > 0 {
        return Ok(0);
    }
    let q_chain = SturmChain::new(q)?;
    let mut cur = normalize(&chain, &sqf, iv.lo.clone(), iv.hi.clone())?;
    loop {
        let n = q_chain.count(&Bound::Finite(cur.lo.clone()), &Bound::Finite(cur.hi.clone()))?;
        if n == 0 {
            let v = q.eval(&cur.hi);
            return Ok(if v.is_positive() { 1 } else { -1 });
        }
        cur = cur.bisect(&sqf);
    }
}
