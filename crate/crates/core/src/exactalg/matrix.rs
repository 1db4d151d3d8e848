use num_traits::{One, Zero};

use super::poly::SparsePoly;
use super::rational::Rational;
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// An integral domain with exact division, enough for Bareiss elimination.
pub trait ExactRing: Clone {
    fn is_zero(&self) -> bool;
    /// The multiplicative identity in the same ambient ring as `self`.
    fn one_like(&self) -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Result<Self>;
}

impl ExactRing for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Result<Self> {
        if Zero::is_zero(o) {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self / o)
        }
    }
}

impl ExactRing for UniPoly {
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn one_like(&self) -> Self {
        UniPoly::constant(Rational::one())
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Result<Self> {
        UniPoly::exact_div(self, o)
    }
}

impl ExactRing for SparsePoly {
    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }
    fn one_like(&self) -> Self {
        SparsePoly::constant(self.vars(), Rational::one())
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Result<Self> {
        SparsePoly::exact_div(self, o)
    }
}

/// Fraction-free (Bareiss) determinant with row pivoting. Every division is
/// exact in the ring, so no fractions of ring elements are ever formed.
pub fn bareiss_det<T: ExactRing>(mut m: Vec<Vec<T>>) -> Result<T> {
    let n = m.len();
    for row in &m {
        if row.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: row.len(),
            });
        }
    }
    let Some(first) = m.first().and_then(|r| r.first()) else {
        return Err(Error::Parameter("empty matrix".into()));
    };
    let one = first.one_like();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(zero_like(&one)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].ring_mul(&m[k][k]).ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.ring_neg() } else { det })
}

fn zero_like<T: ExactRing>(one: &T) -> T {
    one.ring_sub(one)
}

/// Exact determinant of a square matrix of polynomials sharing one
/// variable tuple.
pub fn det_polymatrix(m: &[Vec<SparsePoly>]) -> Result<SparsePoly> {
    if let Some(first) = m.first().and_then(|r| r.first()) {
        for row in m {
            for e in row {
                if e.vars() != first.vars() {
                    return Err(Error::VarMismatch {
                        left: first.vars().to_vec(),
                        right: e.vars().to_vec(),
                    });
                }
            }
        }
    }
    bareiss_det(m.to_vec())
}
