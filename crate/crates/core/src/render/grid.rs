use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{rat, Rational, SparsePoly, UniPoly};
use crate::inflection::{LAMBDA, X};

/// Rectangle `[x_min, x_max] x [lambda_min, lambda_max]` sampled at
/// `(nx + 1) x (nl + 1)` nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    #[serde(serialize_with = "ser_rational")]
    pub x_min: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub x_max: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub lambda_min: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub lambda_max: Rational,
    pub nx: u32,
    pub nl: u32,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub const DEFAULT_RESOLUTION: u32 = 512;

impl Default for Window {
    /// `[-1, 3]^2` at 512 x 512 cells, which contains `(0,0)` and `(1,1)`.
    fn default() -> Self {
        Window {
            x_min: rat(-1, 1),
            x_max: rat(3, 1),
            lambda_min: rat(-1, 1),
            lambda_max: rat(3, 1),
            nx: DEFAULT_RESOLUTION,
            nl: DEFAULT_RESOLUTION,
        }
    }
}

impl Window {
    pub fn new(x_min: Rational, x_max: Rational, lambda_min: Rational, lambda_max: Rational, nx: u32, nl: u32) -> Result<Self> {
        if x_min >= x_max {
            return Err(Error::Window(format!("x range [{x_min}, {x_max}] is empty")));
        }
        if lambda_min >= lambda_max {
            return Err(Error::Window(format!("lambda range [{lambda_min}, {lambda_max}] is empty")));
        }
        if nx < 2 || nl < 2 {
            return Err(Error::Window(format!("resolution {nx} x {nl} is below 2 x 2")));
        }
        Ok(Window {
            x_min,
            x_max,
            lambda_min,
            lambda_max,
            nx,
            nl,
        })
    }

    pub fn node_x(&self, i: u32) -> Rational {
        &self.x_min + (&self.x_max - &self.x_min) * rat(i as i64, self.nx as i64)
    }

    pub fn node_lambda(&self, j: u32) -> Rational {
        &self.lambda_min + (&self.lambda_max - &self.lambda_min) * rat(j as i64, self.nl as i64)
    }
}

/// Exact signs at the nodes; `values[j][i]` is the sign at
/// `(node_x(i), node_lambda(j))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignGrid {
    pub window: Window,
    pub values: Vec<Vec<i8>>,
}

impl SignGrid {
    /// Sign changes along row `j`, reading exact zeros as positive.
    pub fn sign_changes_in_row(&self, j: usize) -> usize {
        self.values[j].windows(2).filter(|w| (w[0] >= 0) != (w[1] >= 0)).count()
    }
}

/// Sign of `p(a/d)` for `d > 0`, from integer coefficients:
/// `sum c_i a^i d^(n-i)` has the sign of `p(a/d)` because `d^n > 0`.
fn sign_homogeneous(coeffs: &[BigInt], a: &BigInt, d: &BigInt) -> i8 {
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    // Horner from the leading coefficient; c_i picks up d^(n-i)
    for c in coeffs.iter().rev() {
        acc = acc * a + c * &dpow;
        dpow *= d;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

/// Coefficients scaled by the lcm of their denominators.
fn integer_coeffs(u: &UniPoly) -> Vec<BigInt> {
    let l = u.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    u.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

fn row_signs(p: &SparsePoly, w: &Window, j: u32) -> Result<Vec<i8>> {
    let u = p.specialize(LAMBDA, &w.node_lambda(j))?.to_univariate()?;
    let coeffs = integer_coeffs(&u);
    Ok((0..=w.nx)
        .map(|i| {
            let x = w.node_x(i);
            sign_homogeneous(&coeffs, x.numer(), x.denom())
        })
        .collect())
}

/// Exact signs of `p(x, lambda)` at every node of `w`, one row per
/// `lambda` value, rows computed in parallel.
pub fn sample_sign_grid(p: &SparsePoly, w: &Window) -> Result<SignGrid> {
    if p.vars() != [X, LAMBDA] {
        return Err(Error::Parameter(format!("sign grid expects (x, lambda), got {:?}", p.vars())));
    }
    let w = Window::new(w.x_min.clone(), w.x_max.clone(), w.lambda_min.clone(), w.lambda_max.clone(), w.nx, w.nl)?;
    let values = (0..=w.nl)
        .into_par_iter()
        .map(|j| row_signs(p, &w, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(SignGrid { window: w, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inflection::{basic_inflection, XL};
    use proptest::prelude::*;

    fn small(nx: u32, nl: u32) -> Window {
        Window::new(rat(-1, 1), rat(1, 1), rat(-1, 1), rat(1, 1), nx, nl).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(Window::new(rat(1, 1), rat(1, 1), rat(0, 1), rat(1, 1), 4, 4).is_err());
        assert!(Window::new(rat(0, 1), rat(1, 1), rat(2, 1), rat(1, 1), 4, 4).is_err());
        assert!(Window::new(rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1), 1, 4).is_err());
        let w = Window::default();
        assert_eq!(w.node_x(128), rat(0, 1));
        assert_eq!(w.node_lambda(256), rat(1, 1));
    }

    #[test]
    fn linear_and_constant() {
        let x = SparsePoly::var(&XL, X).unwrap();
        let g = sample_sign_grid(&x, &small(2, 2)).unwrap();
        for row in &g.values {
            assert_eq!(row, &vec![-1, 0, 1]);
        }
        let one = SparsePoly::constant(&XL, rat(1, 1));
        let g = sample_sign_grid(&one, &small(3, 3)).unwrap();
        assert!(g.values.iter().flatten().all(|&s| s == 1));
        assert_eq!(g.values.len(), 4);
        assert_eq!(g.values[0].len(), 4);
    }

    #[test]
    fn rejects_wrong_variables() {
        let p = SparsePoly::var(&["x", "z"], "x").unwrap();
        assert!(sample_sign_grid(&p, &small(2, 2)).is_err());
    }

    proptest! {
        #[test]
        fn integer_signs_match_rational_evaluation(j in 0u32..=16, i in 0u32..=16) {
            let w = Window::new(rat(-1, 1), rat(3, 1), rat(-1, 1), rat(3, 1), 16, 16).unwrap();
            let p = basic_inflection(2).poly;
            let exact = p
                .evaluate(&[(X, w.node_x(i)), (LAMBDA, w.node_lambda(j))])
                .unwrap();
            let want = if exact.is_zero() { 0 } else if exact.is_positive() { 1 } else { -1 };
            prop_assert_eq!(row_signs(&p, &w, j).unwrap()[i as usize], want);
        }
    }
}
