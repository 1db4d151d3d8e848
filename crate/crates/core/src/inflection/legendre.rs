use num_traits::{One, Zero};

use super::{XL, LAMBDA};
use crate::error::{Error, Result};
use crate::exactalg::{rat, Rational, SparsePoly};

/// `f = x(x-1)(x-lambda) = x^3 - (1+lambda) x^2 + lambda x`.
pub fn legendre_f() -> SparsePoly {
    SparsePoly::from_terms(
        &XL,
        [
            (vec![3, 0], rat(1, 1)),
            (vec![2, 0], rat(-1, 1)),
            (vec![2, 1], rat(-1, 1)),
            (vec![1, 1], rat(1, 1)),
        ],
    )
    .expect("fixed arity")
}

/// `f(x, lambda0)` as a polynomial in `x`.
pub fn legendre_f_at(lambda0: &Rational) -> SparsePoly {
    legendre_f().specialize(LAMBDA, lambda0).expect("lambda present")
}

/// Rejects the degenerate parameters `lambda = 0, 1`.
pub fn check_lambda(lambda0: &Rational) -> Result<()> {
    if lambda0.is_zero() || lambda0.is_one() {
        Err(Error::DegenerateLambda(lambda0.to_string()))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_and_roots() {
        let f = legendre_f();
        assert_eq!(f.len(), 4);
        assert_eq!(f.coeff(&[3, 0]), rat(1, 1));
        assert_eq!(f.coeff(&[2, 0]), rat(-1, 1));
        assert_eq!(f.coeff(&[2, 1]), rat(-1, 1));
        assert_eq!(f.coeff(&[1, 1]), rat(1, 1));
        for l in [rat(-3, 1), rat(1, 2), rat(7, 3)] {
            assert!(f.evaluate(&[("x", rat(0, 1)), ("lambda", l.clone())]).unwrap().is_zero());
            assert!(f.evaluate(&[("x", rat(1, 1)), ("lambda", l.clone())]).unwrap().is_zero());
            assert!(f.evaluate(&[("x", l.clone()), ("lambda", l)]).unwrap().is_zero());
        }
        assert_eq!(f.evaluate(&[("x", rat(2, 1)), ("lambda", rat(-1, 1))]).unwrap(), rat(6, 1));
    }

    #[test]
    fn degenerate_lambdas() {
        assert!(check_lambda(&rat(0, 1)).is_err());
        assert!(check_lambda(&rat(1, 1)).is_err());
        assert!(check_lambda(&rat(2, 1)).is_ok());
    }
}
