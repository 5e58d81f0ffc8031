//! Exact integer and rational primitives.
//!
//! Out-of-range binomials evaluate to zero, and `(-1)!! = 0!! = 1`. Both
//! conventions are what the amplitude sums and the pi-time formula need at
//! their boundary indices.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Binomial coefficient `C(x, y)`, zero whenever `y < 0` or `y > x`.
pub fn binomial(x: i64, y: i64) -> Result<BigInt> {
    if x < 0 {
        return Err(Error::NegativeBinomial(x));
    }
    if y < 0 || y > x {
        return Ok(BigInt::zero());
    }
    let k = y.min(x - y) as u64;
    let n = x as u64;
    let mut acc = BigUint::one();
    // acc * (n - k + i) is divisible by i at every step
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Ok(BigInt::from(acc))
}

/// `x!!` with the empty-product convention for `x = -1` and `x = 0`.
pub fn double_factorial(x: i64) -> Result<BigInt> {
    if x < -1 {
        return Err(Error::DoubleFactorialDomain(x));
    }
    let mut acc = BigUint::one();
    let mut k = x;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    Ok(BigInt::from(acc))
}

pub fn factorial(x: u64) -> BigInt {
    (2..=x).fold(BigUint::one(), |acc, k| acc * k).into()
}

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Panics on a zero denominator.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        Self(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Self(self.0.recip())
    }

    /// Nearest double; exact for values whose reduced form fits.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl From<i64> for ExactRational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<BigInt> for ExactRational {
    fn from(value: BigInt) -> Self {
        Self::from_integer(value)
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }

        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2).unwrap(), big(6));
        assert_eq!(binomial(5, -1).unwrap(), big(0));
        assert_eq!(binomial(3, 5).unwrap(), big(0));
        assert_eq!(binomial(0, 0).unwrap(), big(1));
        assert_eq!(binomial(40, 20).unwrap(), big(137_846_528_820));
    }

    #[test]
    fn binomial_rejects_negative_top() {
        assert_eq!(binomial(-1, 0), Err(Error::NegativeBinomial(-1)));
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(5).unwrap(), big(15));
        assert_eq!(double_factorial(-1).unwrap(), big(1));
        assert_eq!(double_factorial(0).unwrap(), big(1));
        assert_eq!(double_factorial(6).unwrap(), big(48));
        assert_eq!(double_factorial(-2), Err(Error::DoubleFactorialDomain(-2)));
    }

    #[test]
    fn rational_lowest_terms() {
        let r = ExactRational::new(6, -4);
        assert_eq!(r.numerator(), &big(-3));
        assert_eq!(r.denominator(), &big(2));
        let z = ExactRational::new(0, 7);
        assert_eq!(z.denominator(), &big(1));
        assert_eq!(format!("{r}"), "-3/2");
        assert_eq!((ExactRational::new(1, 3) + ExactRational::new(1, 6)).to_f64(), 0.5);
    }

    proptest! {
        #[test]
        fn binomial_symmetry(x in 0i64..60, y in 0i64..60) {
            prop_assume!(y <= x);
            prop_assert_eq!(binomial(x, y).unwrap(), binomial(x, x - y).unwrap());
        }

        #[test]
        fn pascal_identity(x in 1i64..60, y in -3i64..64) {
            prop_assert_eq!(
                binomial(x, y).unwrap(),
                binomial(x - 1, y).unwrap() + binomial(x - 1, y - 1).unwrap()
            );
        }

        #[test]
        fn double_factorials_multiply_to_factorial(x in 1i64..80) {
            prop_assert_eq!(
                double_factorial(x).unwrap() * double_factorial(x - 1).unwrap(),
                factorial(x as u64)
            );
        }
    }
}
