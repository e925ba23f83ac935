//! Scalar abstractions shared by the vector, matrix and quaternion code.
//!
//! Everything in the verification path runs over exact scalars
//! ([`Rational`](crate::Rational) or [`FieldElem`](crate::FieldElem)); the
//! float impls exist so the same generic routines can produce approximate
//! coordinates for display and quick experiments.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative ring element with an exact (or, for floats, best-effort)
/// sign.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// -1, 0 or +1.
    fn sign(&self) -> i8;

    /// The rational `num / den` embedded in the scalar type.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Decimal approximation.
    fn to_f64(&self) -> f64;

    /// Product without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out *= other;
        out
    }
}

/// A [`Scalar`] with multiplicative inverses for nonzero elements.
pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|d| self.mul_ref(&d))
    }
}

impl Scalar for BigRational {
    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for $f {
            fn sign(&self) -> i8 {
                if *self > 0.0 {
                    1
                } else if *self < 0.0 {
                    -1
                } else {
                    0
                }
            }

            fn from_ratio(num: i64, den: i64) -> Self {
                num as $f / den as $f
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }

        impl Field for $f {
            fn inv(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / *self)
                }
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

#[cfg(test)]
mod tests {
    use super::*;

    fn sum_of_squares<S: Scalar>(xs: &[S]) -> S {
        let mut acc = S::zero();
        for x in xs {
            acc += &x.mul_ref(x);
        }
        acc
    }

    #[test]
    fn generic_code_runs_on_every_scalar() {
        assert_eq!(sum_of_squares(&[1.0f64, 2.0]), 5.0);
        assert_eq!(sum_of_squares(&[1.0f32, 2.0]), 5.0);
        let q = sum_of_squares(&[BigRational::from_ratio(1, 2), BigRational::from_ratio(3, 2)]);
        assert_eq!(q, BigRational::from_ratio(5, 2));
    }

    #[test]
    fn rational_inverse() {
        let x = BigRational::from_ratio(-3, 4);
        assert_eq!(x.inv().unwrap(), BigRational::from_ratio(-4, 3));
        assert!(BigRational::zero().inv().is_none());
        assert!(0.0f64.inv().is_none());
    }
}
