//! Coefficient rings.
//!
//! Every linear combination in this crate (graph algebra elements, WQSym and
//! QSym vectors, two-alphabet polynomials) is generic over its coefficient
//! type. Anything that behaves like a commutative ring implements [`Coeff`];
//! rank, solving and determinants additionally need division and use
//! [`Field`].
//!
//! The exact default is [`Rational`] (arbitrary precision). Machine floats
//! implement both traits too but lose the zero-tolerance guarantees.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// A commutative ring usable as a coefficient.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Embeds a machine integer.
    fn from_i64(v: i64) -> Self;

    /// `(-1)^k`.
    fn sign(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

/// A [`Coeff`] with exact (or at least total) division by non-zero elements.
pub trait Field: Coeff + Div<Output = Self> {}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coeff for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Coeff for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
}

impl<T> Coeff for Ratio<T>
where
    T: Clone + Integer + Debug + Display + Send + Sync + From<i64> + Neg<Output = T>,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }
}

impl<T> Field for Ratio<T> where
    T: Clone + Integer + Debug + Display + Send + Sync + From<i64> + Neg<Output = T>
{
}

impl Field for f64 {}
impl Field for f32 {}

/// Returns `true` when `x` is an integer-valued rational.
pub fn is_integral(x: &crate::Rational) -> bool {
    x.denom().is_one()
}
