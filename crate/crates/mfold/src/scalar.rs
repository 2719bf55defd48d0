//! The integer scalar abstraction used throughout the crate.
//!
//! All counts and cohomology coefficients are exact signed integers. The
//! algorithms are written against [`ExactInt`] so that the same code runs on
//! [`num_bigint::BigInt`] (the default, see [`crate::Count`]) or on a fixed
//!-width type such as `i128` when the degrees involved are small enough.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Signed;

/// An exact signed integer scalar.
///
/// Implemented for every integer type that supports ordinary arithmetic by
/// value and by reference, conversion from `i64`, and decimal formatting and
/// parsing. In particular `BigInt`, `i128` and `i64` all qualify.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + Send
    + Sync
    + fmt::Debug
    + fmt::Display
    + FromStr
    + From<i64>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Send
        + Sync
        + fmt::Debug
        + fmt::Display
        + FromStr
        + From<i64>
        + for<'a> Add<&'a Self, Output = Self>
        + for<'a> Sub<&'a Self, Output = Self>
        + for<'a> Mul<&'a Self, Output = Self>
{
}

/// Exact binomial coefficient `C(n, k)` computed by the multiplicative
/// formula; every intermediate division is exact.
pub fn binomial<T: ExactInt>(n: i64, k: i64) -> T {
    if k < 0 || k > n || n < 0 {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut c = T::one();
    for i in 1..=k {
        c = c * T::from(n - k + i) / T::from(i);
    }
    c
}
