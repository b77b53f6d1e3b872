//! Exact arithmetic: rationals, integer matrices with the order/lattice
//! solver, and the free unital algebra over GF(2) used for differentials.

mod matrix;
mod rational;
mod words;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

pub use matrix::{solve_order_system, IntMatrix, OrderSolution};
pub use rational::Rational;
pub use words::{Word, WordSum};

/// Integer backing for every exact quantity in the crate.
///
/// Implemented for any signed integer type with checked arithmetic, in
/// particular `i64`, `i128` and `num_bigint::BigInt`.
pub trait Integer:
    num_integer::Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + ToPrimitive
    + From<i64>
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Integer for T where
    T: num_integer::Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + ToPrimitive
        + From<i64>
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn checked_add<T: Integer>(a: &T, b: &T) -> crate::Result<T> {
    a.checked_add(b).ok_or(crate::Error::Overflow)
}

pub(crate) fn checked_sub<T: Integer>(a: &T, b: &T) -> crate::Result<T> {
    a.checked_sub(b).ok_or(crate::Error::Overflow)
}

pub(crate) fn checked_mul<T: Integer>(a: &T, b: &T) -> crate::Result<T> {
    a.checked_mul(b).ok_or(crate::Error::Overflow)
}

/// `lcm` on magnitudes with overflow detection.
pub(crate) fn checked_lcm<T: Integer>(a: &T, b: &T) -> crate::Result<T> {
    if a.is_zero() || b.is_zero() {
        return Ok(T::zero());
    }
    let g = a.gcd(b);
    checked_mul(&(a.abs() / g), &b.abs())
}
