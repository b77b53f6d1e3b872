use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{checked_add, checked_mul, checked_sub, Integer};
use crate::{Error, Result};

/// Exact rational number `numer / denom` in lowest terms with `denom > 0`.
///
/// Operator impls panic on overflow of the backing integer; the `checked_*`
/// methods report it as [`Error::Overflow`] instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational<T = i64> {
    numer: T,
    denom: T,
}

impl<T: Integer> Rational<T> {
    pub fn new(numer: T, denom: T) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = numer.gcd(&denom);
        let (mut n, mut d) = if g.is_zero() || g.is_one() {
            (numer, denom)
        } else {
            (numer / g.clone(), denom / g)
        };
        if d.is_negative() {
            n = T::zero().checked_sub(&n).ok_or(Error::Overflow)?;
            d = T::zero().checked_sub(&d).ok_or(Error::Overflow)?;
        }
        Ok(Rational { numer: n, denom: d })
    }

    pub fn from_integer(n: T) -> Self {
        Rational {
            numer: n,
            denom: T::one(),
        }
    }

    /// Shorthand for small literal values.
    pub fn from_i64(numer: i64, denom: i64) -> Self {
        Self::new(T::from(numer), T::from(denom)).expect("nonzero literal denominator")
    }

    pub fn int(n: i64) -> Self {
        Self::from_integer(T::from(n))
    }

    pub fn numer(&self) -> &T {
        &self.numer
    }

    pub fn denom(&self) -> &T {
        &self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }

    pub fn to_integer(&self) -> Option<T> {
        self.is_integer().then(|| self.numer.clone())
    }

    pub fn floor(&self) -> T {
        self.numer.div_floor(&self.denom)
    }

    pub fn abs(&self) -> Self {
        Rational {
            numer: self.numer.abs(),
            denom: self.denom.clone(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let g = self.denom.gcd(&rhs.denom);
        let left = self.denom.clone() / g.clone();
        let right = rhs.denom.clone() / g;
        let denom = checked_mul(&left, &rhs.denom)?;
        let numer = checked_add(
            &checked_mul(&self.numer, &right)?,
            &checked_mul(&rhs.numer, &left)?,
        )?;
        Self::new(numer, denom)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        Ok(Rational {
            numer: checked_sub(&T::zero(), &self.numer)?,
            denom: self.denom.clone(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.checked_neg()?)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        // cross-reduce first so intermediate products stay small
        let g1 = self.numer.gcd(&rhs.denom);
        let g2 = rhs.numer.gcd(&self.denom);
        let (a, d) = reduce_pair(&self.numer, &rhs.denom, &g1);
        let (c, b) = reduce_pair(&rhs.numer, &self.denom, &g2);
        Self::new(checked_mul(&a, &c)?, checked_mul(&b, &d)?)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.numer.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let inv = Self::new(rhs.denom.clone(), rhs.numer.clone())?;
        self.checked_mul(&inv)
    }

    pub fn checked_mul_int(&self, k: &T) -> Result<Self> {
        self.checked_mul(&Self::from_integer(k.clone()))
    }
}

fn reduce_pair<T: Integer>(x: &T, y: &T, g: &T) -> (T, T) {
    if g.is_zero() {
        (x.clone(), y.clone())
    } else {
        (x.clone() / g.clone(), y.clone() / g.clone())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Integer> $trait for Rational<T> {
            type Output = Rational<T>;
            fn $method(self, rhs: Rational<T>) -> Rational<T> {
                self.$checked(&rhs)
                    .expect(concat!("rational ", stringify!($method)))
            }
        }

        impl<'a, T: Integer> $trait<&'a Rational<T>> for &'a Rational<T> {
            type Output = Rational<T>;
            fn $method(self, rhs: &'a Rational<T>) -> Rational<T> {
                self.$checked(rhs)
                    .expect(concat!("rational ", stringify!($method)))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl<T: Integer> Neg for Rational<T> {
    type Output = Rational<T>;
    fn neg(self) -> Rational<T> {
        self.checked_neg().expect("rational neg")
    }
}

impl<T: Integer> Neg for &Rational<T> {
    type Output = Rational<T>;
    fn neg(self) -> Rational<T> {
        self.checked_neg().expect("rational neg")
    }
}

impl<T: Integer> Zero for Rational<T> {
    fn zero() -> Self {
        Self::from_integer(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl<T: Integer> One for Rational<T> {
    fn one() -> Self {
        Self::from_integer(T::one())
    }
}

impl<T: Integer> Sum for Rational<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<T: Integer> From<T> for Rational<T> {
    fn from(n: T) -> Self {
        Self::from_integer(n)
    }
}

impl<T: Integer> PartialOrd for Rational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Integer> Ord for Rational<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom == other.denom {
            return self.numer.cmp(&other.numer);
        }
        // floor comparison first; fall back to the sign of the difference
        let (fa, fb) = (self.floor(), other.floor());
        if fa != fb {
            return fa.cmp(&fb);
        }
        let diff = self.checked_sub(other).expect("rational compare");
        diff.numer.cmp(&T::zero())
    }
}

impl<T: Integer> fmt::Display for Rational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl<T: Integer> FromStr for Rational<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let parse = |part: &str| part.trim().parse::<T>().map_err(|_| bad());
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?).map_err(|e| match e {
                Error::Overflow => Error::Overflow,
                _ => bad(),
            }),
            None => Ok(Self::from_integer(parse(s)?)),
        }
    }
}

impl<T: Integer> Serialize for Rational<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: Integer> Deserialize<'de> for Rational<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Self::from_integer(T::from(n))),
        }
    }
}
