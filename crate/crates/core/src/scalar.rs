//! The tropical semiring `T ∪ {∞}` with `⊕ = min` and `⊙ = +`.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::Scalar;

/// A finite scalar or the tropical additive identity `∞`.
///
/// Variant order gives the total order directly: every `Finite` value is
/// below `Infinity`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tropical<T> {
    Finite(T),
    Infinity,
}

pub use Tropical::{Finite, Infinity};

impl<T> Tropical<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Infinity)
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Finite(v) => Some(v),
            Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<T> {
        match self {
            Finite(v) => Some(v),
            Infinity => None,
        }
    }
}

impl<T: Scalar> Tropical<T> {
    /// `a ⊕ b = min(a, b)`.
    pub fn trop_add(&self, other: &Self) -> Self {
        match (self, other) {
            (Infinity, b) => b.clone(),
            (a, Infinity) => a.clone(),
            (Finite(a), Finite(b)) => {
                if b < a {
                    Finite(b.clone())
                } else {
                    Finite(a.clone())
                }
            }
        }
    }

    /// `a ⊙ b = a + b`, with `∞` absorbing.
    pub fn trop_mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.clone() + b.clone()),
            _ => Infinity,
        }
    }

    /// `a^k = k·a`. The empty product `a^0` is `0` even for `a = ∞`.
    pub fn trop_pow(&self, k: usize) -> Self {
        if k == 0 {
            return Finite(T::zero());
        }
        match self {
            Finite(a) => Finite(T::from_degree(k) * a.clone()),
            Infinity => Infinity,
        }
    }

    /// Classical negation; `∞` has no inverse.
    pub fn trop_inverse(&self) -> Result<Self> {
        match self {
            Finite(a) => Ok(Finite(-a.clone())),
            Infinity => Err(Error::InverseOfInfinity),
        }
    }
}

pub fn trop_add<T: Scalar>(a: &Tropical<T>, b: &Tropical<T>) -> Tropical<T> {
    a.trop_add(b)
}

pub fn trop_mul<T: Scalar>(a: &Tropical<T>, b: &Tropical<T>) -> Tropical<T> {
    a.trop_mul(b)
}

pub fn trop_pow<T: Scalar>(a: &Tropical<T>, k: usize) -> Tropical<T> {
    a.trop_pow(k)
}

pub fn trop_inverse<T: Scalar>(a: &Tropical<T>) -> Result<Tropical<T>> {
    a.trop_inverse()
}

impl<T: Scalar> From<T> for Tropical<T> {
    fn from(v: T) -> Self {
        Finite(v)
    }
}

impl<T: Scalar> Add for Tropical<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.trop_add(&rhs)
    }
}

impl<T: Scalar> Mul for Tropical<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.trop_mul(&rhs)
    }
}

impl<T: Scalar> Zero for Tropical<T> {
    fn zero() -> Self {
        Infinity
    }

    fn is_zero(&self) -> bool {
        self.is_infinite()
    }
}

impl<T: Scalar> One for Tropical<T> {
    fn one() -> Self {
        Finite(T::zero())
    }
}

impl<T: fmt::Display> fmt::Display for Tropical<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => v.fmt(f),
            Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Tropical<BigRational> {
    type Err = ParseError;

    /// Accepts `[sign] digits [/ digits]` or `inf`; fractions are reduced.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        crate::polynomial::text::parse_scalar(s)
    }
}

impl<T: fmt::Display> Serialize for Tropical<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tropical<BigRational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
