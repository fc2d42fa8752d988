//! Formal tropical polynomials `a_n x^n ⊕ ⋯ ⊕ a_r x^r` stored densely from the
//! least supported degree `r`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::scalar::{Finite, Infinity, Tropical};
use crate::Scalar;

pub mod text;

/// Terms as written, before duplicate degrees are merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr<T> {
    pub terms: Vec<(Tropical<T>, usize)>,
}

impl<T: Scalar> PolyExpr<T> {
    /// Merges duplicate degrees by `⊕` and trims infinite ends.
    pub fn normalize(&self) -> Polynomial<T> {
        Polynomial::from_terms(self.terms.iter().cloned())
    }
}

impl FromStr for PolyExpr<BigRational> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        text::parse_expr(s)
    }
}

/// A tropical polynomial.
///
/// Invariant: `coeffs` is empty (the zero polynomial, `f(x) = ∞`) or both
/// its first and last entries are finite. Interior entries may be `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "T: fmt::Display"))]
pub struct Polynomial<T> {
    #[serde(rename = "low_degree")]
    low: usize,
    coeffs: Vec<Tropical<T>>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        Polynomial {
            low: k,
            coeffs: vec![Finite(c)],
        }
    }

    /// `x ⊕ d`.
    pub fn linear(d: T) -> Self {
        Polynomial {
            low: 0,
            coeffs: vec![Finite(d), Finite(T::zero())],
        }
    }

    /// Builds from `[a_low, a_low+1, ...]`, trimming infinite ends.
    pub fn from_coeffs(low: usize, mut coeffs: Vec<Tropical<T>>) -> Self {
        while coeffs.last().is_some_and(Tropical::is_infinite) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_infinite()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Polynomial {
            low: low + lead,
            coeffs,
        }
    }

    /// Builds from `(coefficient, degree)` pairs; repeated degrees combine by `⊕`.
    pub fn from_terms(terms: impl IntoIterator<Item = (Tropical<T>, usize)>) -> Self {
        let terms: Vec<_> = terms.into_iter().filter(|(c, _)| c.is_finite()).collect();
        let Some(low) = terms.iter().map(|t| t.1).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.1).max().unwrap();
        let mut coeffs = vec![Infinity; high - low + 1];
        for (c, k) in terms {
            let slot = &mut coeffs[k - low];
            *slot = slot.trop_add(&c);
        }
        Polynomial { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Least degree with a finite coefficient (`r`); 0 for the zero polynomial.
    pub fn low_degree(&self) -> usize {
        self.low
    }

    /// `n`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() - 1)
    }

    /// `[a_r, ..., a_n]`.
    pub fn coeffs(&self) -> &[Tropical<T>] {
        &self.coeffs
    }

    /// `a_i`, `∞` outside `r..=n`.
    pub fn coeff(&self, i: usize) -> Tropical<T> {
        i.checked_sub(self.low)
            .and_then(|k| self.coeffs.get(k))
            .cloned()
            .unwrap_or(Infinity)
    }

    /// Finite terms as `(degree, coefficient)` in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(move |(k, c)| c.finite().map(|c| (self.low + k, c)))
    }

    pub(crate) fn require_nonzero(&self, op: &'static str) -> Result<()> {
        if self.is_zero() {
            Err(Error::zero(op))
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_degree(&self, op: &'static str, i: usize) -> Result<()> {
        self.require_nonzero(op)?;
        let high = self.degree().unwrap();
        if i < self.low || i > high {
            return Err(Error::DegreeOutOfRange {
                op,
                degree: i,
                low: self.low,
                high,
            });
        }
        Ok(())
    }

    /// `min_i (a_i + i·x)`; `∞` for the zero polynomial.
    pub fn eval_at(&self, x: &T) -> Tropical<T> {
        let mut best = Infinity;
        for (i, a) in self.terms() {
            let v = Finite(a.clone() + T::from_degree(i) * x.clone());
            if v < best {
                best = v;
            }
        }
        best
    }

    pub fn eval(&self, x: &Tropical<T>) -> Result<Tropical<T>> {
        match x {
            Finite(x) => Ok(self.eval_at(x)),
            Infinity => Err(Error::InfiniteArgument { op: "eval" }),
        }
    }

    /// Degrees whose monomial attains `f(x)`, increasing. Never empty.
    pub fn argmin_monomials(&self, x: &Tropical<T>) -> Result<Vec<usize>> {
        self.require_nonzero("argmin_monomials")?;
        let Finite(x) = x else {
            return Err(Error::InfiniteArgument {
                op: "argmin_monomials",
            });
        };
        let values: Vec<(usize, T)> = self
            .terms()
            .map(|(i, a)| (i, a.clone() + T::from_degree(i) * x.clone()))
            .collect();
        let min = values
            .iter()
            .map(|v| &v.1)
            .fold(None::<&T>, |m, v| match m {
                Some(m) if m <= v => Some(m),
                _ => Some(v),
            })
            .unwrap();
        Ok(values
            .iter()
            .filter(|(_, v)| v == min)
            .map(|(i, _)| *i)
            .collect())
    }

    /// Coefficient-wise `⊕`.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.degree().unwrap().max(other.degree().unwrap());
        let coeffs = (low..=high)
            .map(|i| self.coeff(i).trop_add(&other.coeff(i)))
            .collect();
        Self::from_coeffs(low, coeffs)
    }

    /// Min-plus convolution: `c_k = min_{i+j=k} (a_i + b_j)`.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Infinity; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_infinite() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let p = a.trop_mul(b);
                if p < coeffs[i + j] {
                    coeffs[i + j] = p;
                }
            }
        }
        Self::from_coeffs(self.low + other.low, coeffs)
    }
}

impl<T: Scalar> Default for Polynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> std::ops::Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        Polynomial::add(self, rhs)
    }
}

impl<T: Scalar> std::ops::Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        Polynomial::mul(self, rhs)
    }
}

/// Writes `c x^k`: a zero coefficient is dropped on non-constant terms, and a
/// fractional coefficient is separated from `x` by a space.
pub(crate) fn write_monomial<T: Scalar + fmt::Display>(
    f: &mut impl fmt::Write,
    c: &T,
    k: usize,
) -> fmt::Result {
    if k == 0 {
        return write!(f, "{c}");
    }
    if !c.is_zero() {
        let s = c.to_string();
        f.write_str(&s)?;
        if s.bytes().any(|b| !(b.is_ascii_digit() || b == b'-')) {
            f.write_char(' ')?;
        }
    }
    if k == 1 {
        f.write_char('x')
    } else {
        write!(f, "x^{k}")
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("inf");
        }
        let mut first = true;
        for (k, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write_monomial(f, c, k)?;
        }
        Ok(())
    }
}

impl FromStr for Polynomial<BigRational> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(text::parse_expr(s)?.normalize())
    }
}

#[derive(Deserialize)]
struct PolyJson {
    low_degree: usize,
    coeffs: Vec<Tropical<BigRational>>,
}

impl<'de> Deserialize<'de> for Polynomial<BigRational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        Ok(Polynomial::from_coeffs(raw.low_degree, raw.coeffs))
    }
}
