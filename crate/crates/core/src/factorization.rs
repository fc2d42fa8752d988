//! Unique factorization into linear factors.
//!
//! A least-coefficient polynomial `a_n x^n ⊕ ⋯ ⊕ a_r x^r` equals
//! `a_n x^r (x ⊕ d_n)(x ⊕ d_{n−1})⋯(x ⊕ d_{r+1})` with `d_i = a_{i−1} − a_i`,
//! and the `d_i` are non-decreasing. Any polynomial factors through its
//! canonical form, so factorizations are unique up to functional equivalence.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize};

use crate::canonical::{canonicalize, Canonical};
use crate::error::{Error, Result};
use crate::polynomial::{write_monomial, Polynomial};
use crate::scalar::{Finite, Infinity, Tropical};
use crate::Scalar;

/// `leading · x^monomial_degree · Π (x ⊕ root)`, roots sorted non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound(serialize = "T: fmt::Display"))]
pub struct Factored<T> {
    #[serde(serialize_with = "as_text")]
    leading: T,
    monomial_degree: usize,
    #[serde(serialize_with = "all_as_text")]
    roots: Vec<T>,
}

fn as_text<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn all_as_text<T: fmt::Display, S: serde::Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl<T: Scalar> Factored<T> {
    /// Roots may be given in any order.
    pub fn new(leading: T, monomial_degree: usize, mut roots: Vec<T>) -> Self {
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
        Factored {
            leading,
            monomial_degree,
            roots,
        }
    }

    pub fn leading(&self) -> &T {
        &self.leading
    }

    pub fn monomial_degree(&self) -> usize {
        self.monomial_degree
    }

    /// Sorted non-decreasing, with repeats.
    pub fn roots(&self) -> &[T] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.monomial_degree + self.roots.len()
    }

    /// Distinct roots with their multiplicities, increasing.
    pub fn grouped_roots(&self) -> Vec<(&T, usize)> {
        let mut out: Vec<(&T, usize)> = Vec::new();
        for d in &self.roots {
            match out.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    /// Expansion as an iterated min-plus product of the factors.
    pub fn expand_by_convolution(&self) -> Polynomial<T> {
        self.roots.iter().fold(
            Polynomial::monomial(self.leading.clone(), self.monomial_degree),
            |acc, d| acc.mul(&Polynomial::linear(d.clone())),
        )
    }
}

/// Factors `f` through its least-coefficient form.
pub fn factor<T: Scalar>(f: &Polynomial<T>) -> Result<Factored<T>> {
    f.require_nonzero("factor")?;
    let g = canonicalize(f)?;
    let values: Vec<&T> = g.values().collect();
    let roots: Vec<T> = values
        .windows(2)
        .rev()
        .map(|w| w[0].clone() - w[1].clone())
        .collect();
    debug_assert!(!T::EXACT || roots.windows(2).all(|w| w[0] <= w[1]));
    Ok(Factored {
        leading: values[values.len() - 1].clone(),
        monomial_degree: g.low_degree(),
        roots,
    })
}

/// Partial sums: the coefficient of `x^(n−m)` is `leading` plus the `m` smallest roots.
pub fn expand<T: Scalar>(fac: &Factored<T>) -> Canonical<T> {
    let mut descending = Vec::with_capacity(fac.roots.len() + 1);
    let mut acc = fac.leading.clone();
    descending.push(Finite(acc.clone()));
    for d in &fac.roots {
        acc = acc + d.clone();
        descending.push(Finite(acc.clone()));
    }
    descending.reverse();
    Canonical::new_unchecked(Polynomial::from_coeffs(fac.monomial_degree, descending))
}

/// Distinct roots of `f`, increasing.
pub fn zero_locus<T: Scalar>(f: &Polynomial<T>) -> Result<Vec<T>> {
    f.require_nonzero("zero_locus")?;
    let mut roots = factor(f)?.roots;
    roots.dedup();
    Ok(roots)
}

/// Number of factors `x ⊕ d` in `f`.
pub fn multiplicity<T: Scalar>(f: &Polynomial<T>, d: &Tropical<T>) -> Result<usize> {
    f.require_nonzero("multiplicity")?;
    let Finite(d) = d else {
        return Err(Error::InfiniteArgument { op: "multiplicity" });
    };
    Ok(factor(f)?.roots.iter().filter(|r| *r == d).count())
}

impl<T: Scalar + fmt::Display> fmt::Display for Factored<T> {
    /// `leading * x^r * (x + d)^m * ...`; `x^0` is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.leading)?;
        if self.monomial_degree > 0 {
            f.write_str(" * ")?;
            write_monomial(f, &T::zero(), self.monomial_degree)?;
        }
        for (d, m) in self.grouped_roots() {
            write!(f, " * (x + {d})")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct FactoredJson {
    leading: Tropical<BigRational>,
    monomial_degree: usize,
    roots: Vec<Tropical<BigRational>>,
}

impl<'de> Deserialize<'de> for Factored<BigRational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = FactoredJson::deserialize(deserializer)?;
        let finite = |v: Tropical<BigRational>, what: &str| match v {
            Finite(v) => Ok(v),
            Infinity => Err(D::Error::custom(format!("{what} must be finite"))),
        };
        let leading = finite(raw.leading, "leading")?;
        let roots = raw
            .roots
            .into_iter()
            .map(|d| finite(d, "roots"))
            .collect::<Result<_, _>>()?;
        Ok(Factored::new(leading, raw.monomial_degree, roots))
    }
}
