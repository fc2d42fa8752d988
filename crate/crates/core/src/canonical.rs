//! Least-coefficient canonical form.
//!
//! A coefficient is *least* when lowering it would change the polynomial as a
//! function; equivalently its monomial attains the minimum at some point. Every
//! nonzero polynomial is functionally equivalent to exactly one polynomial whose
//! coefficients are all least, so comparing canonical forms decides functional
//! equivalence exactly.
//!
//! The canonical coefficient at degree `j` is the value at `j` of the lower
//! convex hull of the support points `(i, a_i)`. [`canonicalize_naive`]
//! evaluates that as a minimum over all chords `i < j < k`; [`canonicalize`]
//! interpolates along the monotone-chain hull in linear time.

use std::fmt;
use std::ops::Deref;

use crate::envelope::{lower_hull, supports_degree};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::scalar::{Finite, Tropical};
use crate::Scalar;

/// A polynomial whose coefficients are all least coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canonical<T>(Polynomial<T>);

impl<T: Scalar> Canonical<T> {
    /// Wraps `f` if it already passes [`is_canonical`].
    pub fn new(f: Polynomial<T>) -> Result<Self> {
        if is_canonical(&f)? {
            Ok(Canonical(f))
        } else {
            Err(Error::Invalid {
                op: "canonical",
                reason: "coefficients are not all least coefficients".into(),
            })
        }
    }

    pub(crate) fn new_unchecked(f: Polynomial<T>) -> Self {
        if T::EXACT {
            debug_assert!(is_canonical(&f).unwrap_or(false), "not canonical: {f:?}");
        }
        Canonical(f)
    }

    pub fn as_poly(&self) -> &Polynomial<T> {
        &self.0
    }

    pub fn into_poly(self) -> Polynomial<T> {
        self.0
    }

    /// `[a_r, ..., a_n]`, all finite.
    pub fn values(&self) -> impl Iterator<Item = &T> + '_ {
        self.0.coeffs().iter().map(|c| c.finite().unwrap())
    }
}

impl<T> Deref for Canonical<T> {
    type Target = Polynomial<T>;

    fn deref(&self) -> &Polynomial<T> {
        &self.0
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Canonical<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Direct chord minimum, `O(n³)`:
///
/// `b_j = min({a_j} ∪ {(a_i·(k−j) + a_k·(j−i)) / (k−i) : r ≤ i < j < k ≤ n})`,
/// where chords through an infinite endpoint are skipped.
pub fn canonicalize_naive<T: Scalar>(f: &Polynomial<T>) -> Result<Canonical<T>> {
    f.require_nonzero("canonicalize_naive")?;
    let (r, n) = (f.low_degree(), f.degree().unwrap());
    let mut out = Vec::with_capacity(n - r + 1);
    for j in r..=n {
        let mut best = f.coeff(j);
        for i in r..j {
            let Finite(ai) = f.coeff(i) else { continue };
            for k in j + 1..=n {
                let Finite(ak) = f.coeff(k) else { continue };
                let chord = (ai.clone() * T::from_degree(k - j) + ak * T::from_degree(j - i))
                    / T::from_degree(k - i);
                let chord = Finite(chord);
                if chord < best {
                    best = chord;
                }
            }
        }
        out.push(best);
    }
    Ok(Canonical::new_unchecked(Polynomial::from_coeffs(r, out)))
}

/// Linear-time canonicalization along the lower hull of `(i, a_i)`.
pub fn canonicalize<T: Scalar>(f: &Polynomial<T>) -> Result<Canonical<T>> {
    f.require_nonzero("canonicalize")?;
    let hull = lower_hull(f);
    let value = |i: usize| f.coeff(i).into_finite().unwrap();
    let mut out: Vec<Tropical<T>> = Vec::with_capacity(f.coeffs().len());
    out.push(Finite(value(hull[0])));
    for w in hull.windows(2) {
        let (u, v) = (w[0], w[1]);
        let (au, av) = (value(u), value(v));
        let slope = (av.clone() - au.clone()) / T::from_degree(v - u);
        let mut b = au;
        for _ in u + 1..v {
            b = b + slope.clone();
            out.push(Finite(b.clone()));
        }
        out.push(Finite(av));
    }
    Ok(Canonical::new_unchecked(Polynomial::from_coeffs(
        f.low_degree(),
        out,
    )))
}

/// No interior `∞` and `a_{i-1} − a_i` non-decreasing as `i` decreases.
pub fn is_canonical<T: Scalar>(f: &Polynomial<T>) -> Result<bool> {
    f.require_nonzero("is_canonical")?;
    let mut values = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        match c {
            Finite(v) => values.push(v),
            _ => return Ok(false),
        }
    }
    Ok(values.windows(3).all(|w| {
        let outer = w[0].clone() - w[1].clone();
        let inner = w[1].clone() - w[2].clone();
        inner <= outer
    }))
}

/// Whether `a_i` cannot be lowered without changing `f` as a function.
pub fn is_least_coefficient<T: Scalar>(f: &Polynomial<T>, i: usize) -> Result<bool> {
    f.require_degree("is_least_coefficient", i)?;
    supports_degree(f, i)
}

/// Functional equivalence over the whole field, decided by canonical forms.
pub fn equivalent<T: Scalar>(f: &Polynomial<T>, g: &Polynomial<T>) -> bool {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => true,
        (false, false) => canonicalize(f).unwrap() == canonicalize(g).unwrap(),
        _ => false,
    }
}
