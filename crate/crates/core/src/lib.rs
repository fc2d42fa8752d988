//! Univariate tropical (min-plus) polynomials.
//!
//! Coefficients live in `T ∪ {∞}` where `a ⊕ b = min(a, b)` and `a ⊙ b = a + b`.
//! The crate computes the least-coefficient representative of a polynomial's
//! functional-equivalence class, factors it into linear factors `(x ⊕ d)`, and
//! reports the corner locus (the points where two monomials tie for the minimum).
//!
//! Everything is generic over an ordered-field scalar [`Scalar`]. The
//! [`BigRational`] instantiation is exact and is what the CLI and the aliases
//! below ([`ExtendedRational`], [`TropPoly`], ...) use. Floating-point scalars
//! compile, but equality-based predicates on them are only as good as the
//! rounding allows.
//!
//! ```
//! use tropical::{TropPoly, canonicalize, factor};
//!
//! let f: TropPoly = "x^2 + 4x + 6".parse().unwrap();
//! assert_eq!(canonicalize(&f).unwrap().to_string(), "x^2 + 3x + 6");
//! assert_eq!(factor(&f).unwrap().to_string(), "0 * (x + 3)^2");
//! ```

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

pub mod canonical;
pub mod cli;
pub mod envelope;
mod error;
pub mod factorization;
pub mod polynomial;
pub mod scalar;

pub use canonical::{
    canonicalize, canonicalize_naive, equivalent, is_canonical, is_least_coefficient, Canonical,
};
pub use envelope::{breakpoints, lower_envelope, lower_hull, supports_degree, Envelope, Piece};
pub use error::{Error, ParseError, Result};
pub use factorization::{expand, factor, multiplicity, zero_locus, Factored};
pub use polynomial::{PolyExpr, Polynomial};
pub use scalar::{trop_add, trop_inverse, trop_mul, trop_pow, Tropical};

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Ratio, Rational64};

/// Ordered field usable as the finite part of a tropical scalar.
///
/// Implemented for `BigRational`, the fixed-width rationals, `f64` and `f32`.
pub trait Scalar: Clone + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + Debug {
    /// Whether field operations are exact. Self-checks that compare results
    /// for equality only run for exact types.
    const EXACT: bool;

    /// The degree `i` as a scalar, for slopes `i·x`.
    fn from_degree(i: usize) -> Self {
        Self::from_usize(i).expect("degree not representable in scalar type")
    }

    /// Whether the point `mid` lies strictly above the segment from `left` to
    /// `right`, where points are `(degree, value)` with increasing degrees.
    fn above_chord(left: (usize, &Self), mid: (usize, &Self), right: (usize, &Self)) -> bool {
        let run_mid = Self::from_degree(mid.0 - left.0);
        let run_right = Self::from_degree(right.0 - left.0);
        (mid.1.clone() - left.1.clone()) * run_right > (right.1.clone() - left.1.clone()) * run_mid
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn above_chord(left: (usize, &Self), mid: (usize, &Self), right: (usize, &Self)) -> bool {
        match small_above_chord(left, mid, right) {
            Some(above) => above,
            None => {
                let run_mid = BigRational::from_degree(mid.0 - left.0);
                let run_right = BigRational::from_degree(right.0 - left.0);
                (mid.1 - left.1) * run_right > (right.1 - left.1) * run_mid
            }
        }
    }
}

/// Machine-integer turn test; `None` when an operand or product overflows.
fn small_above_chord(
    left: (usize, &BigRational),
    mid: (usize, &BigRational),
    right: (usize, &BigRational),
) -> Option<bool> {
    use num_traits::ToPrimitive;
    let parts = |q: &BigRational| Some((q.numer().to_i64()? as i128, q.denom().to_i64()? as i128));
    let (n1, d1) = parts(left.1)?;
    let (n2, d2) = parts(mid.1)?;
    let (n3, d3) = parts(right.1)?;
    let run_mid = i128::try_from(mid.0 - left.0).ok()?;
    let run_right = i128::try_from(right.0 - left.0).ok()?;
    // Scale both sides by d1·d2·d3 > 0.
    let rise_mid = n2.checked_mul(d1)?.checked_sub(n1.checked_mul(d2)?)?;
    let rise_right = n3.checked_mul(d1)?.checked_sub(n1.checked_mul(d3)?)?;
    let lhs = rise_mid.checked_mul(d3)?.checked_mul(run_right)?;
    let rhs = rise_right.checked_mul(d2)?.checked_mul(run_mid)?;
    Some(lhs > rhs)
}

impl Scalar for Rational64 {
    const EXACT: bool = true;
}

impl Scalar for Ratio<i128> {
    const EXACT: bool = true;
}

impl Scalar for f64 {
    const EXACT: bool = false;
}

impl Scalar for f32 {
    const EXACT: bool = false;
}

/// Exact rational or `∞`.
pub type ExtendedRational = Tropical<BigRational>;
/// Formal tropical polynomial with exact rational coefficients.
pub type TropPoly = Polynomial<BigRational>;
/// Least-coefficient polynomial with exact rational coefficients.
pub type CanonicalPoly = Canonical<BigRational>;
/// Linear-factor decomposition with exact rational roots.
pub type Factorization = Factored<BigRational>;
/// Lower envelope with exact rational breakpoints.
pub type RationalEnvelope = Envelope<BigRational>;
/// Parsed textual expression with exact rational coefficients.
pub type RationalExpr = PolyExpr<BigRational>;
