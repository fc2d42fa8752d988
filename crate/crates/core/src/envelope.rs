//! The lower envelope `x ↦ min_i (a_i + i·x)` of a polynomial's monomial lines.
//!
//! By point/line duality the lines that appear on the envelope are exactly the
//! support points `(i, a_i)` on the lower convex hull, and the breakpoint
//! between hull neighbours `u < v` is `(a_u - a_v) / (v - u)`.

use crate::error::Result;
use crate::polynomial::Polynomial;
use crate::Scalar;

/// One linear piece of the envelope: on `[lo, hi]` the minimum is `a_degree + degree·x`.
/// `lo = None` means `-∞`, `hi = None` means `+∞`. Degenerate pieces with
/// `lo == hi` occur for collinear hull points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece<T> {
    pub degree: usize,
    pub lo: Option<T>,
    pub hi: Option<T>,
}

impl<T: Scalar> Piece<T> {
    pub fn contains(&self, x: &T) -> bool {
        self.lo.as_ref().is_none_or(|lo| lo <= x) && self.hi.as_ref().is_none_or(|hi| x <= hi)
    }
}

/// Pieces ordered left to right (degrees strictly decreasing) and the
/// distinct breakpoints in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope<T> {
    pub pieces: Vec<Piece<T>>,
    pub breakpoints: Vec<T>,
}

impl<T: Scalar> Envelope<T> {
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.pieces.iter().map(|p| p.degree)
    }
}

/// Degrees of the lower convex hull of `{(i, a_i) : a_i finite}`, increasing.
///
/// Monotone-chain scan. Points on a hull edge are kept.
pub fn lower_hull<T: Scalar>(f: &Polynomial<T>) -> Vec<usize> {
    let mut hull: Vec<(usize, &T)> = Vec::new();
    for p in f.terms() {
        while hull.len() >= 2 && T::above_chord(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    hull.into_iter().map(|(i, _)| i).collect()
}

fn crossing<T: Scalar>(f: &Polynomial<T>, u: usize, v: usize) -> T {
    let au = f.coeff(u).into_finite().unwrap();
    let av = f.coeff(v).into_finite().unwrap();
    (au - av) / T::from_degree(v - u)
}

pub fn lower_envelope<T: Scalar>(f: &Polynomial<T>) -> Result<Envelope<T>> {
    f.require_nonzero("lower_envelope")?;
    let hull = lower_hull(f);
    // crossings[k] lies between hull[k] and hull[k + 1]; non-increasing in k.
    let crossings: Vec<T> = hull.windows(2).map(|w| crossing(f, w[0], w[1])).collect();
    let pieces = (0..hull.len())
        .rev()
        .map(|k| Piece {
            degree: hull[k],
            lo: crossings.get(k).cloned(),
            hi: k.checked_sub(1).map(|j| crossings[j].clone()),
        })
        .collect();
    let mut breakpoints: Vec<T> = Vec::with_capacity(crossings.len());
    for x in crossings.into_iter().rev() {
        if breakpoints.last() != Some(&x) {
            breakpoints.push(x);
        }
    }
    Ok(Envelope {
        pieces,
        breakpoints,
    })
}

/// Whether some finite `x₀` has `f(x₀) = a_i + i·x₀`, i.e. whether `(i, a_i)`
/// is on the lower hull.
pub fn supports_degree<T: Scalar>(f: &Polynomial<T>, i: usize) -> Result<bool> {
    f.require_degree("supports_degree", i)?;
    if f.coeff(i).is_infinite() {
        return Ok(false);
    }
    Ok(lower_hull(f).binary_search(&i).is_ok())
}

/// The corner locus: distinct points where two or more monomials attain the minimum.
pub fn breakpoints<T: Scalar>(f: &Polynomial<T>) -> Result<Vec<T>> {
    f.require_nonzero("breakpoints")?;
    Ok(lower_envelope(f)?.breakpoints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalar::Finite;
    use crate::{BigRational, TropPoly};
    use proptest::prelude::*;

    fn q(s: &str) -> BigRational {
        s.parse::<crate::ExtendedRational>().unwrap().into_finite().unwrap()
    }

    fn p(s: &str) -> TropPoly {
        s.parse().unwrap()
    }

    fn piece(degree: usize, lo: Option<&str>, hi: Option<&str>) -> Piece<BigRational> {
        Piece {
            degree,
            lo: lo.map(q),
            hi: hi.map(q),
        }
    }

    #[test]
    fn triple_tie_keeps_degenerate_middle_piece() {
        let env = lower_envelope(&p("x^2 + 3x + 6")).unwrap();
        assert_eq!(
            env.pieces,
            vec![
                piece(2, None, Some("3")),
                piece(1, Some("3"), Some("3")),
                piece(0, Some("3"), None)
            ]
        );
        assert_eq!(env.breakpoints, vec![q("3")]);

        let env = lower_envelope(&p("x^2 + 1x + 2")).unwrap();
        assert_eq!(
            env.pieces,
            vec![
                piece(2, None, Some("1")),
                piece(1, Some("1"), Some("1")),
                piece(0, Some("1"), None)
            ]
        );
        assert_eq!(env.breakpoints, vec![q("1")]);
    }

    #[test]
    fn constant_is_one_piece() {
        let env = lower_envelope(&p("5")).unwrap();
        assert_eq!(env.pieces, vec![piece(0, None, None)]);
        assert!(env.breakpoints.is_empty());
    }

    #[test]
    fn non_least_line_is_skipped() {
        let env = lower_envelope(&p("x^2 + 4x + 6")).unwrap();
        assert_eq!(env.degrees().collect::<Vec<_>>(), vec![2, 0]);
        assert_eq!(env.breakpoints, vec![q("3")]);
    }

    #[test]
    fn supports_degree_examples() {
        assert!(!supports_degree(&p("x^2 + 4x + 6"), 1).unwrap());
        assert!(supports_degree(&p("x^2 + 4x + 6"), 2).unwrap());
        assert!(supports_degree(&p("x^2 + 1x + 2"), 1).unwrap());
        assert!(!supports_degree(&p("x^2 + inf x + 2"), 1).unwrap());
        assert!(matches!(
            supports_degree(&p("x^2 + 1x"), 0),
            Err(Error::DegreeOutOfRange { degree: 0, low: 1, high: 2, .. })
        ));
        assert!(matches!(
            supports_degree(&TropPoly::zero(), 0),
            Err(Error::ZeroPolynomial { .. })
        ));
    }

    #[test]
    fn breakpoint_examples() {
        assert_eq!(breakpoints(&p("x^2 + 4x + 6")).unwrap(), vec![q("3")]);
        assert_eq!(breakpoints(&p("x^3 + 1x^2 + 3x + 6")).unwrap(), vec![q("1"), q("2"), q("3")]);
        assert!(breakpoints(&p("7x^4")).unwrap().is_empty());
        assert!(breakpoints(&TropPoly::zero()).is_err());
    }

    #[test]
    fn hull_over_gaps() {
        // (1,0), (4,-3), (6,5): the interior gap does not matter.
        let f = p("5x^6 + -3x^4 + x");
        assert_eq!(lower_hull(&f), vec![1, 4, 6]);
        assert_eq!(breakpoints(&f).unwrap(), vec![q("-4"), q("1")]);
    }

    /// Brute force: a degree is active if some candidate point makes it a minimizer.
    fn active_by_sampling(f: &TropPoly) -> Vec<usize> {
        let terms: Vec<(usize, BigRational)> = f.terms().map(|(i, a)| (i, a.clone())).collect();
        let mut xs = vec![];
        for (i, a) in &terms {
            for (j, b) in &terms {
                if i < j {
                    xs.push((a - b) / BigRational::from_integer((*j - *i).into()));
                }
            }
        }
        let big = BigRational::from_integer(1_000_000.into());
        xs.push(big.clone());
        xs.push(-big);
        let mut active: Vec<usize> = xs
            .iter()
            .flat_map(|x| f.argmin_monomials(&Finite(x.clone())).unwrap())
            .collect();
        active.sort_unstable();
        active.dedup();
        active.reverse();
        active
    }

    proptest! {
        #[test]
        fn pieces_match_evaluation(f in crate::polynomial::tests::poly(9).prop_filter("nonzero", |f| !f.is_zero())) {
            let env = lower_envelope(&f).unwrap();
            prop_assert_eq!(env.degrees().collect::<Vec<_>>(), active_by_sampling(&f));
            prop_assert!(env.degrees().collect::<Vec<_>>().windows(2).all(|w| w[0] > w[1]));
            let one = BigRational::from_integer(1.into());
            for pc in &env.pieces {
                let a = f.coeff(pc.degree).into_finite().unwrap();
                let line = |x: &BigRational| Finite(a.clone() + BigRational::from_integer(pc.degree.into()) * x);
                let sample = match (&pc.lo, &pc.hi) {
                    (Some(lo), Some(hi)) => (lo + hi) / BigRational::from_integer(2.into()),
                    (Some(lo), None) => lo + &one,
                    (None, Some(hi)) => hi - &one,
                    (None, None) => one.clone(),
                };
                prop_assert!(pc.contains(&sample));
                prop_assert_eq!(f.eval_at(&sample), line(&sample));
                // Just outside a non-degenerate boundary a different degree is strictly better.
                if let (Some(lo), Some(hi)) = (&pc.lo, &pc.hi) {
                    if lo == hi { continue; }
                }
                for outside in [pc.lo.as_ref().map(|lo| lo - &one), pc.hi.as_ref().map(|hi| hi + &one)].into_iter().flatten() {
                    prop_assert!(f.eval_at(&outside) < line(&outside));
                }
            }
            for x in &env.breakpoints {
                prop_assert!(f.argmin_monomials(&Finite(x.clone())).unwrap().len() >= 2);
            }
        }
    }
}
