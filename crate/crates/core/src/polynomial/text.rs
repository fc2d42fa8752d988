//! Text grammar for scalars and polynomials.
//!
//! ```text
//! expr   := term ("+" term)*
//! term   := scalar ["*"] "x" ["^" digits] | scalar | "x" ["^" digits]
//! scalar := ["+" | "-"] digits ["/" digits] | ["+"] "inf"
//! ```
//!
//! `+` between terms is tropical addition. Whitespace is insignificant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::PolyExpr;
use crate::error::ParseError;
use crate::scalar::{Finite, Infinity};
use crate::ExtendedRational;

/// Largest accepted exponent.
pub const MAX_EXPONENT: u64 = u32::MAX as u64;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn err(&self, reason: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, reason)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(_) => {
                let rest = std::str::from_utf8(&self.src[self.pos..]).unwrap_or("");
                let c = rest.chars().next().unwrap_or('?');
                self.err(format!("unexpected '{c}'"))
            }
            None => self.err("unexpected end of input"),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn keyword(&mut self, word: &str) -> bool {
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    /// Scalar literal, or `None` if the next token cannot start one.
    fn scalar(&mut self) -> Result<Option<ExtendedRational>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => {
                if !self.peek().is_some_and(|b| b.is_ascii_digit() || b == b'i') {
                    return Ok(None);
                }
                false
            }
        };
        self.skip_ws();
        if self.keyword("inf") {
            if negative {
                return Err(ParseError::new(start, "∞ cannot be negated"));
            }
            return Ok(Some(Infinity));
        }
        let numer = match self.digits() {
            Some(d) => d,
            None => return Err(self.err("malformed rational: expected digits")),
        };
        let mut value = BigRational::from_integer(numer.parse::<BigInt>().unwrap());
        self.skip_ws();
        match self.peek() {
            Some(b'/') => {
                self.pos += 1;
                self.skip_ws();
                let denom_pos = self.pos;
                let denom: BigInt = match self.digits() {
                    Some(d) => d.parse().unwrap(),
                    None => return Err(self.err("malformed rational: expected denominator")),
                };
                if denom.is_zero() {
                    return Err(ParseError::new(denom_pos, "malformed rational: zero denominator"));
                }
                value /= BigRational::from_integer(denom);
            }
            Some(b'.') => return Err(self.err("malformed rational: decimal point not supported")),
            _ => {}
        }
        if negative {
            value = -value;
        }
        Ok(Some(Finite(value)))
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            return Err(self.err("negative exponent"));
        }
        let start = self.pos;
        let digits = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        match digits.parse::<u64>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(e as usize),
            _ => Err(ParseError::new(start, "exponent too large")),
        }
    }

    fn term(&mut self) -> Result<(ExtendedRational, usize), ParseError> {
        let coef = self.scalar()?;
        let star = coef.is_some() && self.eat(b'*');
        self.skip_ws();
        if self.peek() == Some(b'x') {
            self.pos += 1;
            let exp = if self.eat(b'^') { self.exponent()? } else { 1 };
            Ok((coef.unwrap_or(Finite(BigRational::zero())), exp))
        } else if star {
            Err(self.err("expected 'x' after '*'"))
        } else {
            match coef {
                Some(c) => Ok((c, 0)),
                None => Err(self.unexpected()),
            }
        }
    }
}

pub fn parse_expr(src: &str) -> Result<PolyExpr<BigRational>, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return Err(cur.err("empty input"));
    }
    let mut terms = Vec::new();
    loop {
        terms.push(cur.term()?);
        if cur.at_end() {
            break;
        }
        if !cur.eat(b'+') {
            return Err(cur.unexpected());
        }
        if cur.at_end() {
            return Err(cur.err("expected term after '+'"));
        }
    }
    Ok(PolyExpr { terms })
}

pub fn parse_scalar(src: &str) -> Result<ExtendedRational, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return Err(cur.err("empty input"));
    }
    let value = cur.scalar()?.ok_or_else(|| cur.unexpected())?;
    if !cur.at_end() {
        return Err(cur.unexpected());
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExtendedRational {
        parse_scalar(s).unwrap()
    }

    fn terms(src: &str) -> Vec<(ExtendedRational, usize)> {
        parse_expr(src).unwrap().terms
    }

    #[test]
    fn quadratic() {
        assert_eq!(terms("x^2 + 4x + 6"), vec![(q("0"), 2), (q("4"), 1), (q("6"), 0)]);
    }

    #[test]
    fn infinity_literal() {
        assert_eq!(terms("inf"), vec![(Infinity, 0)]);
        assert_eq!(terms("inf x^3 + 1"), vec![(Infinity, 3), (q("1"), 0)]);
    }

    #[test]
    fn rational_and_negative() {
        assert_eq!(terms("1/2 x^3 + -2x"), vec![(q("1/2"), 3), (q("-2"), 1)]);
        assert_eq!(terms("3*x^2+ - 1 / 3 * x"), vec![(q("3"), 2), (q("-1/3"), 1)]);
        assert_eq!(terms("  x  "), vec![(q("0"), 1)]);
        assert_eq!(terms("x^0 + x^2 + x^2"), vec![(q("0"), 0), (q("0"), 2), (q("0"), 2)]);
    }

    #[test]
    fn errors_carry_position() {
        let cases = [
            ("", 0, "empty input"),
            ("   ", 3, "empty input"),
            ("x^-2", 2, "negative exponent"),
            ("1/0 x", 2, "malformed rational: zero denominator"),
            ("x + ", 4, "expected term after '+'"),
            ("x + y", 4, "unexpected 'y'"),
            ("2 3", 2, "unexpected '3'"),
            ("1.5x", 1, "malformed rational: decimal point not supported"),
            ("3 * 4", 4, "expected 'x' after '*'"),
            ("x^", 2, "expected exponent"),
            ("x^99999999999", 2, "exponent too large"),
            ("-x", 1, "malformed rational: expected digits"),
            ("x x", 2, "unexpected 'x'"),
        ];
        for (src, pos, reason) in cases {
            let err = parse_expr(src).unwrap_err();
            assert_eq!((err.position, err.reason.as_str()), (pos, reason), "{src:?}");
        }
    }
}
