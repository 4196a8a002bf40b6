//! Text form of polynomials.
//!
//! Grammar: terms joined by `+`/`-`; a term is
//! `[coeff][*]var[^exp](*var[^exp])*` or a bare coefficient, where a
//! coefficient is an integer or `num/den` and variables are `x0 .. xN`.
//! Whitespace is insignificant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Polynomial, Ring};
use crate::error::{Error, Result};

/// A parsed term before it is placed in a ring: coefficient and `(var, exp)` factors.
type RawTerm = (BigRational, Vec<(usize, u16)>);

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.integer()?;
            if den == BigInt::from(0) {
                return self.err("zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn variable(&mut self) -> Result<(usize, u16)> {
        self.skip_ws();
        if self.src.get(self.pos) != Some(&b'x') {
            return self.err("expected variable x<i>");
        }
        self.pos += 1;
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Err(Error::UnknownVariable(self.word_at(start.saturating_sub(1))));
        }
        let idx = self.integer()?;
        let idx: usize = (&idx).try_into().map_err(|_| Error::UnknownVariable(format!("x{idx}")))?;
        let mut exp = 1u16;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            exp = match u16::try_from(e) {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
        }
        Ok((idx, exp))
    }

    fn word_at(&self, start: usize) -> String {
        let end =
            self.src[start..].iter().position(|c| !c.is_ascii_alphanumeric()).map_or(self.src.len(), |k| start + k);
        String::from_utf8_lossy(&self.src[start..end]).into_owned()
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = BigRational::one();
        let mut factors = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.coefficient()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    factors.push(self.variable()?);
                } else if self.peek() == Some(b'x') {
                    factors.push(self.variable()?);
                }
            }
            Some(b'x') => factors.push(self.variable()?),
            Some(c) if c.is_ascii_alphabetic() => {
                let w = self.word_at(self.pos);
                return Err(Error::UnknownVariable(w));
            }
            Some(_) => return self.err("expected coefficient or variable"),
            None => return self.err("unexpected end of input"),
        }
        if !factors.is_empty() {
            while self.peek() == Some(b'*') {
                self.pos += 1;
                factors.push(self.variable()?);
            }
        }
        Ok((coeff, factors))
    }

    fn polynomial(&mut self) -> Result<Vec<RawTerm>> {
        let mut out = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (c, f) = self.term()?;
            out.push((if sign < 0 { -c } else { c }, f));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(c) if c.is_ascii_alphabetic() && c != b'x' => {
                    let w = self.word_at(self.pos);
                    return Err(Error::UnknownVariable(w));
                }
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
        Ok(out)
    }
}

fn raw_terms(text: &str) -> Result<Vec<RawTerm>> {
    Lexer { src: text.as_bytes(), pos: 0 }.polynomial()
}

fn build(raw: Vec<RawTerm>, ring: Ring) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(raw.len());
    for (c, factors) in raw {
        let mut exps = vec![0u16; ring.nvars];
        for (i, e) in factors {
            if i >= ring.nvars {
                return Err(Error::UnknownVariable(format!("x{i}")));
            }
            exps[i] = exps[i].checked_add(e).ok_or_else(|| Error::Parse { pos: 0, msg: "exponent overflow".into() })?;
        }
        terms.push((Monomial::from_exponents(&exps), ring.field.from_rational(&c)?));
    }
    Polynomial::from_terms(ring, terms)
}

/// Parses `text` into `ring`; variables outside the ring are errors.
pub fn parse_polynomial(text: &str, ring: Ring) -> Result<Polynomial> {
    build(raw_terms(text)?, ring)
}

/// Parses with the variable count inferred as one more than the largest
/// variable index (at least `min_vars`).
pub fn parse_polynomial_infer(text: &str, field: Field, min_vars: usize) -> Result<Polynomial> {
    let raw = raw_terms(text)?;
    let max_idx = raw.iter().flat_map(|(_, f)| f.iter().map(|(i, _)| i + 1)).max().unwrap_or(0);
    build(raw, Ring::new(max_idx.max(min_vars).max(1), field))
}

/// Canonical text form; `parse_polynomial(&format_polynomial(f), f.ring()) == f`.
pub fn format_polynomial(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms().iter().enumerate() {
        let (neg, mag) = if c.is_negative() { (true, c.neg()) } else { (false, c.clone()) };
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&m.to_string());
        } else {
            out.push_str(&format!("{mag}*{m}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::DEFAULT_PRIME;
    use proptest::prelude::*;

    #[test]
    fn parses_table_entry() {
        let f = parse_polynomial("x0^2*x2 + x1^3", Ring::rational(3)).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.partial_derivative(1).unwrap().to_string(), "3*x1^2");
    }

    #[test]
    fn zero_and_constants() {
        assert!(parse_polynomial("0", Ring::rational(2)).unwrap().is_zero());
        assert!(parse_polynomial("x0 - x0", Ring::rational(2)).unwrap().is_zero());
        assert_eq!(parse_polynomial(" - 3/6 ", Ring::rational(1)).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn round_trip_example() {
        let ring = Ring::rational(3);
        let f = parse_polynomial("3*x0*x1^2 - x2^3", ring).unwrap();
        assert_eq!(parse_polynomial(&f.to_string(), ring).unwrap(), f);
        assert_eq!(f.to_string(), "3*x0*x1^2 - x2^3");
    }

    #[test]
    fn implicit_coefficient_product_and_whitespace() {
        let ring = Ring::rational(3);
        let a = parse_polynomial("2x0 x1", ring);
        assert!(a.is_err());
        let b = parse_polynomial("2 x0 * x1 + 1/2*x2^ 2", ring).unwrap();
        assert_eq!(b.to_string(), "2*x0*x1 + 1/2*x2^2");
    }

    #[test]
    fn errors_carry_position_or_name() {
        let ring = Ring::rational(2);
        match parse_polynomial("x0 + * x1", ring) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("x0 + y", ring), Err(Error::UnknownVariable(v)) if v == "y"));
        assert!(matches!(parse_polynomial("x5", ring), Err(Error::UnknownVariable(v)) if v == "x5"));
        assert!(matches!(parse_polynomial("", ring), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("1/0*x0", ring), Err(Error::Parse { .. })));
    }

    #[test]
    fn infers_variable_count() {
        let f = parse_polynomial_infer("x0*x3^2", Field::Rational, 0).unwrap();
        assert_eq!(f.nvars(), 4);
        assert_eq!(parse_polynomial_infer("7", Field::Rational, 0).unwrap().nvars(), 1);
    }

    #[test]
    fn prime_field_parsing_reduces() {
        let ring = Ring::new(1, Field::Prime(DEFAULT_PRIME));
        let f = parse_polynomial("-x0", ring).unwrap();
        assert_eq!(f.to_string(), "2147483646*x0");
        assert_eq!(parse_polynomial(&f.to_string(), ring).unwrap(), f);
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(ts in prop::collection::vec((prop::collection::vec(0u16..4, 3), -20i64..20, 1i64..5), 0..8)) {
            let ring = Ring::rational(3);
            let f = Polynomial::from_terms(ring, ts.into_iter().map(|(e, n, d)| {
                (Monomial::from_exponents(&e), Field::Rational.from_rational(&BigRational::new(n.into(), d.into())).unwrap())
            })).unwrap();
            prop_assert_eq!(parse_polynomial(&format_polynomial(&f), ring).unwrap(), f);
        }
    }
}
