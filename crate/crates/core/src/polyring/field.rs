//! Exact coefficient fields: the rationals and prime fields `Z/pZ`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The default prime for the modular backend, `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// A coefficient field selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Field {
    /// The rational numbers.
    #[default]
    Rational,
    /// Integers modulo a prime `p < 2^32`.
    Prime(u64),
}

impl Field {
    /// Builds a prime field after checking that `p` is a prime below `2^32`.
    pub fn prime(p: u64) -> Result<Self> {
        if p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                FieldElement::Modular(Zp { value: r, modulus: p })
            }
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64");
                FieldElement::Modular(Zp { value: r, modulus: p })
            }
        }
    }

    /// Maps a rational number into this field. Fails when the denominator
    /// vanishes modulo the prime.
    pub fn from_rational(self, q: &BigRational) -> Result<FieldElement> {
        match self {
            Field::Rational => Ok(FieldElement::Rational(q.clone())),
            Field::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                if den.is_zero() {
                    return Err(Error::FieldConversion(format!("denominator of {q} vanishes in {self}")));
                }
                Ok(num.div(&den))
            }
        }
    }

    /// Parses `"QQ"` or `"Fp:<p>"`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("QQ") || t.eq_ignore_ascii_case("Q") {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix("Fp:").or_else(|| t.strip_prefix("FP:")) {
            let p: u64 =
                rest.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad prime in field spec {s:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidParameter(format!("unknown field {s:?} (expected QQ or Fp:<p>)")))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Deterministic primality test by trial division; adequate for `p < 2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue modulo a prime, always reduced into `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zp {
    value: u64,
    modulus: u64,
}

impl Zp {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn inverse(self) -> Zp {
        assert!(self.value != 0, "division by zero in Fp:{}", self.modulus);
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (self.value, self.modulus - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            exp >>= 1;
        }
        Zp { value: acc, modulus: self.modulus }
    }
}

/// An exact scalar: a reduced rational or a prime-field residue.
///
/// Arithmetic between elements of different fields is a programming error
/// and panics; ring-level operations check compatibility up front.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular(Zp),
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Modular(z) => Field::Prime(z.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Modular(z) => z.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Modular(z) => z.value == 1,
        }
    }

    /// True for a rational with negative sign. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, FieldElement::Rational(q) if q.is_negative())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Modular(_) => None,
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Modular(a), FieldElement::Modular(b)) if a.modulus == b.modulus => {
                let s = a.value + b.value;
                let s = if s >= a.modulus { s - a.modulus } else { s };
                FieldElement::Modular(Zp { value: s, modulus: a.modulus })
            }
            _ => field_mismatch(self, other),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            (FieldElement::Modular(a), FieldElement::Modular(b)) if a.modulus == b.modulus => {
                let s = if a.value >= b.value { a.value - b.value } else { a.value + a.modulus - b.value };
                FieldElement::Modular(Zp { value: s, modulus: a.modulus })
            }
            _ => field_mismatch(self, other),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Modular(a), FieldElement::Modular(b)) if a.modulus == b.modulus => {
                FieldElement::Modular(Zp { value: a.value * b.value % a.modulus, modulus: a.modulus })
            }
            _ => field_mismatch(self, other),
        }
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &FieldElement) -> FieldElement {
        self.mul(&other.inv())
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular(a) => {
                let v = if a.value == 0 { 0 } else { a.modulus - a.value };
                FieldElement::Modular(Zp { value: v, modulus: a.modulus })
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => {
                assert!(!a.is_zero(), "division by zero in QQ");
                FieldElement::Rational(a.recip())
            }
            FieldElement::Modular(a) => FieldElement::Modular(a.inverse()),
        }
    }

    pub fn pow(&self, mut exp: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Parses an integer or `num/den` literal into the given field.
    pub fn parse(s: &str, field: Field) -> Result<FieldElement> {
        let t = s.trim();
        let bad = || Error::Parse { pos: 0, msg: format!("invalid number {t:?}") };
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => {
                (n.trim().parse::<BigInt>().map_err(|_| bad())?, d.trim().parse::<BigInt>().map_err(|_| bad())?)
            }
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(Error::Parse { pos: 0, msg: format!("zero denominator in {t:?}") });
        }
        field.from_rational(&BigRational::new(num, den))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Modular(z) => write!(f, "{}", z.value),
        }
    }
}

fn field_mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}
