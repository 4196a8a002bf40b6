//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 24]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| u32::from(e)).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 24]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| u32::from(e)).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables that occur (first 64 variables only).
    pub fn support_mask(&self) -> u64 {
        self.exps.iter().enumerate().take(64).filter(|(_, &e)| e > 0).fold(0u64, |m, (i, _)| m | (1 << i))
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial order with variable precedence `x0 > x1 > ... > xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Pure lexicographic.
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                // smaller exponent in the last differing variable wins
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x0^2 > x0*x1 > x1^2, and x0*x2 < x1^2 in grevlex
        assert_eq!(o.compare(&mono(&[2, 0, 0]), &mono(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.compare(&mono(&[1, 1, 0]), &mono(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.compare(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.compare(&mono(&[0, 0, 2]), &mono(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.compare(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = mono(&[1, 2, 0]);
        let b = mono(&[2, 1, 1]);
        assert!(!a.divides(&b));
        let l = a.lcm(&b);
        assert_eq!(l, mono(&[2, 2, 1]));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l), mono(&[1, 0, 1]));
        assert!(mono(&[1, 0, 0]).is_coprime(&mono(&[0, 3, 1])));
        assert_eq!(mono(&[1, 0, 2]).support_mask(), 0b101);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u16..4, 4).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #[test]
        fn grevlex_is_total_multiplicative_and_graded(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let o = MonomialOrder::Grevlex;
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if a.degree() != b.degree() {
                prop_assert_eq!(ab, a.degree().cmp(&b.degree()));
            }
            prop_assert_eq!(ab, o.compare(&a.mul(&c), &b.mul(&c)));
            if ab == Ordering::Less && o.compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.compare(&a, &c), Ordering::Less);
            }
        }

        #[test]
        fn lex_is_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let o = MonomialOrder::Lex;
            prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&c), &b.mul(&c)));
        }
    }
}
