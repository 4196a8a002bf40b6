//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::field::{Field, FieldElement};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// The ambient polynomial ring: variable count, coefficient field and term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub nvars: usize,
    pub field: Field,
    pub order: MonomialOrder,
}

impl Ring {
    /// Ring in `nvars` variables with the default grevlex order.
    pub fn new(nvars: usize, field: Field) -> Self {
        Ring { nvars, field, order: MonomialOrder::Grevlex }
    }

    pub fn rational(nvars: usize) -> Self {
        Self::new(nvars, Field::Rational)
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        Ring { order, ..self }
    }

    pub fn with_field(self, field: Field) -> Self {
        Ring { field, ..self }
    }

    pub fn with_nvars(self, nvars: usize) -> Self {
        Ring { nvars, ..self }
    }

    fn check(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch(format!(
                "{} vars over {} ({}) vs {} vars over {} ({})",
                self.nvars, self.field, self.order, other.nvars, other.field, other.order
            )));
        }
        Ok(())
    }
}

pub type Term = (Monomial, FieldElement);

/// A polynomial stored as terms sorted in decreasing monomial order with
/// no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, c: FieldElement) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars), c)
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn monomial(ring: Ring, m: Monomial, c: FieldElement) -> Self {
        assert_eq!(m.nvars(), ring.nvars);
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring, terms: vec![(m, c)] }
    }

    /// The variable `x_i`.
    pub fn var(ring: Ring, i: usize) -> Result<Self> {
        if i >= ring.nvars {
            return Err(Error::IndexOutOfRange { index: i, bound: ring.nvars });
        }
        Ok(Self::monomial(ring, Monomial::var(i, ring.nvars), ring.field.one()))
    }

    /// Linear form `sum_i coeffs[i] * x_i`.
    pub fn linear_form(ring: Ring, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.len() != ring.nvars {
            return Err(Error::ShapeMismatch {
                expected: format!("{} coefficients", ring.nvars),
                found: format!("{}", coeffs.len()),
            });
        }
        Self::from_terms(ring, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(i, ring.nvars), c.clone())))
    }

    /// Collects arbitrary terms; duplicates are summed and zeros dropped.
    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars {
                return Err(Error::RingMismatch(format!(
                    "monomial in {} variables, ring has {}",
                    m.nvars(),
                    ring.nvars
                )));
            }
            if c.field() != ring.field {
                return Err(Error::RingMismatch(format!("coefficient over {}, ring over {}", c.field(), ring.field)));
            }
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: Ring, acc: HashMap<Monomial, FieldElement>) -> Self {
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.order.compare(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// No terms; the same as [`Polynomial::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms
            .binary_search_by(|t| self.ring.order.compare(m, &t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.ring.field.zero())
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// True for the zero polynomial and for forms.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        Ok(self.merge(&other.neg()))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check(&other.ring)?;
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.ring, acc))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect() }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv()),
            _ => self.clone(),
        }
    }

    /// `self - c * m * g`; both operands share the ring (unchecked).
    pub(crate) fn sub_scaled_shifted(&self, c: &FieldElement, m: &Monomial, g: &Polynomial) -> Polynomial {
        let shifted = Polynomial {
            ring: self.ring,
            terms: g.terms.iter().map(|(gm, gc)| (m.mul(gm), gc.mul(c).neg())).collect(),
        };
        self.merge(&shifted)
    }

    /// Merges two sorted term lists, summing equal monomials.
    fn merge(&self, other: &Polynomial) -> Polynomial {
        let order = self.ring.order;
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial { ring: self.ring, terms: out }
    }

    /// Drops the first `k` terms (used by reduction loops).
    pub(crate) fn tail_from(&self, k: usize) -> Polynomial {
        Polynomial { ring: self.ring, terms: self.terms[k..].to_vec() }
    }

    pub(crate) fn push_term_unchecked(&mut self, t: Term) {
        debug_assert!(self.terms.last().is_none_or(|l| self.ring.order.compare(&l.0, &t.0) == Ordering::Greater));
        self.terms.push(t);
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.ring.nvars {
            return Err(Error::IndexOutOfRange { index: i, bound: self.ring.nvars });
        }
        let terms = self.terms.iter().filter(|(m, _)| m.exponents()[i] > 0).map(|(m, c)| {
            let e = m.exponents()[i];
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            (Monomial::from_exponents(&exps), c.mul(&self.ring.field.from_i64(i64::from(e))))
        });
        // Lowering one exponent preserves relative order only for graded
        // orders; rebuild to stay canonical in every order.
        Self::from_terms(self.ring, terms)
    }

    /// All partial derivatives `[df/dx_0, ..., df/dx_n]`.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars).map(|i| self.partial_derivative(i).expect("index in range")).collect()
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.ring.nvars {
            return Err(Error::ShapeMismatch {
                expected: format!("point of length {}", self.ring.nvars),
                found: format!("length {}", point.len()),
            });
        }
        if let Some(bad) = point.iter().find(|p| p.field() != self.ring.field) {
            return Err(Error::RingMismatch(format!(
                "point coordinate over {}, ring over {}",
                bad.field(),
                self.ring.field
            )));
        }
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v = v.mul(&x.pow(u32::from(e)));
                }
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// Returns `f(A^T x)`, i.e. `x_i` is replaced by `sum_j A[j][i] x_j`.
    pub fn substitute_linear(&self, a: &[Vec<FieldElement>]) -> Result<Polynomial> {
        let n = self.ring.nvars;
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch {
                expected: format!("{n}x{n} matrix"),
                found: format!("{} rows", a.len()),
            });
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let col: Vec<FieldElement> = (0..n).map(|j| a[j][i].clone()).collect();
                Polynomial::linear_form(self.ring, &col)
            })
            .collect::<Result<_>>()?;
        let mut power_cache: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(self.ring);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(self.ring, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = power_cache.entry((i, e)).or_insert_with(|| images[i].pow(u32::from(e)));
                t = t.mul(p)?;
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Maps coefficients into another field (rational -> prime, or identity).
    pub fn change_field(&self, field: Field) -> Result<Polynomial> {
        if field == self.ring.field {
            return Ok(self.clone());
        }
        let ring = self.ring.with_field(field);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| match c {
                FieldElement::Rational(q) => Ok((m.clone(), field.from_rational(q)?)),
                FieldElement::Modular(_) => {
                    Err(Error::FieldConversion(format!("cannot lift {} coefficients to {}", self.ring.field, field)))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(ring, terms)
    }

    /// Re-sorts the terms for another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let mut p = Polynomial { ring: self.ring.with_order(order), terms: self.terms.clone() };
        p.terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        p
    }

    /// Embeds into `nvars` variables, sending `x_i` to `x_{i+offset}`.
    pub fn shift_variables(&self, nvars: usize, offset: usize) -> Result<Polynomial> {
        if offset + self.ring.nvars > nvars {
            return Err(Error::IndexOutOfRange { index: offset + self.ring.nvars, bound: nvars + 1 });
        }
        let ring = self.ring.with_nvars(nvars);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; nvars];
            exps[offset..offset + m.nvars()].copy_from_slice(m.exponents());
            (Monomial::from_exponents(&exps), c.clone())
        });
        Self::from_terms(ring, terms)
    }

    /// Indices of the variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_polynomial(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse::parse_polynomial;
    use crate::polyring::DEFAULT_PRIME;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, Ring::rational(n)).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x0^2 + x1", 2).add(&p("-x1", 2)).unwrap(), p("x0^2", 2));
        let f = p("3*x0*x1 - 2", 2);
        assert_eq!(f.add(&Polynomial::zero(f.ring())).unwrap(), f);
        assert_eq!(p("x0*x1^2", 3).add(&p("x0^2*x2", 3)).unwrap(), p("x0*x1^2 + x0^2*x2", 3));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        assert!(matches!(p("x0", 2).add(&p("x0", 3)), Err(Error::RingMismatch(_))));
        let q = p("x0", 2).change_field(Field::Prime(DEFAULT_PRIME)).unwrap();
        assert!(p("x0", 2).mul(&q).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x0", 3).mul(&p("x1^2 + x2^2", 3)).unwrap(), p("x0*x1^2 + x0*x2^2", 3));
        let f = p("x0 - 4*x2", 3);
        assert_eq!(f.mul(&Polynomial::one(f.ring())).unwrap(), f);
        assert_eq!(p("x0 + x1", 3).pow(2).mul(&p("x2", 3)).unwrap(), p("x0^2*x2 + 2*x0*x1*x2 + x1^2*x2", 3));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x0^2*x2 + x1^3", 3).partial_derivative(1).unwrap(), p("3*x1^2", 3));
        assert!(p("7", 2).partial_derivative(0).unwrap().is_zero());
        let f = p("x0*x1^2", 2);
        assert_eq!(f.partial_derivative(0).unwrap(), p("x1^2", 2));
        assert_eq!(f.partial_derivative(1).unwrap(), p("2*x0*x1", 2));
        assert!(matches!(f.partial_derivative(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn evaluate_examples() {
        let q = Field::Rational;
        assert!(p("x0^2*x1", 2).evaluate(&[q.one(), q.one()]).unwrap().is_one());
        assert!(p("x0^2 + x0*x1 + x1^2", 2).evaluate(&[q.one(), q.from_i64(-1)]).unwrap().is_one());
        assert!(p("x0^3 + 5*x0*x1^2", 2).evaluate(&[q.zero(), q.zero()]).unwrap().is_zero());
        assert!(p("x0", 2).evaluate(&[q.one()]).is_err());
    }

    #[test]
    fn substitute_examples() {
        let q = Field::Rational;
        let id = vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]];
        let f = p("x0^2*x1 - 3*x1^3", 2);
        assert_eq!(f.substitute_linear(&id).unwrap(), f);
        let swap = vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]];
        assert_eq!(p("x0^2", 2).substitute_linear(&swap).unwrap(), p("x1^2", 2));
        let kill = vec![vec![q.one(), q.zero()], vec![q.zero(), q.zero()]];
        assert!(p("x0^2*x1", 2).substitute_linear(&kill).unwrap().is_zero());
        assert!(f.substitute_linear(&id[..1]).is_err());
    }

    #[test]
    fn lex_order_sorting() {
        let f = p("x1^3 + x0", 2).with_order(MonomialOrder::Lex);
        assert_eq!(f.leading_monomial().unwrap().exponents(), &[1, 0]);
        let g = p("x1^3 + x0", 2);
        assert_eq!(g.leading_monomial().unwrap().exponents(), &[0, 3]);
    }

    // ---- randomized algebraic laws ----

    fn arb_poly(nvars: usize, field: Field) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u16..3, nvars), -6i64..7), 0..6).prop_map(move |ts| {
            let ring = Ring::new(nvars, field);
            Polynomial::from_terms(ring, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), field.from_i64(c))))
                .unwrap()
        })
    }

    fn arb_form(nvars: usize, deg: u16) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u16..=deg, nvars), -6i64..7), 0..6).prop_map(move |ts| {
            let ring = Ring::rational(nvars);
            let terms = ts.into_iter().filter_map(|(mut e, c)| {
                // push the exponent vector onto total degree `deg`
                let s: u16 = e.iter().sum();
                if s > deg {
                    return None;
                }
                e[0] += deg - s;
                Some((Monomial::from_exponents(&e), Field::Rational.from_i64(c)))
            });
            Polynomial::from_terms(ring, terms).unwrap()
        })
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<FieldElement>>> {
        prop::collection::vec(prop::collection::vec(-3i64..4, n), n).prop_map(|rows| {
            rows.into_iter().map(|r| r.into_iter().map(|v| Field::Rational.from_i64(v)).collect()).collect()
        })
    }

    fn matmul(a: &[Vec<FieldElement>], b: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n).map(|j| (0..n).fold(Field::Rational.zero(), |s, k| s.add(&a[i][k].mul(&b[k][j])))).collect()
            })
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms_rational(f in arb_poly(3, Field::Rational), g in arb_poly(3, Field::Rational), h in arb_poly(3, Field::Rational)) {
            prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.add(&g).unwrap().add(&h).unwrap(), f.add(&g.add(&h).unwrap()).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            prop_assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
            prop_assert!(f.sub(&f).unwrap().is_zero());
        }

        #[test]
        fn ring_axioms_prime(f in arb_poly(3, Field::Prime(7)), g in arb_poly(3, Field::Prime(7)), h in arb_poly(3, Field::Prime(7))) {
            prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
            prop_assert_eq!(
                f.mul(&g.add(&h).unwrap()).unwrap(),
                f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap()
            );
        }

        #[test]
        fn derivative_is_linear_and_leibniz(f in arb_poly(3, Field::Rational), g in arb_poly(3, Field::Rational), i in 0usize..3) {
            let d = |p: &Polynomial| p.partial_derivative(i).unwrap();
            prop_assert_eq!(d(&f.add(&g).unwrap()), d(&f).add(&d(&g)).unwrap());
            prop_assert_eq!(
                d(&f.mul(&g).unwrap()),
                d(&f).mul(&g).unwrap().add(&f.mul(&d(&g)).unwrap()).unwrap()
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn euler_identity(f in arb_form(4, 3)) {
            let ring = f.ring();
            let mut lhs = Polynomial::zero(ring);
            for i in 0..4 {
                let xi = Polynomial::var(ring, i).unwrap();
                lhs = lhs.add(&xi.mul(&f.partial_derivative(i).unwrap()).unwrap()).unwrap();
            }
            prop_assert_eq!(lhs, f.scale(&Field::Rational.from_i64(3)));
        }

        #[test]
        fn substitution_composes(f in arb_form(3, 3), a in arb_matrix(3), b in arb_matrix(3)) {
            // f((AB)^T x) = (x -> f(A^T x)) evaluated at B^T x
            let lhs = f.substitute_linear(&b).unwrap().substitute_linear(&a).unwrap();
            let rhs = f.substitute_linear(&matmul(&a, &b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
