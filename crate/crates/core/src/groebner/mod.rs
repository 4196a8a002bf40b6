//! Ideals, reduced Groebner bases and the dimension of their zero sets.

mod buchberger;
mod budget;
mod dimension;

pub use buchberger::{buchberger, buchberger_with_budget, s_polynomial};
pub use budget::{Budget, CancelToken, InterruptReason, Interrupted};
pub use dimension::monomial_ideal_dimension;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring};

/// An ideal given by generators in a common ring. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let ring = generators
            .first()
            .map(Polynomial::ring)
            .ok_or_else(|| Error::InvalidParameter("an ideal needs at least one generator".into()))?;
        if let Some(bad) = generators.iter().find(|g| g.ring() != ring) {
            return Err(Error::RingMismatch(format!("generator ring {:?} differs from {:?}", bad.ring(), ring)));
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, generators })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The same ideal with generators re-sorted for another order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            ring: self.ring.with_order(order),
            generators: self.generators.iter().map(|g| g.with_order(order)).collect(),
        }
    }
}

/// Counters from a Buchberger run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
}

/// A reduced Groebner basis: monic, with no term of any element divisible
/// by the leading monomial of another. Sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
    stats: GroebnerStats,
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn stats(&self) -> GroebnerStats {
        self.stats
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].leading_monomial().is_some_and(Monomial::is_one)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.basis)
    }

    /// Affine dimension of `V(I)`; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        ideal_dimension(self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        ideal_membership(f, self)
    }
}

/// Remainder of multivariate division: no term of the result is divisible by
/// a leading monomial of `divisors`, and `f - r` lies in their ideal.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    if let Some(bad) = divisors.iter().find(|g| g.ring() != f.ring()) {
        return Err(Error::RingMismatch(format!("divisor ring {:?} vs {:?}", bad.ring(), f.ring())));
    }
    let divs: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let reducer = Reducer::new(&divs);
    Ok(reducer.reduce(f))
}

/// Dimension of the affine zero set of the ideal with basis `gb`, computed
/// from its initial ideal.
pub fn ideal_dimension(gb: &GroebnerBasis) -> i64 {
    monomial_ideal_dimension(gb.ring.nvars, &gb.leading_monomials())
}

pub fn ideal_membership(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    Ok(normal_form(f, &gb.basis)?.is_zero())
}

/// Full reduction against a fixed list of divisors.
pub(crate) struct Reducer<'a> {
    divisors: Vec<(&'a Polynomial, u64)>,
}

impl<'a> Reducer<'a> {
    /// Divisors are tried smallest leading monomial first, which keeps
    /// intermediate degrees low in lex.
    pub(crate) fn new(divisors: &[&'a Polynomial]) -> Self {
        let mut divisors: Vec<(&'a Polynomial, u64)> =
            divisors.iter().map(|g| (*g, g.leading_monomial().expect("nonzero divisor").support_mask())).collect();
        if let Some((g, _)) = divisors.first() {
            let order = g.order();
            divisors.sort_by(|a, b| order.compare(a.0.leading_monomial().unwrap(), b.0.leading_monomial().unwrap()));
        }
        Reducer { divisors }
    }

    fn find(&self, m: &Monomial) -> Option<&'a Polynomial> {
        let mask = m.support_mask();
        self.divisors
            .iter()
            .find(|(g, gm)| gm & !mask == 0 && g.leading_monomial().expect("nonzero").divides(m))
            .map(|(g, _)| *g)
    }

    pub(crate) fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.reduce_within(f, &Budget::unlimited()).expect("unlimited budget")
    }

    /// Reduction that polls `budget` before each step.
    pub(crate) fn reduce_within(&self, f: &Polynomial, budget: &Budget) -> Result<Polynomial, InterruptReason> {
        let mut rem = Polynomial::zero(f.ring());
        let mut p = f.clone();
        let mut pos = 0;
        while pos < p.len() {
            let (m, c) = &p.terms()[pos];
            match self.find(m) {
                Some(g) => {
                    if let Some(reason) = budget.check() {
                        return Err(reason);
                    }
                    let (lm, lc) = g.leading_term().expect("nonzero");
                    let factor = if lc.is_one() { c.clone() } else { c.div(lc) };
                    let q = lm.quotient_of(m);
                    p = p.tail_from(pos).sub_scaled_shifted(&factor, &q, g);
                    pos = 0;
                }
                None => {
                    rem.push_term_unchecked(p.terms()[pos].clone());
                    pos += 1;
                }
            }
        }
        Ok(rem)
    }
}
