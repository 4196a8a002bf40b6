//! Buchberger's algorithm with the normal selection strategy (least lcm in
//! the monomial order) and the Gebauer-Moeller pair update.

use std::cmp::Ordering;

use super::budget::{Budget, InterruptReason, Interrupted};
use super::{GroebnerBasis, GroebnerStats, Ideal, Reducer};
use crate::polyring::{Monomial, Polynomial, Ring};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State {
    ring: Ring,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GroebnerStats,
}

/// S-polynomial of two nonzero polynomials in the same ring.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, cf) = f.leading_term().expect("nonzero f");
    let (lg, cg) = g.leading_term().expect("nonzero g");
    let lcm = lf.lcm(lg);
    let a = Polynomial::zero(f.ring()).sub_scaled_shifted(&cf.inv().neg(), &lf.quotient_of(&lcm), f);
    a.sub_scaled_shifted(&cg.inv(), &lg.quotient_of(&lcm), g)
}

/// Reduced Groebner basis with no time limit.
pub fn buchberger(ideal: &Ideal) -> GroebnerBasis {
    buchberger_with_budget(ideal, &Budget::unlimited()).expect("unlimited budget")
}

/// Reduced Groebner basis of `ideal` in its ring's order, polling `budget`
/// between pair reductions.
pub fn buchberger_with_budget(ideal: &Ideal, budget: &Budget) -> Result<GroebnerBasis, Interrupted> {
    let ring = ideal.ring();
    let mut st = State {
        ring,
        polys: Vec::new(),
        lms: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        stats: GroebnerStats::default(),
    };

    let mut gens: Vec<&Polynomial> = ideal.generators().iter().collect();
    gens.sort_by(|a, b| {
        ring.order.compare(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero"))
    });
    for g in gens {
        let h = st.reduce(g, budget, 0)?;
        if st.insert(h) {
            return Ok(st.unit());
        }
    }

    while let Some(pair) = st.select() {
        if let Some(reason) = budget.check() {
            return Err(st.interrupted(reason, 1));
        }
        st.stats.pairs_processed += 1;
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j]);
        let h = st.reduce(&s, budget, 1)?;
        if h.is_zero() {
            st.stats.zero_reductions += 1;
            continue;
        }
        if st.insert(h) {
            return Ok(st.unit());
        }
    }
    Ok(st.finish())
}

impl State {
    /// `in_flight` counts the pair being reduced in the pending total.
    fn reduce(&self, f: &Polynomial, budget: &Budget, in_flight: usize) -> Result<Polynomial, Interrupted> {
        let divs: Vec<&Polynomial> = self.active.iter().map(|&k| &self.polys[k]).collect();
        Reducer::new(&divs).reduce_within(f, budget).map_err(|r| self.interrupted(r, in_flight))
    }

    fn interrupted(&self, reason: InterruptReason, extra_pending: usize) -> Interrupted {
        Interrupted {
            reason,
            basis_size: self.active.len(),
            pairs_processed: self.stats.pairs_processed,
            pairs_pending: self.pairs.len() + extra_pending,
        }
    }

    /// Adds a reduced nonzero polynomial; returns true when it is a constant.
    fn insert(&mut self, h: Polynomial) -> bool {
        if h.is_zero() {
            return false;
        }
        let h = h.monic();
        let lm = h.leading_monomial().expect("nonzero").clone();
        if lm.is_one() {
            return true;
        }
        let idx = self.polys.len();
        self.polys.push(h);
        self.lms.push(lm);
        self.update(idx);
        false
    }

    fn update(&mut self, h: usize) {
        let lm_h = self.lms[h].clone();

        let cands: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, lm_h.lcm(&self.lms[g]))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g1, l1)) in cands.iter().enumerate() {
            let coprime = lm_h.is_coprime(&self.lms[*g1]);
            let dominated =
                cands[k + 1..].iter().any(|(_, l2)| l2.divides(l1)) || kept.iter().any(|(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((*g1, l1.clone()));
            }
        }
        // product criterion
        kept.retain(|(g, _)| !lm_h.is_coprime(&self.lms[*g]));

        // chain criterion on old pairs
        let lms = &self.lms;
        self.pairs.retain(|p| !(lm_h.divides(&p.lcm) && lms[p.i].lcm(&lm_h) != p.lcm && lm_h.lcm(&lms[p.j]) != p.lcm));
        self.pairs.extend(kept.into_iter().map(|(g, lcm)| Pair { i: g, j: h, lcm }));

        self.active.retain(|&g| !lm_h.divides(&lms[g]));
        self.active.push(h);
    }

    /// Least lcm in the monomial order; for lex this is not degree-first.
    fn select(&mut self) -> Option<Pair> {
        let order = self.ring.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| order.compare(&a.lcm, &b.lcm).then_with(|| (a.j, a.i).cmp(&(b.j, b.i))))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn unit(self) -> GroebnerBasis {
        GroebnerBasis { ring: self.ring, basis: vec![Polynomial::one(self.ring)], stats: self.stats }
    }

    /// Interreduces the minimal basis into the reduced one.
    fn finish(self) -> GroebnerBasis {
        let order = self.ring.order;
        let mut idx = self.active.clone();
        idx.sort_by(|&a, &b| order.compare(&self.lms[a], &self.lms[b]));
        let mut basis = Vec::with_capacity(idx.len());
        for (k, &g) in idx.iter().enumerate() {
            let others: Vec<&Polynomial> =
                idx.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, &o)| &self.polys[o]).collect();
            let reduced = Reducer::new(&others).reduce(&self.polys[g]);
            debug_assert_eq!(reduced.leading_monomial(), Some(&self.lms[g]));
            basis.push(reduced.monic());
        }
        debug_assert!(basis.windows(2).all(|w| order
            .compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
            == Ordering::Less));
        GroebnerBasis { ring: self.ring, basis, stats: self.stats }
    }
}
