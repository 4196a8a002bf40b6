//! Krull dimension of a monomial ideal.
//!
//! The dimension of `V(I)` equals the dimension of `V(in(I))`, which is the
//! largest set of variables containing the support of no leading monomial.
//! Equivalently `nvars` minus a minimum hitting set of those supports; the
//! hitting set is found by branch and bound.

use super::Monomial;

/// Affine dimension of the zero set of the monomial ideal generated by
/// `monomials` in `nvars` variables; `-1` when a generator is constant.
///
/// Panics above 128 variables.
pub fn monomial_ideal_dimension(nvars: usize, monomials: &[Monomial]) -> i64 {
    assert!(nvars <= 128, "dimension search supports at most 128 variables");
    let mut sets: Vec<u128> = Vec::with_capacity(monomials.len());
    for m in monomials {
        let s = m.support().iter().fold(0u128, |acc, &i| acc | (1u128 << i));
        if s == 0 {
            return -1;
        }
        sets.push(s);
    }
    let sets = minimal_sets(sets);
    let mut best = nvars as u32 + 1;
    search(&sets, 0, 0, 0, &mut best);
    nvars as i64 - i64::from(best)
}

/// Drops duplicates and supersets; a set containing another is hit whenever
/// the smaller one is.
fn minimal_sets(mut sets: Vec<u128>) -> Vec<u128> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u128> = Vec::new();
    for s in sets {
        if !out.iter().any(|&t| t & !s == 0) {
            out.push(s);
        }
    }
    out
}

fn search(sets: &[u128], chosen: u128, forbidden: u128, size: u32, best: &mut u32) {
    if size >= *best {
        return;
    }
    let mut branch: Option<u128> = None;
    for &s in sets {
        if s & chosen != 0 {
            continue;
        }
        let avail = s & !forbidden;
        if avail == 0 {
            return;
        }
        if branch.is_none_or(|b| avail.count_ones() < b.count_ones()) {
            branch = Some(avail);
        }
    }
    let Some(avail) = branch else {
        *best = size;
        return;
    };
    // disjoint unhit sets each need their own variable
    let mut used = 0u128;
    let mut lower = 0u32;
    for &s in sets {
        let a = s & !forbidden;
        if s & chosen == 0 && a & used == 0 {
            used |= a;
            lower += 1;
        }
    }
    if size + lower >= *best {
        return;
    }
    let mut forb = forbidden;
    let mut bits = avail;
    while bits != 0 {
        let v = bits & bits.wrapping_neg();
        bits ^= v;
        search(sets, chosen | v, forb, size + 1, best);
        forb |= v;
    }
}
