//! Exact tensors, their associated forms, and the named tensors studied
//! with symmetric geometric rank.
//!
//! A symmetric tensor stores one value per sorted multi-index. Its form is
//! the sum over all index tuples, so a sorted entry contributes with its
//! multinomial multiplicity: `e0 (x) e1 (x) e1` plus its permutations is
//! `3*x0*x1^2`.

mod constructors;
mod hypergraph;
mod json;

pub use constructors::{
    big_cw, complete_homogeneous_cubic, identity_tensor, max_compressibility, small_cw, sym_matrix_mult,
    table1_normal_form, w_state,
};
pub use hypergraph::Hypergraph;
pub use json::Tensor;

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{Field, FieldElement, Matrix, Monomial, Polynomial, Ring};

/// Symmetric tensor of order `d` over a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricTensor {
    order: usize,
    dim: usize,
    field: Field,
    entries: BTreeMap<Vec<usize>, FieldElement>,
}

/// Tensor of order `d` with every factor of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralTensor {
    order: usize,
    dim: usize,
    field: Field,
    entries: BTreeMap<Vec<usize>, FieldElement>,
}

fn check_shape(order: usize, dim: usize) -> Result<()> {
    if order == 0 || dim == 0 {
        return Err(Error::InvalidParameter(format!("tensor of order {order} and dimension {dim}")));
    }
    Ok(())
}

fn check_index(idx: &[usize], order: usize, dim: usize) -> Result<()> {
    if idx.len() != order {
        return Err(Error::ShapeMismatch {
            expected: format!("index of length {order}"),
            found: format!("length {}", idx.len()),
        });
    }
    if let Some(&i) = idx.iter().find(|&&i| i >= dim) {
        return Err(Error::IndexOutOfRange { index: i, bound: dim });
    }
    Ok(())
}

fn check_field(v: &FieldElement, field: Field) -> Result<()> {
    if v.field() != field {
        return Err(Error::RingMismatch(format!("entry over {}, tensor over {field}", v.field())));
    }
    Ok(())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `d! / prod(alpha_i!)` for the exponent vector of a sorted multi-index.
fn multinomial(exps: &[u16]) -> BigInt {
    let d: usize = exps.iter().map(|&e| usize::from(e)).sum();
    exps.iter().fold(factorial(d), |acc, &e| acc / factorial(usize::from(e)))
}

fn exponents_of(idx: &[usize], dim: usize) -> Vec<u16> {
    let mut e = vec![0u16; dim];
    for &i in idx {
        e[i] += 1;
    }
    e
}

fn index_of(m: &Monomial) -> Vec<usize> {
    m.exponents().iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, usize::from(e))).collect()
}

/// Every distinct rearrangement of a sorted multi-index.
fn distinct_permutations(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation until it wraps
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

impl SymmetricTensor {
    /// The zero tensor.
    pub fn new(order: usize, dim: usize, field: Field) -> Result<Self> {
        check_shape(order, dim)?;
        Ok(SymmetricTensor { order, dim, field, entries: BTreeMap::new() })
    }

    /// Builds from `(index, value)` pairs; indices may be given in any
    /// order and are sorted. Later pairs overwrite earlier ones.
    pub fn from_entries(
        order: usize,
        dim: usize,
        field: Field,
        entries: impl IntoIterator<Item = (Vec<usize>, FieldElement)>,
    ) -> Result<Self> {
        let mut t = Self::new(order, dim, field)?;
        for (idx, v) in entries {
            t.set(&idx, v)?;
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stored entries keyed by sorted multi-index.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &FieldElement)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, idx: &[usize]) -> Result<FieldElement> {
        check_index(idx, self.order, self.dim)?;
        let mut key = idx.to_vec();
        key.sort_unstable();
        Ok(self.entries.get(&key).cloned().unwrap_or_else(|| self.field.zero()))
    }

    /// Sets the entry at `idx` and, implicitly, at all its permutations.
    pub fn set(&mut self, idx: &[usize], v: FieldElement) -> Result<()> {
        check_index(idx, self.order, self.dim)?;
        check_field(&v, self.field)?;
        let mut key = idx.to_vec();
        key.sort_unstable();
        if v.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, v);
        }
        Ok(())
    }

    /// The associated form `sum over all index tuples of t_i x_{i1}...x_{id}`
    /// in `dim` variables.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let ring = Ring::new(self.dim, self.field);
        let terms = self.entries.iter().map(|(idx, v)| {
            let exps = exponents_of(idx, self.dim);
            let mult = self.field.from_bigint(&multinomial(&exps));
            (Monomial::from_exponents(&exps), v.mul(&mult))
        });
        Polynomial::from_terms(ring, terms)
    }

    /// Inverse of [`to_polynomial`](Self::to_polynomial): each coefficient is
    /// divided by the multinomial multiplicity of its monomial.
    ///
    /// Over a prime field this needs `p > d`.
    pub fn from_polynomial(f: &Polynomial, d: usize) -> Result<Self> {
        let mut t = Self::new(d, f.nvars(), f.field())?;
        for (m, c) in f.terms() {
            if m.degree() as usize != d {
                return Err(Error::NotHomogeneous);
            }
            let mult = f.field().from_bigint(&multinomial(m.exponents()));
            if mult.is_zero() {
                return Err(Error::FieldConversion(format!(
                    "multinomial coefficient of {m} vanishes in {}",
                    f.field()
                )));
            }
            t.entries.insert(index_of(m), c.div(&mult));
        }
        Ok(t)
    }

    /// Fixes one index to `k`. For a symmetric tensor every axis gives the
    /// same slice; `axis` is still validated.
    pub fn slice(&self, axis: usize, k: usize) -> Result<SymmetricTensor> {
        if axis >= self.order {
            return Err(Error::IndexOutOfRange { index: axis, bound: self.order });
        }
        if k >= self.dim {
            return Err(Error::IndexOutOfRange { index: k, bound: self.dim });
        }
        if self.order == 1 {
            return Err(Error::InvalidParameter("cannot slice an order-1 tensor".into()));
        }
        let mut out = Self::new(self.order - 1, self.dim, self.field)?;
        for (idx, v) in &self.entries {
            if let Some(p) = idx.iter().position(|&i| i == k) {
                let mut rest = idx.clone();
                rest.remove(p);
                out.entries.insert(rest, v.clone());
            }
        }
        Ok(out)
    }

    /// Block-diagonal sum: `self` on indices `[0, a)`, `other` on `[a, a+b)`.
    pub fn direct_sum(&self, other: &SymmetricTensor) -> Result<SymmetricTensor> {
        if self.order != other.order {
            return Err(Error::ShapeMismatch {
                expected: format!("order {}", self.order),
                found: format!("order {}", other.order),
            });
        }
        if self.field != other.field {
            return Err(Error::RingMismatch(format!("{} vs {}", self.field, other.field)));
        }
        let mut out = Self::new(self.order, self.dim + other.dim, self.field)?;
        out.entries = self.entries.clone();
        for (idx, v) in &other.entries {
            out.entries.insert(idx.iter().map(|i| i + self.dim).collect(), v.clone());
        }
        Ok(out)
    }

    /// `A . T = sum t_i A e_{i1} (x) ... (x) A e_{id}`; its form is `F(A^T x)`.
    pub fn apply_matrix(&self, a: &Matrix) -> Result<SymmetricTensor> {
        if a.len() != self.dim || a.iter().any(|r| r.len() != self.dim) {
            return Err(Error::ShapeMismatch {
                expected: format!("{0}x{0} matrix", self.dim),
                found: format!("{} rows", a.len()),
            });
        }
        if let Some(v) = a.iter().flatten().find(|v| v.field() != self.field) {
            return Err(Error::RingMismatch(format!("matrix over {}, tensor over {}", v.field(), self.field)));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let g = self.to_polynomial()?.substitute_linear(a)?;
        Self::from_polynomial(&g, self.order)
    }

    pub fn add(&self, other: &SymmetricTensor) -> Result<SymmetricTensor> {
        if (self.order, self.dim, self.field) != (other.order, other.dim, other.field) {
            return Err(Error::ShapeMismatch {
                expected: format!("order {} dim {} over {}", self.order, self.dim, self.field),
                found: format!("order {} dim {} over {}", other.order, other.dim, other.field),
            });
        }
        let mut out = self.clone();
        for (idx, v) in &other.entries {
            let s = out.entries.get(idx).map_or_else(|| v.clone(), |w| w.add(v));
            if s.is_zero() {
                out.entries.remove(idx);
            } else {
                out.entries.insert(idx.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> SymmetricTensor {
        let mut out = self.clone();
        out.entries = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.entries.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect()
        };
        out
    }

    /// Maps entries from the rationals into `field`.
    pub fn change_field(&self, field: Field) -> Result<SymmetricTensor> {
        if field == self.field {
            return Ok(self.clone());
        }
        let entries = convert_entries(&self.entries, self.field, field)?;
        Ok(SymmetricTensor { order: self.order, dim: self.dim, field, entries })
    }

    /// The same tensor with every permutation of each index stored.
    pub fn to_general(&self) -> GeneralTensor {
        let mut entries = BTreeMap::new();
        for (idx, v) in &self.entries {
            for p in distinct_permutations(idx) {
                entries.insert(p, v.clone());
            }
        }
        GeneralTensor { order: self.order, dim: self.dim, field: self.field, entries }
    }
}

fn convert_entries(
    entries: &BTreeMap<Vec<usize>, FieldElement>,
    from: Field,
    to: Field,
) -> Result<BTreeMap<Vec<usize>, FieldElement>> {
    let mut out = BTreeMap::new();
    for (idx, v) in entries {
        let q = v.as_rational().ok_or_else(|| Error::FieldConversion(format!("cannot lift {from} entries to {to}")))?;
        let w = to.from_rational(q)?;
        if !w.is_zero() {
            out.insert(idx.clone(), w);
        }
    }
    Ok(out)
}

impl GeneralTensor {
    pub fn new(order: usize, dim: usize, field: Field) -> Result<Self> {
        check_shape(order, dim)?;
        Ok(GeneralTensor { order, dim, field, entries: BTreeMap::new() })
    }

    pub fn from_entries(
        order: usize,
        dim: usize,
        field: Field,
        entries: impl IntoIterator<Item = (Vec<usize>, FieldElement)>,
    ) -> Result<Self> {
        let mut t = Self::new(order, dim, field)?;
        for (idx, v) in entries {
            t.set(&idx, v)?;
        }
        Ok(t)
    }

    /// Maps entries from the rationals into `field`.
    pub fn change_field(&self, field: Field) -> Result<GeneralTensor> {
        if field == self.field {
            return Ok(self.clone());
        }
        let entries = convert_entries(&self.entries, self.field, field)?;
        Ok(GeneralTensor { order: self.order, dim: self.dim, field, entries })
    }

    /// The order-2 tensor with entries `a[i][j]`.
    pub fn from_matrix(a: &Matrix) -> Result<Self> {
        let n = a.len();
        if n == 0 || a.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch { expected: "nonempty square matrix".into(), found: format!("{n} rows") });
        }
        let field = a[0][0].field();
        let entries =
            a.iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (vec![i, j], v.clone())));
        Self::from_entries(2, n, field, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &FieldElement)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, idx: &[usize]) -> Result<FieldElement> {
        check_index(idx, self.order, self.dim)?;
        Ok(self.entries.get(idx).cloned().unwrap_or_else(|| self.field.zero()))
    }

    pub fn set(&mut self, idx: &[usize], v: FieldElement) -> Result<()> {
        check_index(idx, self.order, self.dim)?;
        check_field(&v, self.field)?;
        if v.is_zero() {
            self.entries.remove(idx);
        } else {
            self.entries.insert(idx.to_vec(), v);
        }
        Ok(())
    }

    /// Fixes the index on `axis` to `k`.
    pub fn slice(&self, axis: usize, k: usize) -> Result<GeneralTensor> {
        if axis >= self.order {
            return Err(Error::IndexOutOfRange { index: axis, bound: self.order });
        }
        if k >= self.dim {
            return Err(Error::IndexOutOfRange { index: k, bound: self.dim });
        }
        if self.order == 1 {
            return Err(Error::InvalidParameter("cannot slice an order-1 tensor".into()));
        }
        let mut out = Self::new(self.order - 1, self.dim, self.field)?;
        for (idx, v) in &self.entries {
            if idx[axis] == k {
                let mut rest = idx.clone();
                rest.remove(axis);
                out.entries.insert(rest, v.clone());
            }
        }
        Ok(out)
    }

    /// Reorders the factors: the new axis `a` is the old axis `perm[a]`.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<GeneralTensor> {
        let mut seen = vec![false; self.order];
        if perm.len() != self.order || perm.iter().any(|&p| p >= self.order || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidParameter(format!("{perm:?} is not a permutation of the axes")));
        }
        let entries = self.entries.iter().map(|(idx, v)| (perm.iter().map(|&p| idx[p]).collect(), v.clone())).collect();
        Ok(GeneralTensor { entries, ..self.clone() })
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(idx, v)| {
            distinct_permutations(&{
                let mut s = idx.clone();
                s.sort_unstable();
                s
            })
            .iter()
            .all(|p| self.entries.get(p) == Some(v))
        })
    }

    /// The symmetric tensor with the same entries, if there is one.
    pub fn to_symmetric(&self) -> Result<SymmetricTensor> {
        if !self.is_symmetric() {
            return Err(Error::InvalidParameter("tensor is not symmetric".into()));
        }
        let mut out = SymmetricTensor::new(self.order, self.dim, self.field)?;
        for (idx, v) in &self.entries {
            if idx.windows(2).all(|w| w[0] <= w[1]) {
                out.entries.insert(idx.clone(), v.clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{identity_matrix, matrix_from_i64, matrix_mul, parse_polynomial};
    use proptest::prelude::*;

    fn q(v: i64) -> FieldElement {
        Field::Rational.from_i64(v)
    }

    fn w1() -> SymmetricTensor {
        SymmetricTensor::from_entries(3, 2, Field::Rational, [(vec![1, 0, 1], q(1))]).unwrap()
    }

    #[test]
    fn w_state_form_has_multiplicity_three() {
        assert_eq!(w1().to_polynomial().unwrap().to_string(), "3*x0*x1^2");
        let back = SymmetricTensor::from_polynomial(&parse_polynomial("3*x0*x1^2", Ring::rational(2)).unwrap(), 3);
        assert_eq!(back.unwrap(), w1());
    }

    #[test]
    fn elementary_and_zero() {
        let e = SymmetricTensor::from_entries(3, 1, Field::Rational, [(vec![0, 0, 0], q(1))]).unwrap();
        assert_eq!(e.to_polynomial().unwrap().to_string(), "x0^3");
        let z = SymmetricTensor::new(3, 2, Field::Rational).unwrap();
        assert!(matches!(z.to_polynomial(), Err(Error::ZeroInput)));
        let f = parse_polynomial("x0^2 + x1", Ring::rational(2)).unwrap();
        assert!(matches!(SymmetricTensor::from_polynomial(&f, 2), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn general_slice_of_matrix_unit() {
        let t = GeneralTensor::from_entries(3, 2, Field::Rational, [(vec![0, 1, 1], q(1))]).unwrap();
        let s = t.slice(2, 1).unwrap();
        assert_eq!(s.entries().map(|(i, _)| i.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1]]);
        assert!(t.slice(3, 0).is_err());
        assert!(t.slice(0, 2).is_err());
    }

    #[test]
    fn slices_give_partials_of_big_cw() {
        let t = big_cw(1, 2).unwrap();
        let f = t.to_polynomial().unwrap();
        let ring = f.ring();
        for k in 0..3 {
            let s = t.slice(0, k).unwrap();
            // x^T T_k x, written out from the matrix entries
            let mut quad = Polynomial::zero(ring);
            for i in 0..3 {
                for j in 0..3 {
                    let m = Polynomial::var(ring, i).unwrap().mul(&Polynomial::var(ring, j).unwrap()).unwrap();
                    quad = quad.add(&m.scale(&s.get(&[i, j]).unwrap())).unwrap();
                }
            }
            assert_eq!(quad.scale(&q(3)), f.partial_derivative(k).unwrap());
        }
    }

    #[test]
    fn direct_sum_of_identities() {
        let a = identity_tensor(2, 1, 3).unwrap();
        let b = identity_tensor(3, 2, 3).unwrap();
        assert_eq!(a.direct_sum(&b).unwrap(), identity_tensor(5, 4, 3).unwrap());
        let c = identity_tensor(2, 1, 4).unwrap();
        assert!(a.direct_sum(&c).is_err());
    }

    #[test]
    fn apply_identity_and_projection() {
        let t = big_cw(1, 2).unwrap();
        assert_eq!(t.apply_matrix(&identity_matrix(3, Field::Rational)).unwrap(), t);
        let a = matrix_from_i64(&[vec![1, 0], vec![0, 0]], Field::Rational);
        let f = SymmetricTensor::from_polynomial(&parse_polynomial("x0^2*x1", Ring::rational(2)).unwrap(), 3).unwrap();
        assert!(f.apply_matrix(&a).unwrap().is_zero());
        assert!(t.apply_matrix(&a).is_err());
    }

    #[test]
    fn permutations_are_distinct_and_complete() {
        assert_eq!(distinct_permutations(&[0, 1, 1]).len(), 3);
        assert_eq!(distinct_permutations(&[0, 1, 2]).len(), 6);
        assert_eq!(distinct_permutations(&[2, 2]).len(), 1);
        let g = w1().to_general();
        assert_eq!(g.nnz(), 3);
        assert!(g.is_symmetric());
        assert_eq!(g.to_symmetric().unwrap(), w1());
        let asym = GeneralTensor::from_entries(2, 2, Field::Rational, [(vec![0, 1], q(1))]).unwrap();
        assert!(!asym.is_symmetric());
    }

    fn arb_sym_of(dim: usize, order: usize) -> impl Strategy<Value = SymmetricTensor> {
        prop::collection::vec((prop::collection::vec(0..dim, order), -4i64..5), 0..8).prop_map(move |es| {
            SymmetricTensor::from_entries(order, dim, Field::Rational, es.into_iter().map(|(i, v)| (i, q(v)))).unwrap()
        })
    }

    fn arb_sym(max_dim: usize, max_order: usize) -> impl Strategy<Value = SymmetricTensor> {
        (1..=max_dim, 2..=max_order).prop_flat_map(|(dim, order)| arb_sym_of(dim, order))
    }

    fn arb_matrix(dim: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(prop::collection::vec(-2i64..3, dim), dim)
            .prop_map(|rows| matrix_from_i64(&rows, Field::Rational))
    }

    /// Dense contraction straight from the definition of `A . T`.
    fn apply_dense(a: &Matrix, t: &SymmetricTensor) -> GeneralTensor {
        let g = t.to_general();
        let n = t.dim();
        let mut out = GeneralTensor::new(t.order(), n, Field::Rational).unwrap();
        let total = n.pow(t.order() as u32);
        for flat in 0..total {
            let mut j = Vec::with_capacity(t.order());
            let mut r = flat;
            for _ in 0..t.order() {
                j.push(r % n);
                r /= n;
            }
            let mut s = q(0);
            for (i, v) in g.entries() {
                let mut prod = v.clone();
                for (jk, ik) in j.iter().zip(i) {
                    prod = prod.mul(&a[*jk][*ik]);
                }
                s = s.add(&prod);
            }
            out.set(&j, s).unwrap();
        }
        out
    }

    proptest! {
        #[test]
        fn polynomial_round_trip(t in arb_sym(5, 4)) {
            prop_assume!(!t.is_zero());
            let f = t.to_polynomial().unwrap();
            prop_assert!(f.is_homogeneous());
            prop_assert_eq!(SymmetricTensor::from_polynomial(&f, t.order()).unwrap(), t);
        }

        #[test]
        fn slices_agree_across_axes(t in arb_sym(4, 3)) {
            let g = t.to_general();
            for k in 0..t.dim() {
                let s0 = g.slice(0, k).unwrap();
                for axis in 1..t.order() {
                    prop_assert_eq!(&g.slice(axis, k).unwrap(), &s0);
                }
                prop_assert_eq!(t.slice(0, k).unwrap().to_general(), s0);
            }
        }

        #[test]
        fn apply_matrix_matches_dense_contraction(t in arb_sym(3, 3), seed in any::<u64>()) {
            let a: Matrix = (0..t.dim())
                .map(|i| (0..t.dim()).map(|j| q(((seed >> ((i * 3 + j) % 60)) & 3) as i64 - 1)).collect())
                .collect();
            prop_assert_eq!(t.apply_matrix(&a).unwrap().to_general(), apply_dense(&a, &t));
        }

        #[test]
        fn apply_matrix_composes((t, a, b) in (1usize..4).prop_flat_map(|n| (arb_sym_of(n, 3), arb_matrix(n), arb_matrix(n)))) {
            let lhs = t.apply_matrix(&b).unwrap().apply_matrix(&a).unwrap();
            prop_assert_eq!(lhs, t.apply_matrix(&matrix_mul(&a, &b)).unwrap());
        }

        #[test]
        fn direct_sum_form_is_sum_of_forms(s in arb_sym(3, 3), t in arb_sym(3, 3)) {
            prop_assume!(!s.is_zero() && !t.is_zero() && s.order() == t.order());
            let sum = s.direct_sum(&t).unwrap().to_polynomial().unwrap();
            let n = s.dim() + t.dim();
            let expect = s.to_polynomial().unwrap().shift_variables(n, 0).unwrap()
                .add(&t.to_polynomial().unwrap().shift_variables(n, s.dim()).unwrap()).unwrap();
            prop_assert_eq!(sum, expect);
        }
    }
}
