//! Named tensors. All are built over the rationals; use `change_field`
//! for a prime field.
//!
//! Tensors given entrywise come back as [`SymmetricTensor`]s. Those defined
//! by a formula for their form (`h3`, `tr(X^3)`, the cubic normal forms)
//! come back as [`Polynomial`]s.

use super::SymmetricTensor;
use crate::error::{Error, Result};
use crate::polyring::{parse_polynomial, Field, Monomial, Polynomial, Ring};

fn one() -> crate::polyring::FieldElement {
    Field::Rational.one()
}

fn cubic(dim: usize, entries: Vec<Vec<usize>>) -> Result<SymmetricTensor> {
    SymmetricTensor::from_entries(3, dim, Field::Rational, entries.into_iter().map(|i| (i, one())))
}

fn param(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// `sum_{i<k} e_i^{(x) d}` in dimension `n+1`; its form is `sum_{i<k} x_i^d`.
pub fn identity_tensor(k: usize, n: usize, d: usize) -> Result<SymmetricTensor> {
    param(k >= 1 && k <= n + 1, || format!("identity needs 1 <= k <= n+1, got k={k}, n={n}"))?;
    param(d >= 1, || "identity needs order d >= 1".into())?;
    SymmetricTensor::from_entries(d, n + 1, Field::Rational, (0..k).map(|i| (vec![i; d], one())))
}

/// `W_1 = e0 (x) e1 (x) e1` symmetrized, in dimension `n+1`: form `3*x0*x1^2`.
pub fn w_state(n: usize) -> Result<SymmetricTensor> {
    param(n >= 1, || "w_state needs n >= 1".into())?;
    cubic(n + 1, vec![vec![0, 1, 1]])
}

/// `W_1 + ... + W_q + W~` with `W~` the W-state on `e0, e0, e_{q+1}`.
/// Form: `3*x0*(x1^2 + ... + xq^2 + x0*x_{q+1})`.
pub fn big_cw(q: usize, n: usize) -> Result<SymmetricTensor> {
    param(q >= 1 && q < n, || format!("big_cw needs 1 <= q < n, got q={q}, n={n}"))?;
    let mut e: Vec<Vec<usize>> = (1..=q).map(|i| vec![0, i, i]).collect();
    e.push(vec![0, 0, q + 1]);
    cubic(n + 1, e)
}

/// `W_1 + ... + W_q`. Form: `3*x0*(x1^2 + ... + xq^2)`.
pub fn small_cw(q: usize, n: usize) -> Result<SymmetricTensor> {
    param(q >= 1 && q <= n, || format!("small_cw needs 1 <= q <= n, got q={q}, n={n}"))?;
    cubic(n + 1, (1..=q).map(|i| vec![0, i, i]).collect())
}

/// `e0^{(x)3} + W_1 + ... + W_q`. Form: `x0^3 + 3*x0*(x1^2 + ... + xq^2)`.
pub fn max_compressibility(q: usize, n: usize) -> Result<SymmetricTensor> {
    param(q >= 1 && q <= n, || format!("max_compressibility needs 1 <= q <= n, got q={q}, n={n}"))?;
    let mut e = vec![vec![0, 0, 0]];
    e.extend((1..=q).map(|i| vec![0, i, i]));
    cubic(n + 1, e)
}

/// `h3 = sum_{i <= j <= k} x_i x_j x_k` in `n+1` variables.
pub fn complete_homogeneous_cubic(n: usize) -> Result<Polynomial> {
    let dim = n + 1;
    let ring = Ring::rational(dim);
    let mut terms = Vec::new();
    for i in 0..dim {
        for j in i..dim {
            for k in j..dim {
                let mut e = vec![0u16; dim];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                terms.push((Monomial::from_exponents(&e), one()));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// `tr(X^3)` for a generic `m x m` matrix `X`, with `X[i][j] = x_{i*m+j}`.
///
/// This is the symmetrized matrix multiplication form with all three
/// arguments equal; its singular locus is `{X^2 = 0}`.
pub fn sym_matrix_mult(m: usize) -> Result<Polynomial> {
    param(m >= 1, || "sym_matrix_mult needs m >= 1".into())?;
    let nv = m * m;
    let ring = Ring::rational(nv);
    let mut terms = Vec::with_capacity(m * m * m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let mut e = vec![0u16; nv];
                e[i * m + j] += 1;
                e[j * m + k] += 1;
                e[k * m + i] += 1;
                terms.push((Monomial::from_exponents(&e), one()));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// Normal forms of irreducible cubics with a codimension-two singular locus
/// in `n+1 <= 5` variables. `n = 2` has variants 1 and 2; `n = 3, 4` only 1.
pub fn table1_normal_form(n: usize, variant: usize) -> Result<Polynomial> {
    let text = match (n, variant) {
        (2, 1) => "x0^2*x2 + x1^3",
        (2, 2) => "x0^2*x2 + x1^3 + x1^2*x2",
        (3, 1) => "x0^2*x2 + x1^3 + x0*x1*x3",
        (4, 1) => "x0^2*x2 + x1^3 + x1^2*x3 + x0*x1*x4",
        _ => return Err(Error::InvalidParameter(format!("no normal form for n={n}, variant {variant}"))),
    };
    parse_polynomial(text, Ring::rational(n + 1))
}
