//! Exact coefficient arithmetic, monomials, monomial orders and sparse
//! multivariate polynomials.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{is_prime, Field, FieldElement, Zp, DEFAULT_PRIME};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{format_polynomial, parse_polynomial, parse_polynomial_infer};
pub use poly::{Polynomial, Ring, Term};

/// Dense square matrix over a field, row-major.
pub type Matrix = Vec<Vec<FieldElement>>;

/// Identity matrix of size `n`.
pub fn identity_matrix(n: usize, field: Field) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect()
}

/// Converts a small integer matrix.
pub fn matrix_from_i64(rows: &[Vec<i64>], field: Field) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect()
}

/// Matrix product `a * b`.
pub fn matrix_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let field = row[0].field();
                    (0..inner).fold(field.zero(), |s, k| s.add(&row[k].mul(&b[k][j])))
                })
                .collect()
        })
        .collect()
}
