//! Symmetric geometric rank, geometric rank and exact matrix rank.
//!
//! `sgr(F) = (n+1) - dim V(dF/dx_0, ..., dF/dx_n)` with the dimension taken
//! in affine space, so a smooth hypersurface has `sgr = n+1`. The geometric
//! rank of an order-`d` tensor is computed the same way from the partials of
//! its multilinear form in `d-1` groups of variables.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with_budget, Budget, GroebnerStats, Ideal};
use crate::polyring::{FieldElement, Matrix, Monomial, MonomialOrder, Polynomial, Ring};
use crate::tensor::{GeneralTensor, SymmetricTensor};

/// How a rank computation runs.
#[derive(Clone, Debug, Default)]
pub struct RankOptions {
    pub order: MonomialOrder,
    pub budget: Budget,
}

impl RankOptions {
    pub fn with_order(order: MonomialOrder) -> Self {
        RankOptions { order, budget: Budget::unlimited() }
    }

    pub fn with_timeout(timeout: Duration) -> Self {
        RankOptions { order: MonomialOrder::default(), budget: Budget::with_timeout(timeout) }
    }
}

/// Outcome of one dimension computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codimension {
    /// Ambient dimension minus `dim`.
    pub codim: usize,
    /// Affine dimension of the zero set.
    pub dim: i64,
    pub ambient: usize,
    pub basis_size: usize,
    pub stats: GroebnerStats,
}

/// The ideal of all first partials of `f`, zero partials dropped.
pub fn singular_ideal(f: &Polynomial) -> Result<Ideal> {
    let d = check_form(f)?;
    if d < 2 {
        return Err(Error::DegreeTooLow(d));
    }
    Ideal::new(f.gradient())
}

fn check_form(f: &Polynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(f.total_degree().expect("nonzero"))
}

fn codimension(ideal: &Ideal, opts: &RankOptions) -> Result<Codimension> {
    let ambient = ideal.ring().nvars;
    let gb = buchberger_with_budget(&ideal.with_order(opts.order), &opts.budget)?;
    let dim = gb.dimension();
    // homogeneous ideals always contain the origin
    debug_assert!(dim >= 0);
    Ok(Codimension { codim: (ambient as i64 - dim) as usize, dim, ambient, basis_size: gb.len(), stats: gb.stats() })
}

/// Symmetric geometric rank of the form `f` (homogeneous, degree >= 2).
pub fn sgr(f: &Polynomial) -> Result<usize> {
    Ok(sgr_with(f, &RankOptions::default())?.codim)
}

/// [`sgr`] with an explicit order and budget, returning the details.
pub fn sgr_with(f: &Polynomial, opts: &RankOptions) -> Result<Codimension> {
    codimension(&singular_ideal(f)?, opts)
}

/// Symmetric geometric rank of a symmetric tensor via its form.
pub fn sgr_tensor(t: &SymmetricTensor) -> Result<usize> {
    sgr(&t.to_polynomial()?)
}

/// The partials of the multilinear form of `t` with respect to the group
/// on `axis`. The other axes, in increasing order, become variable groups
/// `0..d-1`; variable `g*m + i` is coordinate `i` of group `g`.
pub fn multilinear_ideal(t: &GeneralTensor, axis: usize) -> Result<Ideal> {
    let (d, m) = (t.order(), t.dim());
    if t.is_zero() {
        return Err(Error::ZeroInput);
    }
    if d < 2 {
        return Err(Error::DegreeTooLow(d as u32));
    }
    if axis >= d {
        return Err(Error::IndexOutOfRange { index: axis, bound: d });
    }
    let ring = Ring::new((d - 1) * m, t.field());
    let mut gens: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); m];
    for (idx, v) in t.entries() {
        let mut e = vec![0u16; ring.nvars];
        let others = (0..d).filter(|&a| a != axis);
        for (g, a) in others.enumerate() {
            e[g * m + idx[a]] += 1;
        }
        gens[idx[axis]].push((Monomial::from_exponents(&e), v.clone()));
    }
    let polys = gens.into_iter().map(|ts| Polynomial::from_terms(ring, ts)).collect::<Result<Vec<_>>>()?;
    Ideal::new(polys)
}

/// Geometric rank, differentiating with respect to the last factor.
pub fn gr(t: &GeneralTensor) -> Result<usize> {
    Ok(gr_with(t, t.order().saturating_sub(1), &RankOptions::default())?.codim)
}

/// Geometric rank with the distinguished factor on `axis`.
pub fn gr_with(t: &GeneralTensor, axis: usize, opts: &RankOptions) -> Result<Codimension> {
    codimension(&multilinear_ideal(t, axis)?, opts)
}

/// Rank of a matrix. Over the rationals rows are cleared of denominators
/// and reduced by fraction-free (Bareiss) elimination; over a prime field by
/// ordinary elimination.
pub fn matrix_rank(a: &Matrix) -> usize {
    let Some(first) = a.iter().flatten().next() else {
        return 0;
    };
    if first.as_rational().is_some() {
        let rows: Vec<Vec<BigInt>> = a
            .iter()
            .map(|row| {
                let qs: Vec<_> = row.iter().map(|v| v.as_rational().expect("rational matrix").clone()).collect();
                let den = qs.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
                qs.iter().map(|q| q.numer() * (&den / q.denom())).collect()
            })
            .collect();
        bareiss_rank(rows)
    } else {
        field_rank(a.to_vec())
    }
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn field_rank(mut m: Matrix) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        let pivot = m[r].clone();
        for row in &mut m[r + 1..] {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].mul(&inv);
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = x.sub(&f.mul(p));
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// SGR, optionally GR, and the dimension data behind them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub sgr: usize,
    pub gr: Option<usize>,
    pub sing_dim_affine: i64,
    pub ambient: usize,
    pub field: String,
    pub ms: u64,
    #[serde(skip)]
    pub sgr_basis_size: usize,
    #[serde(skip)]
    pub gr_basis_size: Option<usize>,
}

impl RankReport {
    /// JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        // Value objects are BTreeMaps, which sort their keys
        serde_json::to_value(self).expect("report serializes").to_string()
    }

    /// `SGR` bounds the symmetric subrank from above, and `GR` bounds `SGR`.
    pub fn bound_chain(&self) -> String {
        match self.gr {
            Some(g) => format!("Q_s <= {} <= {g}", self.sgr),
            None => format!("Q_s <= {}", self.sgr),
        }
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sgr: {}", self.sgr)?;
        if let Some(g) = self.gr {
            writeln!(f, "gr: {g}")?;
        }
        writeln!(f, "singular locus: affine dimension {} in {} variables", self.sing_dim_affine, self.ambient)?;
        writeln!(f, "bounds: {}", self.bound_chain())?;
        write!(f, "field: {}, {} ms", self.field, self.ms)
    }
}

/// Report for the form `f`. GR needs the tensor of `f`, so over a prime
/// field it requires the characteristic to exceed the degree.
pub fn rank_report(f: &Polynomial, compute_gr: bool, opts: &RankOptions) -> Result<RankReport> {
    let start = Instant::now();
    let s = sgr_with(f, opts)?;
    let g = if compute_gr {
        let d = f.total_degree().expect("nonzero") as usize;
        let t = SymmetricTensor::from_polynomial(f, d)?.to_general();
        Some(gr_with(&t, d - 1, opts)?)
    } else {
        None
    };
    Ok(RankReport {
        sgr: s.codim,
        gr: g.as_ref().map(|g| g.codim),
        sing_dim_affine: s.dim,
        ambient: s.ambient,
        field: f.field().to_string(),
        ms: start.elapsed().as_millis() as u64,
        sgr_basis_size: s.basis_size,
        gr_basis_size: g.map(|g| g.basis_size),
    })
}

/// Report for a symmetric tensor.
pub fn rank_report_tensor(t: &SymmetricTensor, compute_gr: bool, opts: &RankOptions) -> Result<RankReport> {
    rank_report(&t.to_polynomial()?, compute_gr, opts)
}
