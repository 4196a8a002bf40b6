use std::collections::BTreeSet;

use super::SymmetricTensor;
use crate::error::{Error, Result};
use crate::polyring::Field;

/// A `d`-uniform hypergraph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: usize,
    uniformity: usize,
    edges: BTreeSet<Vec<usize>>,
}

impl Hypergraph {
    /// Each edge must have exactly `uniformity` distinct vertices in
    /// `1..=vertices`. Repeated edges collapse.
    pub fn new(vertices: usize, uniformity: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        if uniformity == 0 {
            return Err(Error::InvalidParameter("edges need at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            if e.len() != uniformity {
                return Err(Error::InvalidParameter(format!(
                    "edge {e:?} has {} vertices, expected {uniformity}",
                    e.len()
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!("edge {e:?} repeats a vertex")));
            }
            if let Some(&v) = e.iter().find(|&&v| v == 0 || v > vertices) {
                return Err(Error::IndexOutOfRange { index: v, bound: vertices + 1 });
            }
            set.insert(e);
        }
        Ok(Hypergraph { vertices, uniformity, edges: set })
    }

    /// One edge per line as whitespace-separated 1-based vertices; `#`
    /// starts a comment. The uniformity is fixed by the first edge and the
    /// vertex count is the largest vertex seen.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut uniformity = None;
        for (lineno, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let edge = fields
                .iter()
                .map(|f| f.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Format(format!("line {}: expected vertex numbers", lineno + 1)))?;
            let d = *uniformity.get_or_insert(edge.len());
            if edge.len() != d {
                return Err(Error::Format(format!(
                    "line {}: edge has {} vertices but the first edge has {d}",
                    lineno + 1,
                    edge.len()
                )));
            }
            if edge.contains(&0) {
                return Err(Error::Format(format!("line {}: vertices are numbered from 1", lineno + 1)));
            }
            edges.push(edge);
        }
        let Some(d) = uniformity else {
            return Err(Error::Format("no edges".into()));
        };
        let n = edges.iter().flatten().copied().max().unwrap_or(0);
        Self::new(n, d, edges).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn edges(&self) -> impl Iterator<Item = &[usize]> {
        self.edges.iter().map(Vec::as_slice)
    }

    /// Indicator tensor: entry 1 on every ordering of every edge, with
    /// vertex `v` placed on coordinate `v-1`.
    pub fn tensor(&self) -> Result<SymmetricTensor> {
        SymmetricTensor::from_entries(
            self.uniformity,
            self.vertices.max(1),
            Field::Rational,
            self.edges.iter().map(|e| (e.iter().map(|v| v - 1).collect(), Field::Rational.one())),
        )
    }

    /// The same hypergraph with vertex `v` renamed to `perm[v-1] + 1`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.vertices];
        if perm.len() != self.vertices
            || perm.iter().any(|&p| p >= self.vertices || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidParameter(format!("{perm:?} is not a vertex permutation")));
        }
        Self::new(
            self.vertices,
            self.uniformity,
            self.edges.iter().map(|e| e.iter().map(|&v| perm[v - 1] + 1).collect()),
        )
    }
}
