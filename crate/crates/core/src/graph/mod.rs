//! Weighted undirected graphs with loops, and the named families.

mod exact;
mod family;

use std::collections::BTreeMap;

pub use exact::{parse_rational, ExactWeight, ParseExactError};
pub use family::{family, Family};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Scalar, Weight};

/// An undirected graph on `n` vertices with a symmetric weight function.
///
/// Each unordered pair `{u, v}` (with `u == v` a loop) is stored once, keyed
/// by `(min, max)`. Absent pairs have weight zero, and setting a zero weight
/// deletes the pair, so "edge exists" and "weight is nonzero" coincide.
/// Vertex indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph<W> {
    n: usize,
    weights: BTreeMap<(usize, usize), W>,
    labels: Option<Vec<String>>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl<W: Weight> WeightedGraph<W> {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        Ok(Self {
            n,
            weights: BTreeMap::new(),
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn set_weight(&mut self, u: usize, v: usize, w: W) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !w.is_finite_weight() {
            return Err(Error::NonFiniteWeight { u, v });
        }
        if w.is_zero_weight() {
            self.weights.remove(&key(u, v));
        } else {
            self.weights.insert(key(u, v), w);
        }
        Ok(())
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&W> {
        self.weights.get(&key(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weights.contains_key(&key(u, v))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    /// Nonzero pairs `(u, v, w)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &W)> + '_ {
        self.weights.iter().map(|(&(u, v), w)| (u, v, w))
    }

    /// Number of stored pairs, loops included.
    pub fn pair_count(&self) -> usize {
        self.weights.len()
    }

    /// Sorted neighbor lists; a loop at `v` lists `v` once.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.n];
        for &(u, v) in self.weights.keys() {
            lists[u].push(v);
            if u != v {
                lists[v].push(u);
            }
        }
        for l in &mut lists {
            l.sort_unstable();
        }
        lists
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of vertex `v`: its stored label, or `v + 1`.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn map_weights<V: Weight>(&self, mut f: impl FnMut(&W) -> V) -> Result<WeightedGraph<V>> {
        let mut g = WeightedGraph::new(self.n)?;
        for (u, v, w) in self.edges() {
            g.set_weight(u, v, f(w))?;
        }
        g.labels = self.labels.clone();
        Ok(g)
    }

    pub fn to_f64(&self) -> WeightedGraph<f64> {
        self.map_weights(Weight::to_f64)
            .expect("weights were validated on insertion")
    }

    pub fn adjacency_f64(&self) -> Matrix<f64> {
        let mut m = Matrix::filled(self.n, 0.0);
        for (u, v, w) in self.edges() {
            m[(u, v)] = w.to_f64();
            m[(v, u)] = w.to_f64();
        }
        m
    }
}

impl<W: Scalar> WeightedGraph<W> {
    /// Builds a graph from a symmetric matrix; zero entries are absent pairs.
    pub fn from_matrix(m: &Matrix<W>) -> Result<Self> {
        let mut g = Self::new(m.dim())?;
        for i in 0..m.dim() {
            for j in i..m.dim() {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
                g.set_weight(i, j, m[(i, j)].clone())?;
            }
        }
        Ok(g)
    }

    pub fn adjacency_matrix(&self) -> Matrix<W> {
        let mut m = Matrix::zeros(self.n);
        for (u, v, w) in self.edges() {
            m[(u, v)] = w.clone();
            m[(v, u)] = w.clone();
        }
        m
    }

    pub fn add_unit_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.set_weight(u, v, W::one())
    }

    /// Converts float weights into the scalar type.
    pub fn from_f64_graph(g: &WeightedGraph<f64>) -> Result<Self> {
        let mut out = Self::new(g.n())?;
        for (u, v, &w) in g.edges() {
            let w = W::from_f64(w).ok_or(Error::NonFiniteWeight { u, v })?;
            out.set_weight(u, v, w)?;
        }
        out.labels = g.labels.clone();
        Ok(out)
    }
}
