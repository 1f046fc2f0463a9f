//! Construction of the k-th symmetric tensor power `A^(⊙k)`.
//!
//! The result is kept factored as a core matrix `S` (orbit double sums,
//! exact when the scalar is) and integer normalizers `D[i] = |Orb(i)|`, with
//! entries `S[i][j] / sqrt(D[i] D[j])` materialized on demand.

mod kernels;
pub mod nesting;
mod permutation;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;

pub use kernels::{
    entry_orbit_sum, entry_permanent, ryser_permanent, PowerEntry, DEFAULT_PERMANENT_CAP,
};
pub use permutation::{relabel, sym_power_permutation, Permutation, SymPermutation};

use crate::combinatorics::{self, enumerate_multisets, multiset_count, Order, VertexMultiset};
use crate::error::{Error, Result};
use crate::graph::{ExactWeight, WeightedGraph};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Default cap on the power dimension `N`.
pub const DEFAULT_MAX_DIM: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Direct orbit double sum; the reference kernel.
    Orbit,
    /// Ryser permanent of `A[i|j]`.
    #[default]
    Permanent,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "orbit" => Ok(Method::Orbit),
            "permanent" => Ok(Method::Permanent),
            other => Err(format!(
                "unknown method `{other}` (expected orbit or permanent)"
            )),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Orbit => "orbit",
            Method::Permanent => "permanent",
        })
    }
}

/// Whether the core was computed in exact arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerOptions {
    pub method: Method,
    pub order: Order,
    pub max_dim: usize,
    pub permanent_cap: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self {
            method: Method::default(),
            order: Order::default(),
            max_dim: DEFAULT_MAX_DIM,
            permanent_cap: DEFAULT_PERMANENT_CAP,
        }
    }
}

impl PowerOptions {
    pub fn new(method: Method, order: Order) -> Self {
        Self {
            method,
            order,
            ..Self::default()
        }
    }

    pub fn with_max_dim(mut self, max_dim: usize) -> Self {
        self.max_dim = max_dim;
        self
    }
}

/// `A^(⊙k)` stored as core `S` plus normalizers `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymPowerMatrix<T> {
    n: usize,
    k: usize,
    order: Order,
    basis: Vec<VertexMultiset>,
    core: Matrix<T>,
    normalizers: Vec<u64>,
    provenance: Provenance,
}

impl<T: Scalar> SymPowerMatrix<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> Order {
        self.order
    }

    /// `N = C(n+k-1, k)`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[VertexMultiset] {
        &self.basis
    }

    pub fn core(&self) -> &Matrix<T> {
        &self.core
    }

    pub fn normalizers(&self) -> &[u64] {
        &self.normalizers
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn rank_of(&self, t: &VertexMultiset) -> Result<usize> {
        combinatorics::rank(t, self.order)
    }

    pub fn entry(&self, i: usize, j: usize) -> PowerEntry<T> {
        PowerEntry {
            core: self.core[(i, j)].clone(),
            row_norm: self.normalizers[i],
            col_norm: self.normalizers[j],
        }
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        kernels::normalize(
            self.core[(i, j)].to_f64(),
            self.normalizers[i],
            self.normalizers[j],
        )
    }

    /// The float matrix `E = D^(-1/2) S D^(-1/2)`.
    pub fn materialize(&self) -> Matrix<f64> {
        Matrix::from_fn(self.dim(), |i, j| self.value(i, j))
    }

    pub fn materialize_as<F: num_traits::Float>(&self) -> Matrix<F> {
        self.materialize()
            .map(|&v| F::from(v).unwrap_or_else(F::nan))
    }

    /// Graph view; vertex labels are the comma-joined tuples.
    pub fn to_graph(&self) -> Result<WeightedGraph<f64>> {
        let mut g = WeightedGraph::new(self.dim())?;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                if !self.core[(i, j)].is_zero() {
                    g.set_weight(i, j, self.value(i, j))?;
                }
            }
        }
        g.with_labels(self.basis.iter().map(VertexMultiset::label).collect())
    }
}

impl SymPowerMatrix<BigRational> {
    pub fn exact_entry(&self, i: usize, j: usize) -> ExactWeight {
        kernels::exact_normalize(&self.core[(i, j)], self.normalizers[i], self.normalizers[j])
    }

    pub fn exact_matrix(&self) -> Matrix<ExactWeight> {
        Matrix::from_fn(self.dim(), |i, j| self.exact_entry(i, j))
    }

    pub fn to_exact_graph(&self) -> Result<WeightedGraph<ExactWeight>> {
        let mut g = WeightedGraph::new(self.dim())?;
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let w = self.exact_entry(i, j);
                if !w.is_zero() {
                    g.set_weight(i, j, w)?;
                }
            }
        }
        g.with_labels(self.basis.iter().map(VertexMultiset::label).collect())
    }
}

fn check_budget(n: usize, k: usize, opts: &PowerOptions) -> Result<usize> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let dim = multiset_count(n, k)?;
    if dim > opts.max_dim {
        return Err(Error::SizeBudget {
            n,
            k,
            dim,
            max: opts.max_dim,
        });
    }
    if opts.method == Method::Permanent && (k > opts.permanent_cap || k >= 64) {
        return Err(Error::PermanentCap {
            k,
            cap: opts.permanent_cap,
        });
    }
    Ok(dim)
}

/// `A^(⊙k)` for an arbitrary square matrix. Only the upper triangle is
/// computed when `A` is symmetric.
pub fn sym_power_of_matrix<T: Scalar>(
    a: &Matrix<T>,
    k: usize,
    opts: &PowerOptions,
) -> Result<SymPowerMatrix<T>> {
    let n = a.dim();
    let dim = check_budget(n, k, opts)?;
    let basis = enumerate_multisets(n, k, opts.order)?;
    let mults: Vec<_> = basis.iter().map(VertexMultiset::multiplicity).collect();
    let normalizers = mults
        .iter()
        .map(|m| m.orbit_size())
        .collect::<Result<Vec<u64>>>()?;
    let symmetric = a.is_symmetric();
    let start = |r: usize| if symmetric { r } else { 0 };

    let rows: Vec<Vec<T>> = match opts.method {
        Method::Orbit => {
            let orbits: Vec<Vec<Vec<usize>>> = basis.iter().map(kernels::orbit_of).collect();
            (0..dim)
                .into_par_iter()
                .map(|r| {
                    (start(r)..dim)
                        .map(|c| kernels::orbit_double_sum(a, &orbits[r], &orbits[c]))
                        .collect()
                })
                .collect()
        }
        Method::Permanent => {
            let indices: Vec<Vec<usize>> = basis.iter().map(VertexMultiset::indices).collect();
            let col_facts = mults
                .iter()
                .map(|m| m.factorial_product())
                .collect::<Result<Vec<u64>>>()?;
            (0..dim)
                .into_par_iter()
                .map(|r| {
                    (start(r)..dim)
                        .map(|c| {
                            let perm = kernels::ryser_submatrix(a, &indices[r], &indices[c]);
                            kernels::permanent_to_core(perm, normalizers[r], col_facts[c])
                        })
                        .collect()
                })
                .collect()
        }
    };

    let mut core = Matrix::zeros(dim);
    for (r, row) in rows.into_iter().enumerate() {
        for (offset, v) in row.into_iter().enumerate() {
            let c = start(r) + offset;
            if symmetric && c != r {
                core[(c, r)] = v.clone();
            }
            core[(r, c)] = v;
        }
    }

    Ok(SymPowerMatrix {
        n,
        k,
        order: opts.order,
        basis,
        core,
        normalizers,
        provenance: if T::EXACT {
            Provenance::Exact
        } else {
            Provenance::Float
        },
    })
}

/// `A^(⊙k)` for the adjacency matrix `A` of `g`.
pub fn sym_power<T: Scalar>(
    g: &WeightedGraph<T>,
    k: usize,
    opts: &PowerOptions,
) -> Result<SymPowerMatrix<T>> {
    sym_power_of_matrix(&g.adjacency_matrix(), k, opts)
}

/// The graph `G^(⊙k)` with float weights and tuple labels.
pub fn sym_power_graph<T: Scalar>(
    g: &WeightedGraph<T>,
    k: usize,
    opts: &PowerOptions,
) -> Result<WeightedGraph<f64>> {
    sym_power(g, k, opts)?.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    fn opts(method: Method) -> PowerOptions {
        PowerOptions::new(method, Order::Paper)
    }

    #[test]
    fn k1_reproduces_the_adjacency_matrix() {
        let g: WeightedGraph<f64> = family("complete_bipartite", &[2, 3]).unwrap();
        for method in [Method::Orbit, Method::Permanent] {
            let p = sym_power(&g, 1, &opts(method)).unwrap();
            assert_eq!(p.materialize(), g.adjacency_matrix());
        }
    }

    #[test]
    fn scepter_square() {
        let g: WeightedGraph<f64> = family("scepter", &[]).unwrap();
        let m = sym_power(&g, 2, &opts(Method::Orbit))
            .unwrap()
            .materialize();
        let s2 = 2f64.sqrt();
        let expected = [[1.0, 1.0, s2], [1.0, 0.0, 0.0], [s2, 0.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((m[(i, j)] - expected[i][j]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn budget_and_cap_errors() {
        let g: WeightedGraph<f64> = family("path", &[10]).unwrap();
        let small = opts(Method::Orbit).with_max_dim(50);
        assert!(matches!(
            sym_power(&g, 3, &small).unwrap_err(),
            Error::SizeBudget { dim: 220, .. }
        ));
        let mut capped = opts(Method::Permanent);
        capped.permanent_cap = 2;
        assert_eq!(
            sym_power(&g, 3, &capped).unwrap_err(),
            Error::PermanentCap { k: 3, cap: 2 }
        );
        assert_eq!(
            sym_power(&g, 0, &opts(Method::Orbit)).unwrap_err(),
            Error::ZeroPower
        );
    }

    #[test]
    fn provenance_follows_the_scalar() {
        let g: WeightedGraph<f64> = family("path", &[3]).unwrap();
        assert_eq!(
            sym_power(&g, 2, &opts(Method::Orbit)).unwrap().provenance(),
            Provenance::Float
        );
        let q: WeightedGraph<BigRational> = family("path", &[3]).unwrap();
        assert_eq!(
            sym_power(&q, 2, &opts(Method::Orbit)).unwrap().provenance(),
            Provenance::Exact
        );
    }

    #[test]
    fn path_square_graph() {
        let g: WeightedGraph<f64> = family("path", &[3]).unwrap();
        let p = sym_power_graph(&g, 2, &opts(Method::Permanent)).unwrap();
        let labelled: Vec<(String, String, f64)> = p
            .edges()
            .map(|(u, v, &w)| (p.label(u), p.label(v), w))
            .collect();
        let s2 = 2f64.sqrt();
        let expected = [
            ("1,1", "2,2", 1.0),
            ("2,2", "3,3", 1.0),
            ("2,2", "1,3", s2),
            ("1,2", "1,2", 1.0),
            ("1,2", "2,3", 1.0),
            ("2,3", "2,3", 1.0),
        ];
        assert_eq!(labelled.len(), expected.len());
        for (a, b, w) in expected {
            assert!(
                labelled
                    .iter()
                    .any(|(x, y, v)| ((x == a && y == b) || (x == b && y == a))
                        && (v - w).abs() < 1e-15),
                "missing {a}-{b}"
            );
        }
    }

    #[test]
    fn orbit_and_permanent_agree_on_nonsymmetric_input() {
        let a = Matrix::from_rows(vec![
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 0.0, 0.0],
        ])
        .unwrap();
        let x = sym_power_of_matrix(&a, 2, &opts(Method::Orbit)).unwrap();
        let y = sym_power_of_matrix(&a, 2, &opts(Method::Permanent)).unwrap();
        assert_eq!(x.core(), y.core());
    }
}
