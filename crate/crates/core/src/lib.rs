//! Symmetric tensor powers of weighted graphs.
//!
//! The symmetric power `G^(⊙k)` lives on the size-k multisets of `V(G)`; its
//! adjacency matrix is the restriction of `A^(⊗k)` to the symmetric subspace.
//! This crate builds those powers with two interchangeable kernels (orbit
//! double sums and Ryser permanents), checks their spectral identities, and
//! computes the graph invariants used to compare against closed forms.
//!
//! Everything numeric is generic over [`Scalar`]: `f64`, `f32` or exact
//! [`Rational`] arithmetic.

pub mod analysis;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod scalar;
pub mod spectra;
pub mod sympower;
pub mod verify;

pub use combinatorics::{
    binomial, enumerate_multisets, enumerate_orbit, multiplicity_vector, multiset_count,
    orbit_size, rank, unrank, MultiplicityVector, Order, VertexMultiset,
};
pub use error::{Error, Result};
pub use graph::{family, ExactWeight, Family, WeightedGraph};
pub use matrix::Matrix;
pub use scalar::{Scalar, Weight};
pub use spectra::{eigenvalues_symmetric, predicted_power_spectrum, spectra_match, Spectrum};
pub use sympower::{
    sym_power, sym_power_graph, sym_power_of_matrix, Method, Permutation, PowerOptions,
    SymPowerMatrix,
};

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;
/// Floating-point weighted graph.
pub type Graph = WeightedGraph<f64>;
/// Graph with exact rational weights.
pub type ExactGraph = WeightedGraph<Rational>;
/// Symmetric power with a floating-point core.
pub type SymPower = SymPowerMatrix<f64>;
/// Symmetric power with an exact rational core.
pub type ExactSymPower = SymPowerMatrix<Rational>;
