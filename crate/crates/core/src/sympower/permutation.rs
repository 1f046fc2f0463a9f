use rand::seq::SliceRandom;
use rand::Rng;

use crate::combinatorics::{enumerate_multisets, rank, Order, VertexMultiset};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::matrix::Matrix;
use crate::scalar::{Scalar, Weight};

/// A permutation of `0..n`, `sigma(i) = images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

fn validate(images: &[usize]) -> Result<()> {
    let mut seen = vec![false; images.len()];
    for &v in images {
        if v >= images.len() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} is not a bijection of 0..{}",
                images.len()
            )));
        }
    }
    Ok(())
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        validate(&images)?;
        Ok(Self { images })
    }

    /// From 1-based one-line notation, e.g. `[2, 3, 1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("labels are 1-based".into()));
        }
        Self::new(images.iter().map(|v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Self { images: inv }
    }

    /// `Γ` with `Γ[i][j] = 1` iff `j = sigma(i)`.
    pub fn matrix<T: Scalar>(&self) -> Matrix<T> {
        Matrix::from_fn(self.len(), |i, j| {
            if self.images[i] == j {
                T::one()
            } else {
                T::zero()
            }
        })
    }
}

/// The permutation of multiset ranks induced by a vertex permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPermutation {
    n: usize,
    k: usize,
    order: Order,
    images: Vec<usize>,
}

impl SymPermutation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, r: usize) -> usize {
        self.images[r]
    }

    pub fn as_permutation(&self) -> Permutation {
        Permutation {
            images: self.images.clone(),
        }
    }

    pub fn matrix<T: Scalar>(&self) -> Matrix<T> {
        self.as_permutation().matrix()
    }
}

/// Maps `rank(t)` to `rank(sort(sigma(t)))`.
pub fn sym_power_permutation(
    sigma: &Permutation,
    k: usize,
    order: Order,
) -> Result<SymPermutation> {
    let n = sigma.len();
    let basis = enumerate_multisets(n, k, order)?;
    let images = basis
        .iter()
        .map(|t| {
            let moved = t.indices().iter().map(|&i| sigma.apply(i) + 1).collect();
            rank(&VertexMultiset::from_tuple(moved, n)?, order)
        })
        .collect::<Result<Vec<usize>>>()?;
    validate(&images)?;
    Ok(SymPermutation {
        n,
        k,
        order,
        images,
    })
}

/// Moves vertex `u` to `sigma(u)`: `weight'(sigma(u), sigma(v)) = weight(u, v)`.
pub fn relabel<W: Weight>(g: &WeightedGraph<W>, sigma: &Permutation) -> Result<WeightedGraph<W>> {
    if sigma.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: sigma.len(),
        });
    }
    let mut out = WeightedGraph::new(g.n())?;
    for (u, v, w) in g.edges() {
        out.set_weight(sigma.apply(u), sigma.apply(v), w.clone())?;
    }
    if let Some(labels) = g.labels() {
        let mut moved = labels.to_vec();
        for (u, l) in labels.iter().enumerate() {
            moved[sigma.apply(u)] = l.clone();
        }
        out = out.with_labels(moved)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    #[test]
    fn swap_on_two_vertices() {
        let swap = Permutation::from_one_based(&[2, 1]).unwrap();
        let p = sym_power_permutation(&swap, 2, Order::Paper).unwrap();
        assert_eq!(p.images(), &[1, 0, 2]);
        let p3 = sym_power_permutation(&swap, 3, Order::Paper).unwrap();
        assert_eq!(p3.images(), &[1, 0, 3, 2]);
    }

    #[test]
    fn identity_maps_to_identity() {
        let id = Permutation::identity(4);
        let p = sym_power_permutation(&id, 3, Order::Lex).unwrap();
        assert_eq!(p.as_permutation(), Permutation::identity(20));
    }

    #[test]
    fn invalid_permutations() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let s = Permutation::from_one_based(&[3, 1, 4, 2]).unwrap();
        let inv = s.inverse();
        for i in 0..4 {
            assert_eq!(inv.apply(s.apply(i)), i);
        }
    }

    #[test]
    fn relabel_path_reversal() {
        let p3: WeightedGraph<f64> = family("path", &[3]).unwrap();
        let rev = Permutation::from_one_based(&[3, 2, 1]).unwrap();
        assert_eq!(relabel(&p3, &rev).unwrap(), p3);
        assert_eq!(relabel(&p3, &Permutation::identity(3)).unwrap(), p3);
    }
}
