//! Embeddings of lower symmetric powers into higher ones.
//!
//! With a loop at `v`, prepending copies of `v` to every tuple maps adjacent
//! pairs of `G^(⊙k1)` to adjacent pairs of `G^(⊙k2)` for any `k1 <= k2`.
//! With an edge `u ~ v`, adding `l` copies of both `u` and `v` does the same
//! for `k2 = k1 + 2l`. Adjacency is preserved for nonnegative weights;
//! weights themselves need not grow, see [`weight_comparison`].

use crate::combinatorics::VertexMultiset;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::scalar::Scalar;
use crate::sympower::{sym_power, PowerOptions};

/// Adds `extra` copies of the 1-based vertex `vertex` to `t`.
pub fn prepend_loop_vertex(
    t: &VertexMultiset,
    vertex: usize,
    extra: usize,
) -> Result<VertexMultiset> {
    let mut e = t.entries().to_vec();
    e.extend(std::iter::repeat_n(vertex, extra));
    VertexMultiset::from_tuple(e, t.n())
}

/// Adds `ell` copies of each endpoint of the edge `u ~ v` (1-based) to `t`.
pub fn prepend_alternating_edge(
    t: &VertexMultiset,
    u: usize,
    v: usize,
    ell: usize,
) -> Result<VertexMultiset> {
    let mut e = t.entries().to_vec();
    for _ in 0..ell {
        e.push(u);
        e.push(v);
    }
    VertexMultiset::from_tuple(e, t.n())
}

/// Per-pair comparison of `G^(⊙k1)` against `G^(⊙k2)` under an injection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WeightComparison {
    /// Nonzero pairs of the lower power.
    pub pairs: usize,
    /// Pairs whose image is not adjacent.
    pub lost: usize,
    /// Pairs whose image carries a strictly smaller weight.
    pub decreased: usize,
}

impl WeightComparison {
    pub fn support_embeds(&self) -> bool {
        self.lost == 0
    }

    pub fn weights_monotone(&self) -> bool {
        self.lost == 0 && self.decreased == 0
    }
}

/// Compares every nonzero pair of `G^(⊙k1)` with the pair it maps to in `G^(⊙k2)`.
pub fn weight_comparison<T: Scalar>(
    g: &WeightedGraph<T>,
    k1: usize,
    k2: usize,
    opts: &PowerOptions,
    map: impl Fn(&VertexMultiset) -> Result<VertexMultiset>,
) -> Result<WeightComparison> {
    if k1 > k2 {
        return Err(Error::InvalidParameter(format!(
            "cannot embed power {k1} into power {k2}"
        )));
    }
    let low = sym_power(g, k1, opts)?;
    let high = sym_power(g, k2, opts)?;
    let images = low
        .basis()
        .iter()
        .map(|t| high.rank_of(&map(t)?))
        .collect::<Result<Vec<usize>>>()?;
    let mut out = WeightComparison::default();
    for i in 0..low.dim() {
        for j in i..low.dim() {
            if low.core()[(i, j)].is_zero() {
                continue;
            }
            out.pairs += 1;
            let (a, b) = (images[i], images[j]);
            if high.core()[(a, b)].is_zero() {
                out.lost += 1;
            } else if high.value(a, b) < low.value(i, j) * (1.0 - 1e-12) {
                out.decreased += 1;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Order;
    use crate::graph::family;
    use crate::sympower::Method;

    #[test]
    fn scepter_nests_by_prepending_the_loop_vertex() {
        let g: WeightedGraph<f64> = family("scepter", &[]).unwrap();
        let opts = PowerOptions::new(Method::Permanent, Order::Paper);
        for k1 in 1..4 {
            for k2 in k1..5 {
                let cmp =
                    weight_comparison(&g, k1, k2, &opts, |t| prepend_loop_vertex(t, 1, k2 - k1))
                        .unwrap();
                assert!(cmp.support_embeds(), "k1={k1} k2={k2}");
            }
        }
    }

    #[test]
    fn path_nests_two_steps_at_a_time() {
        let g: WeightedGraph<f64> = family("path", &[3]).unwrap();
        let opts = PowerOptions::new(Method::Permanent, Order::Paper);
        let cmp =
            weight_comparison(&g, 1, 3, &opts, |t| prepend_alternating_edge(t, 1, 2, 1)).unwrap();
        assert!(cmp.support_embeds());
        assert_eq!(cmp.pairs, 2);
    }

    #[test]
    fn lower_power_must_not_exceed_higher() {
        let g: WeightedGraph<f64> = family("scepter", &[]).unwrap();
        let opts = PowerOptions::default();
        assert!(weight_comparison(&g, 3, 2, &opts, |t| Ok(t.clone())).is_err());
    }
}
