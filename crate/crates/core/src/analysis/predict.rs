//! Closed-form predictions for invariants of symmetric powers.

use num_rational::Ratio;

use super::{degree, neighbor_set, ComponentDescriptor};
use crate::combinatorics::{binomial, multiset_count, unrank, Order, VertexMultiset};
use crate::error::{Error, Result};
use crate::graph::{ExactWeight, WeightedGraph};
use crate::scalar::Weight;

/// Claim identifiers accepted by [`predict`].
pub const CLAIMS: &[&str] = &[
    "path_components",
    "path_loops",
    "cycle_components",
    "bipartite_decomposition",
    "component_bound",
    "deg2",
    "loops2",
    "edges2",
    "edge_bounds",
    "diag_degree",
    "neighbor_bound",
    "wiener_J",
    "wiener_K",
    "wiener_C2",
    "jn_weight",
];

fn c(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    binomial(n, k).ok_or_else(|| Error::InvalidParameter(format!("C({n}, {k}) overflows")))
}

fn ci(n: i64, k: i64) -> Result<i128> {
    if n < 0 || k < 0 {
        return Ok(0);
    }
    c(n as u64, k as u64).map(i128::from)
}

pub fn path_components(_n: usize, k: usize) -> usize {
    (k + 2) / 2
}

/// Loops of `P_n^(⊙k)`: `C(n+l-2, l)` when `k = 2l`, else none.
pub fn path_loops(n: usize, k: usize) -> Result<u64> {
    if k % 2 == 1 {
        return Ok(0);
    }
    let l = (k / 2) as u64;
    c(n as u64 + l - 2, l)
}

pub fn cycle_components(n: usize, k: usize) -> usize {
    if n % 2 == 1 {
        1
    } else {
        (k + 2) / 2
    }
}

/// Upper bound `2^(k-1)` on the component count of a power of a connected graph.
pub fn component_bound(k: usize) -> u64 {
    1u64 << (k - 1)
}

/// Component shapes of `K_{n,m}^(⊙k)`, sorted.
pub fn bipartite_decomposition(n: usize, m: usize, k: usize) -> Result<Vec<ComponentDescriptor>> {
    if n == 0 || m == 0 || k == 0 {
        return Err(Error::InvalidParameter(
            "n, m and k must be positive".into(),
        ));
    }
    let (n, m, k) = (n as u64, m as u64, k as u64);
    let mut out = Vec::new();
    for i in 0..=(k - 1) / 2 {
        let a = c(i + n - 1, i)? * c(k - i + m - 1, k - i)?;
        let b = c(i + m - 1, i)? * c(k - i + n - 1, k - i)?;
        out.push(ComponentDescriptor::complete_bipartite(
            a as usize, b as usize,
        ));
    }
    if k % 2 == 0 {
        let h = k / 2;
        let size = c(h + n - 1, h)? * c(h + m - 1, h)?;
        out.push(ComponentDescriptor::CompleteWithLoops(size as usize));
    }
    out.sort();
    Ok(out)
}

/// Edge weight of `J_n^(⊙k)` between two multisets.
pub fn jn_weight(i: &VertexMultiset, j: &VertexMultiset) -> Result<ExactWeight> {
    let oi = i.multiplicity().orbit_size()?;
    let oj = j.multiplicity().orbit_size()?;
    let prod = oi
        .checked_mul(oj)
        .ok_or_else(|| Error::InvalidParameter("orbit product overflows".into()))?;
    Ok(ExactWeight::sqrt_of_integer(prod))
}

/// `C(N, 2)` with `N = C(n+k-1, k)`.
pub fn wiener_j(n: usize, k: usize) -> Result<u64> {
    let big_n = multiset_count(n, k)? as u64;
    c(big_n, 2)
}

/// One printed reading of a closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reading {
    pub name: &'static str,
    pub value: Ratio<i128>,
}

fn k_parts(n: usize, k: usize) -> Result<(i128, i128)> {
    if n < 2 || k == 0 {
        return Err(Error::InvalidParameter(
            "complete graph readings need n >= 2, k >= 1".into(),
        ));
    }
    let big_n = multiset_count(n, k)? as i64;
    let (n, k) = (n as i64, k as i64);
    let even = i64::from(k % 2 == 0);
    let f = ci(k - (k + 1) / 2 - even + n - 1, n - 1)?;
    Ok((ci(big_n, 2)?, f))
}

/// `C(N,2) + (n/2) (C(k+2n-3, 2n-2) - F_k)`.
pub fn wiener_k_statement(n: usize, k: usize) -> Result<Ratio<i128>> {
    let (pairs, f) = k_parts(n, k)?;
    let (ni, ki) = (n as i64, k as i64);
    let t = ci(ki + 2 * ni - 3, 2 * ni - 2)?;
    Ok(Ratio::from_integer(pairs) + Ratio::new(n as i128 * (t - f), 2))
}

/// `C(N,2) + n (T_k - F_k)` with `T_k = C(k+2n-3, 2n-4)`.
pub fn wiener_k_proof(n: usize, k: usize) -> Result<Ratio<i128>> {
    let (pairs, f) = k_parts(n, k)?;
    let (ni, ki) = (n as i64, k as i64);
    let t = ci(ki + 2 * ni - 3, 2 * ni - 4)?;
    Ok(Ratio::from_integer(pairs + n as i128 * (t - f)))
}

pub fn wiener_k(n: usize, k: usize) -> Result<Vec<Reading>> {
    Ok(vec![
        Reading {
            name: "statement",
            value: wiener_k_statement(n, k)?,
        },
        Reading {
            name: "proof",
            value: wiener_k_proof(n, k)?,
        },
    ])
}

fn c2_check(n: usize) -> Result<i128> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(
            "cycle readings need odd n >= 3".into(),
        ));
    }
    let n = n as i128;
    Ok(n * (n * n - 1) / 8)
}

/// `C(n+2,2) W + (n C(n,2) - 2W) C(h,2) - 2 n^2 C(h,3)`, `h = (n+3)/2`,
/// `W = W(C_n)`.
pub fn wiener_c2_statement(n: usize) -> Result<Ratio<i128>> {
    let w = c2_check(n)?;
    let h = (n as i64 + 3) / 2;
    let ni = n as i128;
    let v = ci(n as i64 + 2, 2)? * w + (ni * ci(n as i64, 2)? - 2 * w) * ci(h, 2)?
        - 2 * ni * ni * ci(h, 3)?;
    Ok(Ratio::from_integer(v))
}

/// `sum_{i=0}^{upper} (2W + i n^2)(m - i) - m W` with `m = (n+1)/2`.
pub fn wiener_c2_sum(n: usize, upper: usize) -> Result<Ratio<i128>> {
    let w = c2_check(n)?;
    let ni = n as i128;
    let m = (ni + 1) / 2;
    let total: i128 = (0..=upper as i128)
        .map(|i| (2 * w + i * ni * ni) * (m - i))
        .sum();
    Ok(Ratio::from_integer(total - m * w))
}

pub fn wiener_c2(n: usize) -> Result<Vec<Reading>> {
    Ok(vec![
        Reading {
            name: "statement",
            value: wiener_c2_statement(n)?,
        },
        Reading {
            name: "sum_upper_(n+1)/2",
            value: wiener_c2_sum(n, n.div_ceil(2))?,
        },
        Reading {
            name: "sum_upper_(n-1)/2",
            value: wiener_c2_sum(n, (n - 1) / 2)?,
        },
    ])
}

fn check_vertex<W: Weight>(g: &WeightedGraph<W>, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(())
}

/// Degree of `{a, b}` in `G^(⊙2)` for loopless `G`.
pub fn deg2<W: Weight>(g: &WeightedGraph<W>, a: usize, b: usize) -> Result<u64> {
    check_vertex(g, a)?;
    check_vertex(g, b)?;
    if a == b {
        return c(degree(g, a) as u64 + 1, 2);
    }
    let na = neighbor_set(g, a);
    let nb = neighbor_set(g, b);
    let common = na.intersection(&nb).count() as u64;
    Ok((na.len() * nb.len()) as u64 - c(common, 2)?)
}

/// Loops of `G^(⊙2)`: edges of `G` (loops included) plus non-adjacent pairs
/// of looped vertices.
pub fn loops2<W: Weight>(g: &WeightedGraph<W>) -> u64 {
    let looped: Vec<usize> = (0..g.n()).filter(|&v| g.has_loop(v)).collect();
    let mut l_d = 0;
    for (x, &u) in looped.iter().enumerate() {
        l_d += looped[x + 1..]
            .iter()
            .filter(|&&v| !g.has_edge(u, v))
            .count() as u64;
    }
    g.pair_count() as u64 + l_d
}

/// Edges of `G^(⊙2)`: half of loops plus the degree sum over all pairs.
pub fn edges2<W: Weight>(g: &WeightedGraph<W>) -> Result<u64> {
    let mut total = loops2(g);
    for a in 0..g.n() {
        for b in a..g.n() {
            total += deg2(g, a, b)?;
        }
    }
    Ok(total / 2)
}

/// `[2^(k-1)|E|^k / k!, 2^(k-1)|E|^k]`, held exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeBounds {
    pub upper: u128,
    pub factorial: u128,
}

impl EdgeBounds {
    pub fn lower(&self) -> Ratio<u128> {
        Ratio::new(self.upper, self.factorial)
    }

    pub fn contains(&self, count: u64) -> bool {
        let count = count as u128;
        count * self.factorial >= self.upper && count <= self.upper
    }
}

pub fn edge_bounds<W: Weight>(g: &WeightedGraph<W>, k: usize) -> Result<EdgeBounds> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let overflow = || Error::InvalidParameter("edge bound overflows".into());
    let e = g.pair_count() as u128;
    let upper = e
        .checked_pow(k as u32)
        .and_then(|p| p.checked_mul(1u128 << (k - 1)))
        .ok_or_else(overflow)?;
    let factorial = (1..=k as u128)
        .try_fold(1u128, |acc, i| acc.checked_mul(i))
        .ok_or_else(overflow)?;
    Ok(EdgeBounds { upper, factorial })
}

/// Degree of the constant tuple `(v, ..., v)` in `G^(⊙k)`.
pub fn diag_degree<W: Weight>(g: &WeightedGraph<W>, v: usize, k: usize) -> Result<u64> {
    check_vertex(g, v)?;
    c((degree(g, v) + k - 1) as u64, k as u64)
}

/// `C(|union of N(i_l)| + k - 1, k)`.
pub fn neighbor_bound<W: Weight>(g: &WeightedGraph<W>, t: &VertexMultiset) -> Result<u64> {
    if t.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            got: t.n(),
        });
    }
    let union: std::collections::BTreeSet<usize> = t
        .indices()
        .into_iter()
        .flat_map(|v| neighbor_set(g, v))
        .collect();
    c((union.len() + t.k() - 1) as u64, t.k() as u64)
}

/// Result of a [`predict`] call.
#[derive(Debug, Clone, PartialEq)]
pub enum Prediction {
    Count(u64),
    Components(Vec<ComponentDescriptor>),
    Bounds(EdgeBounds),
    Readings(Vec<Reading>),
    Weight(ExactWeight),
}

fn arity(claim: &str, params: &[usize], want: usize) -> Result<()> {
    if params.len() != want {
        return Err(Error::InvalidParameter(format!(
            "{claim} takes {want} parameters, got {}",
            params.len()
        )));
    }
    Ok(())
}

fn need_graph<'a, W>(claim: &str, g: Option<&'a WeightedGraph<W>>) -> Result<&'a WeightedGraph<W>> {
    g.ok_or_else(|| Error::InvalidParameter(format!("{claim} needs a graph")))
}

/// Dispatches a claim id from [`CLAIMS`].
///
/// Vertex parameters are 0-based, except `neighbor_bound`, whose parameters
/// are the 1-based tuple entries. `jn_weight` takes `[n, k, rank_i, rank_j]`
/// with ranks in paper order.
pub fn predict<W: Weight>(
    claim: &str,
    graph: Option<&WeightedGraph<W>>,
    params: &[usize],
) -> Result<Prediction> {
    let p = params;
    let count = |v: usize| Prediction::Count(v as u64);
    match claim {
        "path_components" => arity(claim, p, 2).map(|_| count(path_components(p[0], p[1]))),
        "path_loops" => {
            arity(claim, p, 2).and_then(|_| path_loops(p[0], p[1]).map(Prediction::Count))
        }
        "cycle_components" => arity(claim, p, 2).map(|_| count(cycle_components(p[0], p[1]))),
        "bipartite_decomposition" => {
            arity(claim, p, 3)?;
            bipartite_decomposition(p[0], p[1], p[2]).map(Prediction::Components)
        }
        "component_bound" => {
            arity(claim, p, 1)?;
            if p[0] == 0 {
                return Err(Error::ZeroPower);
            }
            Ok(Prediction::Count(component_bound(p[0])))
        }
        "deg2" => {
            arity(claim, p, 2)?;
            deg2(need_graph(claim, graph)?, p[0], p[1]).map(Prediction::Count)
        }
        "loops2" => {
            arity(claim, p, 0)?;
            Ok(Prediction::Count(loops2(need_graph(claim, graph)?)))
        }
        "edges2" => {
            arity(claim, p, 0)?;
            edges2(need_graph(claim, graph)?).map(Prediction::Count)
        }
        "edge_bounds" => {
            arity(claim, p, 1)?;
            edge_bounds(need_graph(claim, graph)?, p[0]).map(Prediction::Bounds)
        }
        "diag_degree" => {
            arity(claim, p, 2)?;
            diag_degree(need_graph(claim, graph)?, p[0], p[1]).map(Prediction::Count)
        }
        "neighbor_bound" => {
            let g = need_graph(claim, graph)?;
            let t = VertexMultiset::from_tuple(p.to_vec(), g.n())?;
            neighbor_bound(g, &t).map(Prediction::Count)
        }
        "wiener_J" => arity(claim, p, 2).and_then(|_| wiener_j(p[0], p[1]).map(Prediction::Count)),
        "wiener_K" => {
            arity(claim, p, 2).and_then(|_| wiener_k(p[0], p[1]).map(Prediction::Readings))
        }
        "wiener_C2" => arity(claim, p, 1).and_then(|_| wiener_c2(p[0]).map(Prediction::Readings)),
        "jn_weight" => {
            arity(claim, p, 4)?;
            let i = unrank(p[2], p[0], p[1], Order::Paper)?;
            let j = unrank(p[3], p[0], p[1], Order::Paper)?;
            jn_weight(&i, &j).map(Prediction::Weight)
        }
        other => Err(Error::UnknownClaim(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;

    type G = WeightedGraph<f64>;

    #[test]
    fn counting_claims() {
        assert_eq!(path_components(3, 3), 2);
        assert_eq!(path_components(3, 4), 3);
        assert_eq!(path_loops(3, 4).unwrap(), 3);
        assert_eq!(path_loops(3, 3).unwrap(), 0);
        assert_eq!(cycle_components(5, 4), 1);
        assert_eq!(cycle_components(4, 3), 2);
        assert_eq!(wiener_j(3, 2).unwrap(), 15);
    }

    #[test]
    fn bipartite_k1_is_itself() {
        assert_eq!(
            bipartite_decomposition(2, 3, 1).unwrap(),
            vec![ComponentDescriptor::CompleteBipartite(2, 3)]
        );
        let d = bipartite_decomposition(2, 2, 2).unwrap();
        // one K_{3,3} and one looped block of size 2*2
        assert_eq!(
            d,
            vec![
                ComponentDescriptor::CompleteBipartite(3, 3),
                ComponentDescriptor::CompleteWithLoops(4)
            ]
        );
    }

    #[test]
    fn wiener_readings() {
        // hop-count values for K_n^(⊙k)
        for (n, k, w) in [
            (3, 1, 3),
            (3, 2, 21),
            (3, 3, 63),
            (4, 2, 57),
            (4, 3, 238),
            (5, 3, 695),
        ] {
            assert_eq!(
                wiener_k_statement(n, k).unwrap(),
                Ratio::from_integer(w),
                "n={n} k={k}"
            );
        }
        assert_ne!(wiener_k_proof(3, 2).unwrap(), Ratio::from_integer(21));
        for (n, w) in [(3, 21), (5, 235), (7, 1162)] {
            for r in wiener_c2(n).unwrap() {
                assert_eq!(r.value, Ratio::from_integer(w), "n={n} {}", r.name);
            }
        }
        assert!(wiener_c2(4).is_err());
        assert!(wiener_k(1, 2).is_err());
    }

    #[test]
    fn p3_second_power_formulas() {
        let p3: G = family("path", &[3]).unwrap();
        assert_eq!(deg2(&p3, 1, 1).unwrap(), 3);
        assert_eq!(deg2(&p3, 0, 1).unwrap(), 2);
        assert_eq!(loops2(&p3), 2);
        assert_eq!(edges2(&p3).unwrap(), 6);
        let b = edge_bounds(&p3, 2).unwrap();
        assert_eq!(
            b,
            EdgeBounds {
                upper: 8,
                factorial: 2
            }
        );
        assert!(b.contains(6));
        assert!(!b.contains(3));
        assert!(!b.contains(9));
    }

    #[test]
    fn looped_pairs_counted() {
        let mut g: G = WeightedGraph::new(2).unwrap();
        g.set_weight(0, 0, 1.0).unwrap();
        g.set_weight(1, 1, 1.0).unwrap();
        assert_eq!(loops2(&g), 3);
    }

    #[test]
    fn jn_weights() {
        let t = |e: Vec<usize>| VertexMultiset::new(e, 3).unwrap();
        assert_eq!(
            jn_weight(&t(vec![1, 1]), &t(vec![1, 2])).unwrap(),
            ExactWeight::sqrt_of_integer(2)
        );
        assert_eq!(
            jn_weight(&t(vec![1, 2]), &t(vec![2, 3])).unwrap(),
            ExactWeight::from_integer(2)
        );
    }

    #[test]
    fn dispatch() {
        let p3: G = family("path", &[3]).unwrap();
        assert_eq!(
            predict::<f64>("path_components", None, &[3, 3]).unwrap(),
            Prediction::Count(2)
        );
        assert_eq!(
            predict("diag_degree", Some(&p3), &[1, 2]).unwrap(),
            Prediction::Count(3)
        );
        assert_eq!(
            predict("neighbor_bound", Some(&p3), &[1, 3]).unwrap(),
            Prediction::Count(1)
        );
        assert_eq!(
            predict::<f64>("nonsense", None, &[]),
            Err(Error::UnknownClaim("nonsense".into()))
        );
        assert!(predict::<f64>("deg2", None, &[0, 1]).is_err());
        for claim in CLAIMS {
            assert_ne!(
                predict::<f64>(claim, None, &[]),
                Err(Error::UnknownClaim(claim.to_string()))
            );
        }
    }
}
