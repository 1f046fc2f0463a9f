//! Graph invariants on the unweighted support: components, loops, degrees,
//! edge counts and hop-count Wiener indices, plus closed-form predictors.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::scalar::Weight;

mod predict;

pub use predict::{
    bipartite_decomposition, component_bound, cycle_components, deg2, diag_degree, edge_bounds,
    edges2, jn_weight, loops2, neighbor_bound, path_components, path_loops, predict, wiener_c2,
    wiener_c2_statement, wiener_c2_sum, wiener_j, wiener_k, wiener_k_proof, wiener_k_statement,
    EdgeBounds, Prediction, Reading, CLAIMS,
};

/// Connected components of the support; ids are contiguous and ordered by
/// smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStructure {
    pub count: usize,
    pub assignment: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Loops never join components.
pub fn components<W: Weight>(g: &WeightedGraph<W>) -> ComponentStructure {
    let n = g.n();
    let mut uf = UnionFind::new(n);
    for (u, v, _) in g.edges() {
        if u != v {
            uf.union(u, v);
        }
    }
    let mut id_of_root = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let assignment: Vec<usize> = (0..n)
        .map(|v| {
            let root = uf.find(v);
            if id_of_root[root] == usize::MAX {
                id_of_root[root] = members.len();
                members.push(Vec::new());
            }
            members[id_of_root[root]].push(v);
            id_of_root[root]
        })
        .collect();
    ComponentStructure {
        count: members.len(),
        assignment,
        members,
    }
}

pub fn count_loops<W: Weight>(g: &WeightedGraph<W>) -> usize {
    (0..g.n()).filter(|&v| g.has_loop(v)).count()
}

/// Distinct neighbours; a loop puts `v` in its own neighbourhood once.
pub fn neighbor_set<W: Weight>(g: &WeightedGraph<W>, v: usize) -> BTreeSet<usize> {
    (0..g.n()).filter(|&u| g.has_edge(u, v)).collect()
}

pub fn degree<W: Weight>(g: &WeightedGraph<W>, v: usize) -> usize {
    (0..g.n()).filter(|&u| g.has_edge(u, v)).count()
}

/// Unordered pairs `u <= v` with nonzero weight; a loop counts once.
pub fn edge_count<W: Weight>(g: &WeightedGraph<W>) -> usize {
    g.pair_count()
}

/// Odd cycles, including loops, make a graph non-bipartite.
pub fn is_bipartite<W: Weight>(g: &WeightedGraph<W>) -> bool {
    let adj = g.adjacency_lists();
    let mut side = vec![None; g.n()];
    for s in 0..g.n() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("visited");
            for &w in &adj[u] {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn bfs(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("visited") + 1;
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances<W: Weight>(g: &WeightedGraph<W>, source: usize) -> Result<Vec<Option<usize>>> {
    if source >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            n: g.n(),
        });
    }
    Ok(bfs(&g.adjacency_lists(), source))
}

/// Sum of hop distances over unordered pairs, restricted to pairs in the same
/// component.
pub fn wiener_within_components<W: Weight>(g: &WeightedGraph<W>) -> u64 {
    let adj = g.adjacency_lists();
    let twice: u64 = (0..g.n())
        .into_par_iter()
        .map(|s| {
            bfs(&adj, s)
                .into_iter()
                .flatten()
                .map(|d| d as u64)
                .sum::<u64>()
        })
        .sum();
    twice / 2
}

/// Wiener index of a connected graph on its unweighted support.
pub fn wiener_index<W: Weight>(g: &WeightedGraph<W>) -> Result<u64> {
    let c = components(g);
    if c.count > 1 {
        return Err(Error::Disconnected {
            components: c.count,
        });
    }
    Ok(wiener_within_components(g))
}

/// Unweighted shape of one connected component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentDescriptor {
    /// Loopless complete bipartite; part sizes with `a <= b`.
    CompleteBipartite(usize, usize),
    /// Every pair adjacent and every vertex looped.
    CompleteWithLoops(usize),
    Other(usize),
}

impl ComponentDescriptor {
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::CompleteBipartite(a.min(b), a.max(b))
    }

    pub fn size(&self) -> usize {
        match *self {
            Self::CompleteBipartite(a, b) => a + b,
            Self::CompleteWithLoops(s) | Self::Other(s) => s,
        }
    }
}

/// Classifies the induced subgraph on `members`, assumed to be a component.
pub fn classify_component<W: Weight>(
    g: &WeightedGraph<W>,
    members: &[usize],
) -> ComponentDescriptor {
    let size = members.len();
    let all_pairs = members
        .iter()
        .enumerate()
        .all(|(x, &u)| members[x..].iter().all(|&v| g.has_edge(u, v)));
    if all_pairs {
        return ComponentDescriptor::CompleteWithLoops(size);
    }
    if members.iter().any(|&v| g.has_loop(v)) {
        return ComponentDescriptor::Other(size);
    }
    let adj = g.adjacency_lists();
    let mut side = std::collections::HashMap::new();
    side.insert(members[0], false);
    let mut queue = VecDeque::from([members[0]]);
    while let Some(u) = queue.pop_front() {
        let su = side[&u];
        for &w in &adj[u] {
            match side.get(&w) {
                None => {
                    side.insert(w, !su);
                    queue.push_back(w);
                }
                Some(&sw) if sw == su => return ComponentDescriptor::Other(size),
                Some(_) => {}
            }
        }
    }
    let (left, right): (Vec<usize>, Vec<usize>) = members.iter().partition(|v| !side[v]);
    let complete = left
        .iter()
        .all(|&u| right.iter().all(|&v| g.has_edge(u, v)));
    if complete && !right.is_empty() {
        ComponentDescriptor::complete_bipartite(left.len(), right.len())
    } else {
        ComponentDescriptor::Other(size)
    }
}

/// Sorted descriptors of every component.
pub fn component_descriptors<W: Weight>(g: &WeightedGraph<W>) -> Vec<ComponentDescriptor> {
    let mut out: Vec<_> = components(g)
        .members
        .iter()
        .map(|m| classify_component(g, m))
        .collect();
    out.sort();
    out
}
