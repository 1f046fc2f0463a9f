use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::scalar::Scalar;

/// The unweighted graph families used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P_n`: `i ~ j` iff `|i - j| = 1`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`, loopless.
    Complete(usize),
    /// `J_n`: all pairs adjacent, a loop at every vertex.
    CompleteWithLoops(usize),
    /// `K_{n,m}` with parts `1..=n` and `n+1..=n+m`.
    CompleteBipartite(usize, usize),
    /// `S_m = K_{1,m}`, center vertex 1.
    Star(usize),
    /// Two vertices, a loop at vertex 1 and the edge 1-2.
    Scepter,
}

impl Family {
    pub const NAMES: [&'static str; 7] = [
        "path",
        "cycle",
        "complete",
        "complete_loops",
        "complete_bipartite",
        "star",
        "scepter",
    ];

    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |want: usize| -> Result<()> {
            if params.len() != want {
                return Err(Error::InvalidParameter(format!(
                    "family `{name}` takes {want} parameter(s), got {}",
                    params.len()
                )));
            }
            if params.contains(&0) {
                return Err(Error::InvalidParameter(format!(
                    "family `{name}` parameters must be positive"
                )));
            }
            Ok(())
        };
        let family = match name {
            "path" => {
                arity(1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                if params[0] < 3 {
                    return Err(Error::InvalidParameter(format!(
                        "cycle needs n >= 3, got {}",
                        params[0]
                    )));
                }
                Family::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                Family::Complete(params[0])
            }
            "complete_loops" => {
                arity(1)?;
                Family::CompleteWithLoops(params[0])
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "star" => {
                arity(1)?;
                Family::Star(params[0])
            }
            "scepter" => {
                arity(0)?;
                Family::Scepter
            }
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family `{other}` (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        };
        Ok(family)
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::CompleteWithLoops(n) => n,
            Family::CompleteBipartite(n, m) => n + m,
            Family::Star(m) => m + 1,
            Family::Scepter => 2,
        }
    }

    pub fn build<W: Scalar>(&self) -> Result<WeightedGraph<W>> {
        let n = self.vertex_count();
        let mut g = WeightedGraph::new(n)?;
        match *self {
            Family::Path(n) => {
                for i in 1..n {
                    g.add_unit_edge(i - 1, i)?;
                }
            }
            Family::Cycle(n) => {
                for i in 0..n {
                    g.add_unit_edge(i, (i + 1) % n)?;
                }
            }
            Family::Complete(n) => {
                for i in 0..n {
                    for j in i + 1..n {
                        g.add_unit_edge(i, j)?;
                    }
                }
            }
            Family::CompleteWithLoops(n) => {
                for i in 0..n {
                    for j in i..n {
                        g.add_unit_edge(i, j)?;
                    }
                }
            }
            Family::CompleteBipartite(a, b) => {
                for i in 0..a {
                    for j in a..a + b {
                        g.add_unit_edge(i, j)?;
                    }
                }
            }
            Family::Star(m) => {
                for j in 1..=m {
                    g.add_unit_edge(0, j)?;
                }
            }
            Family::Scepter => {
                g.add_unit_edge(0, 0)?;
                g.add_unit_edge(0, 1)?;
            }
        }
        Ok(g)
    }
}

/// Builds the named family member with unit weights.
pub fn family<W: Scalar>(name: &str, params: &[usize]) -> Result<WeightedGraph<W>> {
    Family::parse(name, params)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &WeightedGraph<f64>) -> Vec<(usize, usize)> {
        g.edges().map(|(u, v, _)| (u + 1, v + 1)).collect()
    }

    #[test]
    fn small_members() {
        let p3: WeightedGraph<f64> = family("path", &[3]).unwrap();
        assert_eq!(edges(&p3), vec![(1, 2), (2, 3)]);
        let j3: WeightedGraph<f64> = family("complete_loops", &[3]).unwrap();
        assert_eq!(j3.pair_count(), 6);
        assert_eq!((0..3).filter(|&v| j3.has_loop(v)).count(), 3);
        let sc: WeightedGraph<f64> = family("scepter", &[]).unwrap();
        assert_eq!(edges(&sc), vec![(1, 1), (1, 2)]);
        let k3: WeightedGraph<f64> = family("complete", &[3]).unwrap();
        assert_eq!(
            k3.adjacency_matrix().rows(),
            vec![
                vec![0.0, 1.0, 1.0],
                vec![1.0, 0.0, 1.0],
                vec![1.0, 1.0, 0.0]
            ]
        );
        let sc_a = sc.adjacency_matrix().rows();
        assert_eq!(sc_a, vec![vec![1.0, 1.0], vec![1.0, 0.0]]);
    }

    #[test]
    fn edge_counts() {
        for n in 1..=7 {
            let count = |name: &str| family::<f64>(name, &[n]).unwrap().pair_count();
            assert_eq!(count("path"), n - 1);
            assert_eq!(count("complete"), n * (n - 1) / 2);
            assert_eq!(count("complete_loops"), n * (n + 1) / 2);
            if n >= 3 {
                assert_eq!(count("cycle"), n);
            }
            for m in 1..=4 {
                let g: WeightedGraph<f64> = family("complete_bipartite", &[n, m]).unwrap();
                assert_eq!(g.pair_count(), n * m);
            }
        }
    }

    #[test]
    fn family_outputs_are_unit_weighted() {
        let g: WeightedGraph<f64> = family("complete_bipartite", &[2, 3]).unwrap();
        assert!(g.edges().all(|(_, _, &w)| w == 1.0));
    }

    #[test]
    fn bad_parameters() {
        assert!(family::<f64>("cycle", &[2]).is_err());
        assert!(family::<f64>("path", &[0]).is_err());
        assert!(family::<f64>("path", &[]).is_err());
        assert!(family::<f64>("scepter", &[1]).is_err());
        assert!(family::<f64>("wheel", &[4]).is_err());
    }
}
