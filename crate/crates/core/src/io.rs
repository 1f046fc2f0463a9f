//! Edge-list text format, DOT export and JSON statistics.
//!
//! The text format: the first non-comment line holds `n`; each further line
//! is `u v [w]` with 1-based vertices and `w` defaulting to 1. `#` starts a
//! comment, except that `# label v text` assigns a vertex label. Weights are
//! decimals, fractions `a/b`, or surds `sqrt(r)`, `-sqrt(r)`, `q*sqrt(r)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{components, count_loops, degree, edge_count, wiener_index};
use crate::error::{Error, Result};
use crate::graph::{ExactWeight, WeightedGraph};
use crate::scalar::Weight;
use crate::spectra::eigenvalues_symmetric;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_with<W: Weight>(
    text: &str,
    parse_weight: impl Fn(&str) -> Option<W>,
) -> Result<WeightedGraph<W>> {
    let mut graph: Option<WeightedGraph<W>> = None;
    let mut labels: BTreeMap<usize, (usize, String)> = BTreeMap::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(rest) = comment.and_then(|c| c.trim_start().strip_prefix("label ")) {
            let (v, text) = rest
                .trim()
                .split_once(char::is_whitespace)
                .unwrap_or((rest.trim(), ""));
            let v: usize = v
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad label vertex `{v}`")))?;
            labels.insert(v, (line_no, text.trim().to_string()));
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let Some(g) = graph.as_mut() else {
            if tokens.len() != 1 {
                return Err(parse_error(
                    line_no,
                    "expected the vertex count on its own line",
                ));
            }
            let n: usize = tokens[0]
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad vertex count `{}`", tokens[0])))?;
            if n == 0 {
                return Err(parse_error(line_no, "vertex count must be positive"));
            }
            graph = Some(WeightedGraph::new(n)?);
            continue;
        };
        if !(2..=3).contains(&tokens.len()) {
            return Err(parse_error(line_no, "expected `u v [w]`"));
        }
        let vertex = |t: &str| -> Result<usize> {
            let v: usize = t
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad vertex `{t}`")))?;
            if v == 0 || v > g.n() {
                return Err(parse_error(
                    line_no,
                    format!("vertex {v} out of range 1..={}", g.n()),
                ));
            }
            Ok(v - 1)
        };
        let (u, v) = (vertex(tokens[0])?, vertex(tokens[1])?);
        let (u, v) = (u.min(v), u.max(v));
        if !seen.insert((u, v)) {
            return Err(parse_error(
                line_no,
                format!("duplicate pair {} {}", u + 1, v + 1),
            ));
        }
        let w = match tokens.get(2) {
            None => parse_weight("1").expect("unit weight parses"),
            Some(t) => match parse_weight(t) {
                Some(w) => w,
                None if t.parse::<f64>().is_ok_and(|x| !x.is_finite()) => {
                    return Err(parse_error(line_no, format!("non-finite weight `{t}`")))
                }
                None => return Err(parse_error(line_no, format!("bad weight `{t}`"))),
            },
        };
        if !w.is_finite_weight() {
            return Err(parse_error(
                line_no,
                format!("non-finite weight `{}`", tokens[2]),
            ));
        }
        g.set_weight(u, v, w)?;
    }
    let graph =
        graph.ok_or_else(|| parse_error(text.lines().count().max(1), "missing vertex count"))?;
    if labels.is_empty() {
        return Ok(graph);
    }
    let mut names: Vec<String> = (1..=graph.n()).map(|v| v.to_string()).collect();
    for (v, (line_no, text)) in labels {
        if v == 0 || v > graph.n() {
            return Err(parse_error(
                line_no,
                format!("label vertex {v} out of range"),
            ));
        }
        names[v - 1] = text;
    }
    graph.with_labels(names)
}

/// Parses with exact weights.
pub fn parse_graph(text: &str) -> Result<WeightedGraph<ExactWeight>> {
    parse_with(text, |t| t.parse::<ExactWeight>().ok())
}

/// Parses with float weights; surd tokens are evaluated.
pub fn parse_graph_f64(text: &str) -> Result<WeightedGraph<f64>> {
    parse_with(text, |t| {
        t.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .or_else(|| t.parse::<ExactWeight>().ok().map(|w| w.to_f64()))
    })
}

fn write_with<W: Weight>(g: &WeightedGraph<W>, fmt_weight: impl Fn(&W) -> String) -> String {
    let mut out = format!("{}\n", g.n());
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            writeln!(out, "# label {} {}", v + 1, l).expect("string write");
        }
    }
    for (u, v, w) in g.edges() {
        writeln!(out, "{} {} {}", u + 1, v + 1, fmt_weight(w)).expect("string write");
    }
    out
}

/// Weights as shortest round-trip decimals.
pub fn write_graph<W: Weight>(g: &WeightedGraph<W>) -> String {
    write_with(g, |w| w.to_f64().to_string())
}

/// Weights as exact `q`, `sqrt(r)` or `q*sqrt(r)` tokens.
pub fn write_graph_exact(g: &WeightedGraph<ExactWeight>) -> String {
    write_with(g, ExactWeight::to_string)
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT; loops appear as self-edges and weights as edge labels.
pub fn write_dot<W: Weight>(g: &WeightedGraph<W>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {} [label={}];", v + 1, dot_quote(&g.label(v))).expect("string write");
    }
    for (u, v, w) in g.edges() {
        writeln!(
            out,
            "  {} -- {} [label={}];",
            u + 1,
            v + 1,
            dot_quote(&w.to_f64().to_string())
        )
        .expect("string write");
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StatsOptions {
    pub wiener: bool,
    pub spectrum: bool,
}

#[derive(Serialize)]
struct Stats {
    n: usize,
    edges: usize,
    loops: usize,
    components: usize,
    degrees: Vec<usize>,
    wiener: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<f64>>,
}

/// JSON object with keys `n, edges, loops, components, degrees, wiener` and
/// optionally `spectrum`. `wiener` is null unless requested and connected.
pub fn write_stats_json<W: Weight>(g: &WeightedGraph<W>, opts: StatsOptions) -> Result<String> {
    let spectrum = if opts.spectrum {
        Some(eigenvalues_symmetric(&g.adjacency_f64())?.values().to_vec())
    } else {
        None
    };
    let stats = Stats {
        n: g.n(),
        edges: edge_count(g),
        loops: count_loops(g),
        components: components(g).count,
        degrees: (0..g.n()).map(|v| degree(g, v)).collect(),
        wiener: if opts.wiener {
            wiener_index(g).ok()
        } else {
            None
        },
        spectrum,
    };
    let mut s = serde_json::to_string_pretty(&stats).expect("plain data serializes");
    s.push('\n');
    Ok(s)
}
