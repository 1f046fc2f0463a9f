//! Seeded theorem suites behind `symtensor verify`.
//!
//! Every suite enumerates its cases deterministically from the seed and the
//! `nmax`/`kmax` bounds, and reports failures as
//! `FAIL <suite> <case> <expected> <got>` with whitespace-free fields.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    bipartite_decomposition, component_bound, component_descriptors, components, count_loops,
    cycle_components, deg2, degree, diag_degree, edge_bounds, edge_count, edges2, is_bipartite,
    loops2, neighbor_bound, path_components, path_loops, wiener_c2, wiener_index, wiener_j,
    wiener_k, Reading,
};
use crate::combinatorics::{
    binomial, enumerate_multisets, multiset_count, rank, Order, VertexMultiset,
};
use crate::error::{Error, Result};
use crate::graph::{Family, WeightedGraph};
use crate::matrix::Matrix;
use crate::spectra::{
    bareiss_determinant, det_formula, eigenvalues_symmetric, log_determinant,
    predicted_power_spectrum, spectra_match, trace_formula,
};
use crate::sympower::{
    relabel, sym_power, sym_power_graph, sym_power_of_matrix, sym_power_permutation, Method,
    Permutation, PowerOptions, DEFAULT_MAX_DIM,
};

type Graph = WeightedGraph<f64>;
type ExactGraph = WeightedGraph<BigRational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Kernels,
    Spectra,
    Subgraph,
    Components,
    Degrees,
    Wiener,
    Permutation,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 7] = [
        Suite::Kernels,
        Suite::Spectra,
        Suite::Subgraph,
        Suite::Components,
        Suite::Degrees,
        Suite::Wiener,
        Suite::Permutation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kernels => "kernels",
            Suite::Spectra => "spectra",
            Suite::Subgraph => "subgraph",
            Suite::Components => "components",
            Suite::Degrees => "degrees",
            Suite::Wiener => "wiener",
            Suite::Permutation => "permutation",
            Suite::All => "all",
        }
    }

    fn salt(self) -> u64 {
        Suite::INDIVIDUAL
            .iter()
            .position(|&s| s == self)
            .unwrap_or(7) as u64
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub nmax: usize,
    pub kmax: usize,
    pub seed: u64,
    pub max_dim: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            nmax: 5,
            kmax: 3,
            seed: 0,
            max_dim: DEFAULT_MAX_DIM,
        }
    }
}

impl VerifyConfig {
    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ suite.salt())
    }

    fn opts(&self, method: Method) -> PowerOptions {
        PowerOptions::new(method, Order::Paper).with_max_dim(self.max_dim)
    }

    fn fits(&self, n: usize, k: usize) -> bool {
        multiset_count(n, k).is_ok_and(|d| d <= self.max_dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub suite: &'static str,
    pub case: String,
    pub expected: String,
    pub got: String,
}

fn token(s: &str) -> String {
    let t: String = s.split_whitespace().collect::<Vec<_>>().join("_");
    if t.is_empty() {
        "-".into()
    } else {
        t
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FAIL {} {} {} {}",
            self.suite,
            token(&self.case),
            token(&self.expected),
            token(&self.got)
        )
    }
}

/// Outcome of one suite: case count, failures and informational lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Self {
            suite: suite.name(),
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, case: impl fmt::Display, expected: T, got: T) {
        self.cases += 1;
        if expected != got {
            self.fail(case, expected, got);
        }
    }

    fn ensure(
        &mut self,
        case: impl fmt::Display,
        ok: bool,
        expected: &str,
        got: impl fmt::Display,
    ) {
        self.cases += 1;
        if !ok {
            self.fail(case, expected, got);
        }
    }

    fn fail(
        &mut self,
        case: impl fmt::Display,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) {
        self.failures.push(Failure {
            suite: self.suite,
            case: case.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        });
    }

    /// Records an unexpected library error as a failure.
    fn guard<T>(&mut self, case: impl fmt::Display, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(case, "ok", format!("error:{e}"));
                None
            }
        }
    }
}

/// Runs one suite, or all of them in a fixed order.
pub fn run(suite: Suite, cfg: &VerifyConfig) -> Vec<Report> {
    match suite {
        Suite::All => Suite::INDIVIDUAL.iter().map(|&s| run_one(s, cfg)).collect(),
        s => vec![run_one(s, cfg)],
    }
}

fn run_one(suite: Suite, cfg: &VerifyConfig) -> Report {
    match suite {
        Suite::Kernels => kernels_suite(cfg),
        Suite::Spectra => spectra_suite(cfg),
        Suite::Subgraph => subgraph_suite(cfg),
        Suite::Components => components_suite(cfg),
        Suite::Degrees => degrees_suite(cfg),
        Suite::Wiener => wiener_suite(cfg),
        Suite::Permutation => permutation_suite(cfg),
        Suite::All => unreachable!("expanded by run"),
    }
}

// ---- random inputs ----

/// Loopless 0/1 graph with independent edge probability `p`.
pub fn random_simple_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    random_graph(rng, n, p, 0.0)
}

/// 0/1 graph with edge probability `p` and loop probability `loop_p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64, loop_p: f64) -> Graph {
    let mut g = Graph::new(n).expect("n >= 1");
    for u in 0..n {
        if rng.gen_bool(loop_p) {
            g.add_unit_edge(u, u).expect("in range");
        }
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_unit_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Loopless connected 0/1 graph: a random tree plus extra edges.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = random_simple_graph(rng, n, p);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_unit_edge(u, v).expect("in range");
    }
    g
}

/// Random perfect matching on an even number of vertices.
pub fn random_matching<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n).expect("n >= 1");
    for pair in order.chunks_exact(2) {
        g.add_unit_edge(pair[0], pair[1]).expect("in range");
    }
    g
}

/// Signed rational weights `a/b` with `|a| <= 3`, `1 <= b <= 3`, loops allowed.
pub fn random_rational_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ExactGraph {
    let mut g = ExactGraph::new(n).expect("n >= 1");
    for u in 0..n {
        for v in u..n {
            if rng.gen_bool(0.5) {
                let a: i64 = rng.gen_range(-3..=3);
                let b: i64 = rng.gen_range(1..=3);
                g.set_weight(u, v, BigRational::new(a.into(), b.into()))
                    .expect("finite");
            }
        }
    }
    g
}

/// Every family member with at most `nmax` vertices.
pub fn family_graphs(nmax: usize) -> Vec<(String, Family)> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        out.push((format!("path({n})"), Family::Path(n)));
        if n >= 3 {
            out.push((format!("cycle({n})"), Family::Cycle(n)));
        }
        out.push((format!("complete({n})"), Family::Complete(n)));
        out.push((format!("complete_loops({n})"), Family::CompleteWithLoops(n)));
        if n >= 2 {
            out.push((format!("star({})", n - 1), Family::Star(n - 1)));
        }
        for a in 1..n {
            if a <= n - a {
                out.push((
                    format!("complete_bipartite({a},{})", n - a),
                    Family::CompleteBipartite(a, n - a),
                ));
            }
        }
    }
    if nmax >= 2 {
        out.push(("scepter".into(), Family::Scepter));
    }
    out
}

fn exact(g: &Graph) -> ExactGraph {
    ExactGraph::from_f64_graph(g).expect("finite weights")
}

fn power_of(g: &Graph, k: usize, cfg: &VerifyConfig) -> Result<Graph> {
    sym_power_graph(g, k, &cfg.opts(Method::Permanent))
}

fn tuple_rank(entries: Vec<usize>, n: usize) -> usize {
    rank(
        &VertexMultiset::from_tuple(entries, n).expect("valid tuple"),
        Order::Paper,
    )
    .expect("valid rank")
}

// ---- suites ----

/// Orbit-sum and permanent kernels agree exactly on the core matrix.
pub fn check_kernels_agree(
    g: &ExactGraph,
    k: usize,
    opts: &PowerOptions,
) -> Result<Option<(usize, usize)>> {
    let mut orbit = *opts;
    orbit.method = Method::Orbit;
    let mut perm = *opts;
    perm.method = Method::Permanent;
    let a = sym_power(g, k, &orbit)?;
    let b = sym_power(g, k, &perm)?;
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if a.core()[(i, j)] != b.core()[(i, j)] {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

fn kernels_suite(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new(Suite::Kernels);
    let mut rng = cfg.rng(Suite::Kernels);
    let mut graphs: Vec<(String, ExactGraph)> = family_graphs(cfg.nmax)
        .into_iter()
        .map(|(name, f)| (name, f.build().expect("valid family")))
        .collect();
    for i in 0..25 {
        let n = rng.gen_range(1..=cfg.nmax.max(1));
        graphs.push((
            format!("random#{i}(n={n})"),
            random_rational_graph(&mut rng, n),
        ));
    }
    for (name, g) in &graphs {
        for k in 1..=cfg.kmax {
            if !cfg.fits(g.n(), k) {
                continue;
            }
            let case = format!("{name},k={k}");
            if let Some(mismatch) = r.guard(
                &case,
                check_kernels_agree(g, k, &cfg.opts(Method::Permanent)),
            ) {
                let got = mismatch.map_or("equal".to_string(), |(i, j)| format!("differs@{i},{j}"));
                r.check(case, "equal".to_string(), got);
            }
        }
    }
    r
}

/// Spectrum, trace and determinant identities for one graph and power.
pub fn check_spectral(
    r: &mut SpectralChecks,
    g: &Graph,
    k: usize,
    opts: &PowerOptions,
    exact_det: bool,
) -> Result<()> {
    let a = g.adjacency_f64();
    let spec_a = eigenvalues_symmetric(&a)?;
    let power = sym_power(g, k, opts)?;
    let e = power.materialize();
    let computed = eigenvalues_symmetric(&e)?;
    let predicted = predicted_power_spectrum(&spec_a, k)?;
    r.spectrum = spectra_match(&computed, &predicted);

    let trace = e.trace();
    let h = trace_formula(&spec_a, k);
    r.trace = (trace - h).abs() <= 1e-8 * 1f64.max(trace.abs()).max(h.abs());

    let formula = det_formula(log_determinant(&a).value(), g.n(), k)?;
    let lu = log_determinant(&e);
    r.det_float = formula.sign == 0 || lu.approx_eq(&formula, 1e-6);

    if exact_det {
        let ga = exact(g);
        let s = sym_power(&ga, k, opts)?;
        let det_s = bareiss_determinant(s.core());
        let d_prod = s.normalizers().iter().fold(BigRational::one(), |acc, &d| {
            acc * BigRational::from_integer(d.into())
        });
        let det_e = det_s / d_prod;
        let det_a = bareiss_determinant(&ga.adjacency_matrix());
        let exponent = binomial((g.n() + k - 1) as u64, g.n() as u64)
            .ok_or(Error::CountOverflow { n: g.n(), k })?;
        let expected = num_traits::pow(det_a, exponent as usize);
        r.det_exact = Some(det_e == expected);
        // float sign agrees with the exact determinant
        let sign = if expected.is_zero() {
            0
        } else if expected > BigRational::zero() {
            1
        } else {
            -1
        };
        r.det_float &= formula.sign == sign;
    }
    Ok(())
}

/// Per-case results of [`check_spectral`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SpectralChecks {
    pub spectrum: bool,
    pub trace: bool,
    pub det_float: bool,
    pub det_exact: Option<bool>,
}

fn spectra_suite(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new(Suite::Spectra);
    let mut rng = cfg.rng(Suite::Spectra);
    let mut graphs: Vec<(String, Graph)> = family_graphs(cfg.nmax)
        .into_iter()
        .map(|(name, f)| (name, f.build().expect("valid family")))
        .collect();
    for i in 0..50 {
        let n = rng.gen_range(1..=cfg.nmax.max(1));
        graphs.push((
            format!("random#{i}(n={n})"),
            random_rational_graph(&mut rng, n).to_f64(),
        ));
    }
    for (name, g) in &graphs {
        for k in 1..=cfg.kmax {
            if !cfg.fits(g.n(), k) {
                continue;
            }
            let case = format!("{name},k={k}");
            let mut checks = SpectralChecks::default();
            let exact_det = g.n() <= 5 && k <= 3;
            if r.guard(
                &case,
                check_spectral(&mut checks, g, k, &cfg.opts(Method::Permanent), exact_det),
            )
            .is_none()
            {
                continue;
            }
            r.check(format!("{case},spectrum"), true, checks.spectrum);
            r.check(format!("{case},trace"), true, checks.trace);
            r.check(format!("{case},det_sign_log"), true, checks.det_float);
            if let Some(ok) = checks.det_exact {
                r.check(format!("{case},det_exact"), true, ok);
            }
        }
    }
    r
}

/// Constant tuples induce a copy of `A` with unit normalizers.
pub fn check_subgraph(g: &ExactGraph, k: usize, opts: &PowerOptions) -> Result<bool> {
    let p = sym_power(g, k, opts)?;
    let n = g.n();
    let idx: Vec<usize> = (1..=n).map(|v| tuple_rank(vec![v; k], n)).collect();
    let a = g.adjacency_matrix();
    Ok(idx.iter().enumerate().all(|(u, &x)| {
        p.normalizers()[x] == 1
            && idx
                .iter()
                .enumerate()
                .all(|(v, &y)| p.core()[(x, y)] == a[(u, v)])
    }))
}

fn subgraph_suite(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new(Suite::Subgraph);
    let mut rng = cfg.rng(Suite::Subgraph);
    for i in 0..100 {
        let n = rng.gen_range(1..=cfg.nmax.max(1));
        let k = rng.gen_range(1..=cfg.kmax.max(1));
        if !cfg.fits(n, k) {
            continue;
        }
        let g = exact(&random_graph(&mut rng, n, 0.5, 0.3));
        let case = format!("random#{i}(n={n}),k={k}");
        if let Some(ok) = r.guard(&case, check_subgraph(&g, k, &cfg.opts(Method::Permanent))) {
            r.check(case, true, ok);
        }
    }
    r
}

fn components_suite(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new(Suite::Components);
    let mut rng = cfg.rng(Suite::Components);
    let count = |r: &mut Report, case: &str, g: &Graph, k: usize| -> Option<usize> {
        r.guard(case, power_of(g, k, cfg))
            .map(|p| components(&p).count)
    };
    for n in 2..=cfg.nmax.max(2) {
        let path: Graph = Family::Path(n).build().expect("valid");
        for k in 1..=cfg.kmax {
            if !cfg.fits(n, k) {
                continue;
            }
            let case = format!("path({n}),k={k}");
            if let Some(c) = count(&mut r, &case, &path, k) {
                r.check(case, path_components(n, k), c);
            }
        }
    }
    for n in 3..=cfg.nmax.max(3) {
        let cycle: Graph = Family::Cycle(n).build().expect("valid");
        for k in 1..=cfg.kmax {
            if !cfg.fits(n, k) {
                continue;
            }
            let case = format!("cycle({n}),k={k}");
            if let Some(c) = count(&mut r, &case, &cycle, k) {
                r.check(case, cycle_components(n, k), c);
            }
        }
    }
    let bmax = cfg.nmax.div_ceil(2).max(1);
    for a in 1..=bmax {
        for b in a..=bmax {
            let g: Graph = Family::CompleteBipartite(a, b).build().expect("valid");
            for k in 1..=cfg.kmax {
                if !cfg.fits(a + b, k) {
                    continue;
                }
                let case = format!("complete_bipartite({a},{b}),k={k}");
                let Some(p) = r.guard(&case, power_of(&g, k, cfg)) else {
                    continue;
                };
                let Some(expected) = r.guard(&case, bipartite_decomposition(a, b, k)) else {
                    continue;
                };
                let fmt = |d: &[crate::analysis::ComponentDescriptor]| format!("{d:?}");
                r.check(case, fmt(&expected), fmt(&component_descriptors(&p)));
            }
        }
    }
    for i in 0..100 {
        let n = rng.gen_range(2..=cfg.nmax.max(2));
        let g = random_connected_graph(&mut rng, n, 0.3);
        let expected = if is_bipartite(&g) { 2 } else { 1 };
        let case = format!("connected#{i}(n={n}),k=2");
        if let Some(c) = count(&mut r, &case, &g, 2) {
            r.check(case, expected, c);
        }
        for k in 1..=cfg.kmax {
            if !cfg.fits(n, k) {
                continue;
            }
            let case = format!("connected#{i}(n={n}),k={k},bound");
            if let Some(c) = count(&mut r, &case, &g, k) {
                r.ensure(
                    &case,
                    c as u64 <= component_bound(k),
                    &format!("<={}", component_bound(k)),
                    c,
                );
                if !is_bipartite(&g) {
                    r.check(format!("connected#{i}(n={n}),k={k},non_bipartite"), 1, c);
                }
            }
        }
    }
    for n in (2..=cfg.nmax.max(2)).step_by(2) {
        let g = random_matching(&mut rng, n);
        for k in 1..=cfg.kmax {
            if !cfg.fits(n, k) {
                continue;
            }
            let case = format!("matching({n}),k={k}");
            if let Some(p) = r.guard(&case, power_of(&g, k, cfg)) {
                let degrees: Vec<usize> = (0..p.n()).map(|v| degree(&p, v)).collect();
                r.ensure(
                    case,
                    degrees.iter().all(|&d| d == 1),
                    "1-regular",
                    format!("{degrees:?}"),
                );
            }
        }
    }
    r
}

/// Checks the second-power degree, loop and edge formulas against the
/// computed power.
pub fn check_second_power(
    r: &mut Vec<(String, u64, u64)>,
    g: &Graph,
    loopless: bool,
) -> Result<()> {
    let n = g.n();
    let p = sym_power_graph(g, 2, &PowerOptions::default())?;
    r.push(("loops2".into(), loops2(g), count_loops(&p) as u64));
    if loopless {
        for a in 0..n {
            for b in a..n {
                let got = degree(&p, tuple_rank(vec![a + 1, b + 1], n)) as u64;
                r.push((format!("deg2({},{})", a + 1, b + 1), deg2(g, a, b)?, got));
            }
        }
        r.push(("edges2".into(), edges2(g)?, edge_count(&p) as u64));
    }
    Ok(())
}

fn degrees_suite(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new(Suite::Degrees);
    let mut rng = cfg.rng(Suite::Degrees);
    for n in 2..=cfg.nmax.max(2) {
        let path: Graph = Family::Path(n).build().expect("valid");
        for k in 1..=cfg.kmax {
            if !cfg.fits(n, k) {
                continue;
            }
            let case = format!("path({n}),k={k},loops");
            let Some(p) = r.guard(&case, power_of(&path, k, cfg)) else {
                continue;
            };
            if let Some(expected) = r.guard(&case, path_loops(n, k)) {
                r.check(case, expected, count_loops(&p) as u64);
            }
        }
    }
    let p3: Graph = Family::Path(3).build().expect("valid");
    if let Some(p) = r.guard("path(3),k=4", power_of(&p3, 4, cfg)) {
        r.check("path(3),k=4,loops", 3, count_loops(&p));
        r.check("path(3),k=4,components", 3, components(&p).count);
    }

    let mut samples: Vec<(String, Graph, bool)> = Vec::new();
    for i in 0..100 {
        let n = rng.gen_range(1..=cfg.nmax.max(1));
        samples.push((
            format!("loopless#{i}(n={n})"),
            random_simple_graph(&mut rng, n, 0.5),
            true,
        ));
    }
    for i in 0..50 {
        let n = rng.gen_range(1..=cfg.nmax.max(1));
        samples.push((
            format!("looped#{i}(n={n})"),
            random_graph(&mut rng, n, 0.4, 0.5),
            false,
        ));
    }
    let mut two_loops = Graph::new(2).expect("n >= 1");
    two_loops.add_unit_edge(0, 0).expect("in range");
    two_loops.add_unit_edge(1, 1).expect("in range");
    samples.push(("two_nonadjacent_loops".into(), two_loops, false));

    for (name, g, loopless) in &samples {
        let mut results = Vec::new();
        if r.guard(name, check_second_power(&mut results, g, *loopless))
            .is_some()
        {
            for (what, expected, got) in results {
                r.check(format!("{name},{what}"), expected, got);
            }
        }
        for k in 1..=cfg.kmax {
            if !cfg.fits(g.n(), k) {
                continue;
            }
            let case = format!("{name},k={k}");
            let Some(p) = r.guard(&case, power_of(g, k, cfg)) else {
                continue;
            };
            let n = g.n();
            for v in 0..n {
                let got = degree(&p, tuple_rank(vec![v + 1; k], n)) as u64;
                if let Some(expected) = r.guard(&case, diag_degree(g, v, k)) {
                    r.check(format!("{case},diag_degree({})", v + 1), expected, got);
                }
            }
            let Some(basis) = r.guard(&case, enumerate_multisets(n, k, Order::Paper)) else {
                continue;
            };
            let within = basis.iter().enumerate().all(|(x, t)| {
                neighbor_bound(g, t).is_ok_and(|bound| degree(&p, x) as u64 <= bound)
            });
            r.ensure(
                format!("{case},neighbor_bound"),
                within,
                "all_within",
                "exceeded",
            );
            if *loopless && g.pair_count() > 0 {
                if let Some(bounds) = r.guard(&case, edge_bounds(g, k)) {
                    let e = edge_count(&p) as u64;
                    r.ensure(
                        format!("{case},edge_bounds"),
                        bounds.contains(e),
                        &format!("[{},{}]", bounds.lower(), bounds.upper),
                        e,
                    );
                }
            }
        }
    }
    r
}

/// BFS oracle value against the printed closed-form readings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WienerRow {
    pub family: &'static str,
    pub n: usize,
    pub k: usize,
    /// `None` when the power is disconnected.
    pub bfs: Option<u64>,
    pub components: usize,
    pub readings: Vec<Reading>,
}

impl WienerRow {
    pub fn matches(&self) -> Vec<&'static str> {
        match self.bfs {
            Some(w) => self
                .readings
                .iter()
                .filter(|r| r.value == num_rational::Ratio::from_integer(w as i128))
                .map(|r| r.name)
                .collect(),
            None => Vec::new(),
        }
    }
}

impl fmt::Display for WienerRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WIENER {} n={} k={} bfs=", self.family, self.n, self.k)?;
        match self.bfs {
            Some(w) => write!(f, "{w}")?,
            None => write!(f, "disconnected({})", self.components)?,
        }
        for r in &self.readings {
            write!(f, " {}={}", r.name, r.value)?;
        }
        let m = self.matches();
        write!(
            f,
            " match={}",
            if m.is_empty() {
                "none".to_string()
            } else {
                m.join(",")
            }
        )
    }
}

fn wiener_row(
    family: &'static str,
    g: &Graph,
    n: usize,
    k: usize,
    readings: Vec<Reading>,
    cfg: &VerifyConfig,
) -> Result<WienerRow> {
    let p = power_of(g, k, cfg)?;
    let bfs = match wiener_index(&p) {
        Ok(w) => Some(w),
        Err(Error::Disconnected { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(WienerRow {
        family,
        n,
        k,
        bfs,
        components: components(&p).count,
        readings,
    })
}

/// `K_n^(⊙k)` for `2 <= n <= nmax`, `k <= kmax`, then `C_n^(⊙2)` for odd
/// `3 <= n <= nmax`.
pub fn wiener_table(nmax: usize, kmax: usize, cfg: &VerifyConfig) -> Result<Vec<WienerRow>> {
    let mut rows = Vec::new();
    for n in 2..=nmax {
        let g: Graph = Family::Complete(n).build()?;
        for k in 1..=kmax {
            if cfg.fits(n, k) {
                rows.push(wiener_row("K", &g, n, k, wiener_k(n, k)?, cfg)?);
            }
        }
    }
    for n in (3..=nmax).step_by(2) {
        let g: Graph = Family::Cycle(n).build()?;
        if cfg.fits(n, 2) {
            rows.push(wiener_row("C2", &g, n, 2, wiener_c2(n)?, cfg)?);
        }
    }
    Ok(rows)
}

fn wiener_suite(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new(Suite::Wiener);
    for n in 1..=cfg.nmax.min(4) {
        let j: Graph = Family::CompleteWithLoops(n).build().expect("valid");
        for k in 1..=cfg.kmax {
            if !cfg.fits(n, k) {
                continue;
            }
            let case = format!("complete_loops({n}),k={k}");
            let Some(p) = r.guard(&case, power_of(&j, k, cfg)) else {
                continue;
            };
            let Some(got) = r.guard(&case, wiener_index(&p)) else {
                continue;
            };
            if let Some(expected) = r.guard(&case, wiener_j(n, k)) {
                r.check(case, expected, got);
            }
        }
    }
    if let Some(rows) = r.guard("table", wiener_table(cfg.nmax, cfg.kmax, cfg)) {
        r.cases += 1;
        r.notes.extend(rows.iter().map(ToString::to_string));
    }
    r
}

/// `Gamma^(⊙k)` is the permutation matrix of the induced rank permutation.
pub fn check_permutation_power(sigma: &Permutation, k: usize, opts: &PowerOptions) -> Result<bool> {
    let gamma: Matrix<BigRational> = sigma.matrix();
    let p = sym_power_of_matrix(&gamma, k, opts)?;
    let induced = sym_power_permutation(sigma, k, opts.order)?;
    let expected = induced.matrix::<BigRational>();
    Ok((0..p.dim()).all(|i| {
        (0..p.dim()).all(|j| {
            p.exact_entry(i, j)
                == crate::graph::ExactWeight::from_rational(expected[(i, j)].clone())
        })
    }))
}

/// `(Gamma A Gamma^T)^(⊙k) = Gamma^(⊙k) A^(⊙k) (Gamma^(⊙k))^T`, checked on
/// cores and normalizers, with the left side built from the relabelled graph.
pub fn check_equivariance(
    g: &ExactGraph,
    sigma: &Permutation,
    k: usize,
    opts: &PowerOptions,
) -> Result<bool> {
    let gamma: Matrix<BigRational> = sigma.matrix();
    let a = g.adjacency_matrix();
    let b = gamma.mul(&a).mul(&gamma.transpose());
    let relabelled = relabel(g, &sigma.inverse())?.adjacency_matrix();
    if b != relabelled {
        return Ok(false);
    }
    let pa = sym_power_of_matrix(&a, k, opts)?;
    let pb = sym_power_of_matrix(&b, k, opts)?;
    let big: Matrix<BigRational> = sym_power_permutation(sigma, k, opts.order)?.matrix();
    let conjugated = big.mul(pa.core()).mul(&big.transpose());
    let induced = sym_power_permutation(sigma, k, opts.order)?;
    let norms_ok = (0..pb.dim()).all(|x| pb.normalizers()[x] == pa.normalizers()[induced.apply(x)]);
    Ok(norms_ok && pb.core() == &conjugated)
}

fn permutation_suite(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new(Suite::Permutation);
    let mut rng = cfg.rng(Suite::Permutation);
    let opts = cfg.opts(Method::Permanent);
    for i in 0..20 {
        let n = rng.gen_range(1..=cfg.nmax.max(1));
        let k = rng.gen_range(1..=cfg.kmax.max(1));
        let sigma = Permutation::random(n, &mut rng);
        let case = format!("perm#{i}(n={n}),k={k}");
        if cfg.fits(n, k) {
            if let Some(ok) = r.guard(&case, check_permutation_power(&sigma, k, &opts)) {
                r.check(case, true, ok);
            }
        }
    }
    for i in 0..50 {
        let n = rng.gen_range(1..=cfg.nmax.max(1));
        let k = rng.gen_range(1..=cfg.kmax.max(1));
        let g = random_rational_graph(&mut rng, n);
        let sigma = Permutation::random(n, &mut rng);
        let case = format!("equivariance#{i}(n={n}),k={k}");
        if cfg.fits(n, k) {
            if let Some(ok) = r.guard(&case, check_equivariance(&g, &sigma, k, &opts)) {
                r.check(case, true, ok);
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            nmax: 4,
            kmax: 3,
            seed: 11,
            max_dim: DEFAULT_MAX_DIM,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::INDIVIDUAL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn failure_line_has_five_fields() {
        let f = Failure {
            suite: "degrees",
            case: "a b".into(),
            expected: "1".into(),
            got: "".into(),
        };
        assert_eq!(f.to_string(), "FAIL degrees a_b 1 -");
    }

    #[test]
    fn every_suite_passes_small() {
        for report in run(Suite::All, &small()) {
            assert!(report.cases > 0, "{} ran no cases", report.suite);
            assert!(report.passed(), "{}: {:?}", report.suite, report.failures);
        }
    }

    #[test]
    fn deterministic_reports() {
        let cfg = small();
        assert_eq!(run(Suite::Wiener, &cfg), run(Suite::Wiener, &cfg));
    }

    #[test]
    fn random_generators_respect_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_connected_graph(&mut rng, 6, 0.2);
        assert_eq!(components(&g).count, 1);
        assert_eq!(count_loops(&g), 0);
        let m = random_matching(&mut rng, 6);
        assert!((0..6).all(|v| degree(&m, v) == 1));
    }
}
