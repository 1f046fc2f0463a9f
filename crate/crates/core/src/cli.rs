//! Command-line surface. Exit codes: 0 success, 1 verification failure,
//! 2 usage, parse or parameter error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::combinatorics::Order;
use crate::error::{Error, Result};
use crate::graph::{Family, WeightedGraph};
use crate::io::{
    parse_graph, parse_graph_f64, write_dot, write_graph, write_graph_exact, write_stats_json,
    StatsOptions,
};
use crate::spectra::eigenvalues_symmetric;
use crate::sympower::{sym_power, Method, PowerOptions, DEFAULT_MAX_DIM};
use crate::verify::{run, Suite, VerifyConfig};

/// Environment variable capping the power dimension `N`.
pub const MAX_N_ENV: &str = "SYMTENSOR_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "symtensor",
    version,
    about = "Symmetric tensor powers of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a family graph: path N, cycle N, complete N, complete_loops N,
    /// complete_bipartite N M, star M, scepter.
    Family {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit the k-th symmetric power of the input graph.
    Power {
        #[arg(short, value_parser = parse_power)]
        k: usize,
        #[arg(long, default_value_t = Method::Permanent)]
        method: Method,
        #[arg(long, default_value_t = Order::Paper)]
        order: Order,
        /// Write weights as exact `q*sqrt(r)` tokens; needs rational input.
        #[arg(long)]
        exact: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        input: Option<PathBuf>,
    },
    /// Print eigenvalues of the adjacency matrix, ascending, one per line.
    Spectrum {
        /// Values within this distance of zero print as 0.
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
        input: Option<PathBuf>,
    },
    /// Print graph statistics as JSON.
    Stats {
        #[arg(long)]
        wiener: bool,
        #[arg(long)]
        spectrum: bool,
        input: Option<PathBuf>,
    },
    /// Print the graph in DOT format.
    Dot { input: Option<PathBuf> },
    /// Run theorem suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_power(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("k must be at least 1".into()),
        Ok(k) => Ok(k),
        Err(e) => Err(e.to_string()),
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    let io_err = |e: io::Error| Error::InvalidParameter(format!("cannot read input: {e}"));
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(io_err),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    let io_err = |e: io::Error| Error::InvalidParameter(format!("cannot write output: {e}"));
    match output {
        Some(p) => fs::write(p, text).map_err(io_err),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(io_err),
    }
}

fn max_dim() -> Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::InvalidParameter(format!(
                "{MAX_N_ENV} must be a nonnegative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn power_text(text: &str, k: usize, opts: &PowerOptions, exact: bool) -> Result<String> {
    let g = parse_graph(text)?;
    let rational = g.edges().all(|(_, _, w)| w.as_rational().is_some());
    if rational {
        let q = g.map_weights(|w| w.as_rational().expect("checked rational").clone())?;
        let p = sym_power(&q, k, opts)?.to_exact_graph()?;
        Ok(if exact {
            write_graph_exact(&p)
        } else {
            write_graph(&p)
        })
    } else if exact {
        Err(Error::InvalidParameter(
            "--exact needs rational input weights".into(),
        ))
    } else {
        let f: WeightedGraph<f64> = g.to_f64();
        Ok(write_graph(&sym_power(&f, k, opts)?.to_graph()?))
    }
}

fn execute(command: Command) -> Result<ExitCode> {
    match command {
        Command::Family {
            name,
            params,
            output,
        } => {
            let g: WeightedGraph<f64> = Family::parse(&name, &params)?.build()?;
            emit(&write_graph(&g), output.as_ref())?;
        }
        Command::Power {
            k,
            method,
            order,
            exact,
            output,
            input,
        } => {
            let opts = PowerOptions::new(method, order).with_max_dim(max_dim()?);
            let text = power_text(&read_input(input.as_ref())?, k, &opts, exact)?;
            emit(&text, output.as_ref())?;
        }
        Command::Spectrum { tol, input } => {
            let g = parse_graph_f64(&read_input(input.as_ref())?)?;
            let spec = eigenvalues_symmetric(&g.adjacency_f64())?;
            let mut out = String::new();
            for &v in spec.values() {
                let v = if v.abs() <= tol { 0.0 } else { v };
                out.push_str(&format!("{v}\n"));
            }
            emit(&out, None)?;
        }
        Command::Stats {
            wiener,
            spectrum,
            input,
        } => {
            let g = parse_graph_f64(&read_input(input.as_ref())?)?;
            emit(
                &write_stats_json(&g, StatsOptions { wiener, spectrum })?,
                None,
            )?;
        }
        Command::Dot { input } => {
            let g = parse_graph_f64(&read_input(input.as_ref())?)?;
            emit(&write_dot(&g), None)?;
        }
        Command::Verify {
            suite,
            nmax,
            kmax,
            seed,
        } => {
            if nmax == 0 || kmax == 0 {
                return Err(Error::InvalidParameter(
                    "--nmax and --kmax must be positive".into(),
                ));
            }
            let cfg = VerifyConfig {
                nmax,
                kmax,
                seed,
                max_dim: max_dim()?,
            };
            let mut out = String::new();
            let mut ok = true;
            for report in run(suite, &cfg) {
                for note in &report.notes {
                    out.push_str(&format!("{note}\n"));
                }
                for f in &report.failures {
                    out.push_str(&format!("{f}\n"));
                }
                out.push_str(&format!(
                    "{} {} cases={} failures={}\n",
                    if report.passed() { "PASS" } else { "FAILED" },
                    report.suite,
                    report.cases,
                    report.failures.len()
                ));
                ok &= report.passed();
            }
            emit(&out, None)?;
            return Ok(ExitCode::from(if ok { 0 } else { 1 }));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Parses `argv` and runs the command.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
