//! Command-line surface. [`run`] does all the work so it can be driven from
//! tests without spawning a process.

use std::io::Read;
use std::path::{Path, PathBuf};

use chromagraph_core::bcc::BrokenCircuitComplex;
use chromagraph_core::csf::deletion_contraction;
use chromagraph_core::graphpoly::{chromatic_poly, tree_poly_weighted};
use chromagraph_core::{BasisId, GraphFamily, Rational, TransitionCache, WeightedGraph};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::io::{self, FormatError};
use crate::verify::{run_suite, SuiteConfig, VerifyError};

/// Environment variable capping the transition-cache depth.
pub const MAX_DEGREE_VAR: &str = "CHROMAGRAPH_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "chromagraph", version, about = "Chromatic symmetric functions and tree polynomials of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand X_G in a basis; prints SymFun JSON.
    Csf {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "p")]
        basis: BasisArg,
        /// Tree family JSON, required with `--basis tree-family`.
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Chromatic or tree polynomial.
    Poly {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: PolyKind,
        /// Evaluate exactly at this integer instead of printing the polynomial.
        #[arg(long, allow_negative_numbers = true)]
        at: Option<i64>,
        /// Print the exponent-to-coefficient JSON map.
        #[arg(long)]
        json: bool,
    },
    /// Members of the broken circuit complex, as edge index lists.
    Bcc {
        #[arg(long)]
        graph: PathBuf,
        /// Only the inclusion-maximal members.
        #[arg(long, conflicts_with = "pairs")]
        maximal: bool,
        /// Cutset-forest pairs counted by the coefficient of x^K.
        #[arg(long, value_name = "K")]
        pairs: Option<usize>,
    },
    /// Run the exhaustive identity suite.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Include the weighted-graph checks.
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        json: bool,
    },
    /// Read SymFun JSON on stdin and print its B-polynomial.
    Collapse {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    P,
    M,
    Path,
    Star,
    Complete,
    Cycle,
    TreeFamily,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Chromatic,
    Tree,
}

/// Failure of a command, with its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Family(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Family(_) => 3,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Graph(core) => core.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<chromagraph_core::Error> for CliError {
    fn from(e: chromagraph_core::Error) -> Self {
        match e {
            chromagraph_core::Error::InvalidFamily { .. } | chromagraph_core::Error::Singular(_) => {
                CliError::Family(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// What a command printed and how the process should exit.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Transition-cache depth from the environment, or the default.
pub fn max_degree_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Input(format!("{MAX_DEGREE_VAR}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

pub fn run(cli: Cli, stdin: &mut dyn Read) -> Result<Outcome, CliError> {
    let max_degree = max_degree_from_env()?;
    match cli.command {
        Command::Csf { graph, basis, family } => csf(&io::read_graph(&graph)?, basis, family.as_deref(), max_degree),
        Command::Poly { graph, kind, at, json } => poly(&io::read_graph(&graph)?, kind, at, json),
        Command::Bcc { graph, maximal, pairs } => bcc(&io::read_graph(&graph)?, maximal, pairs),
        Command::Verify { max_n, weights, json } => {
            let config = SuiteConfig { max_n, weights, ..SuiteConfig::default() };
            verify(&config, json)
        }
        Command::Collapse { json } => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| CliError::Input(e.to_string()))?;
            let f = io::symfun_from_json(&text)?;
            Ok(Outcome::ok(show_poly(&f.collapse_by_length(), json)))
        }
    }
}

fn family_for(basis: BasisArg, file: Option<&Path>) -> Result<Option<GraphFamily>, CliError> {
    Ok(match basis {
        BasisArg::P | BasisArg::M => None,
        BasisArg::Path => Some(GraphFamily::path()),
        BasisArg::Star => Some(GraphFamily::star()),
        BasisArg::Complete => Some(GraphFamily::complete()),
        BasisArg::Cycle => Some(GraphFamily::cycle()),
        BasisArg::TreeFamily => {
            let path = file.ok_or_else(|| CliError::Input("--basis tree-family needs --family FILE".into()))?;
            Some(io::read_family(path)?)
        }
    })
}

pub fn csf(g: &WeightedGraph, basis: BasisArg, family: Option<&Path>, max_degree: usize) -> Result<Outcome, CliError> {
    let degree = g.total_weight();
    let x = deletion_contraction(g);
    let mut cache = TransitionCache::new();
    let target = match family_for(basis, family)? {
        None if basis == BasisArg::M => {
            if degree > max_degree {
                return Err(degree_error(degree, max_degree));
            }
            cache.register_monomial(degree)
        }
        None => BasisId::PowerSum,
        Some(fam) => {
            if basis == BasisArg::TreeFamily && !fam.is_tree_family(degree) {
                return Err(CliError::Family(format!(
                    "{} is not a family of trees with members 1..={degree}",
                    fam.name()
                )));
            }
            if degree > max_degree {
                return Err(degree_error(degree, max_degree));
            }
            cache.register(&fam, degree)?
        }
    };
    let out = cache.change_basis(&x, &target)?;
    Ok(Outcome::ok(io::symfun_to_value(&out).to_string() + "\n"))
}

fn degree_error(degree: usize, max_degree: usize) -> CliError {
    CliError::Input(format!("total weight {degree} exceeds {MAX_DEGREE_VAR}={max_degree}"))
}

fn show_poly(p: &chromagraph_core::UniPoly, json: bool) -> String {
    if json {
        io::poly_to_value(p).to_string() + "\n"
    } else {
        format!("{p}\n")
    }
}

pub fn poly(g: &WeightedGraph, kind: PolyKind, at: Option<i64>, json: bool) -> Result<Outcome, CliError> {
    let p = match kind {
        PolyKind::Chromatic => chromatic_poly(g.graph()),
        PolyKind::Tree => tree_poly_weighted(g),
    };
    Ok(Outcome::ok(match at {
        Some(x) => {
            let value = p.eval(&Rational::from_integer(x.into()));
            if json {
                Value::String(io::rational_to_string(&value)).to_string() + "\n"
            } else {
                format!("{value}\n")
            }
        }
        None => show_poly(&p, json),
    }))
}

pub fn bcc(g: &WeightedGraph, maximal: bool, pairs: Option<usize>) -> Result<Outcome, CliError> {
    let complex = BrokenCircuitComplex::new(g.graph());
    let value = if let Some(k) = pairs {
        let list: Vec<Value> = complex
            .cutset_forest_pairs(k)
            .into_iter()
            .map(|(cut, forest)| json!({ "cutset": io::edge_set_to_value(cut), "forest": io::edge_set_to_value(forest) }))
            .collect();
        Value::from(list)
    } else {
        let sets = if maximal { complex.maximal_members() } else { complex.members().to_vec() };
        Value::from(sets.into_iter().map(io::edge_set_to_value).collect::<Vec<_>>())
    };
    Ok(Outcome::ok(value.to_string() + "\n"))
}

/// Runs the suite; exit code 1 on any failure.
pub fn verify(config: &SuiteConfig, json: bool) -> Result<Outcome, CliError> {
    let report = run_suite(config)?;
    let stdout = if json {
        serde_json::to_string_pretty(&report.to_json(true)).expect("plain data serializes") + "\n"
    } else {
        report.to_text(true)
    };
    Ok(Outcome { stdout, code: if report.passed() { 0 } else { 1 } })
}

