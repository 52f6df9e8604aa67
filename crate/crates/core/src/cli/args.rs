use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::decode::CaRule;
use crate::sim::FitModel;

#[derive(Debug, Parser)]
#[command(name = "homcode", version, about = "Homological CSS codes: build, analyse, simulate")]
pub struct Cli {
    /// Worker threads for Monte Carlo (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write it as JSON.
    Build(BuildArgs),
    /// Print n, k and optionally distances of a stored code.
    Params {
        file: PathBuf,
        #[arg(long)]
        distance: bool,
        /// Also count minimum-weight logicals (implies --distance).
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact distances of a stored 2D code.
    Distance {
        file: PathBuf,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Monte Carlo campaign over a list of physical error rates.
    Simulate(SimulateArgs),
    /// Finite-size scaling fit of a threshold.
    Fit {
        #[arg(long = "input")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModelArg::Logical)]
        model: ModelArg,
        /// Column of a campaign CSV used as the size L.
        #[arg(long, default_value = "d")]
        size: String,
    },
    /// Threshold lower bounds for {r,s} matching decoders.
    Bounds {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        c: f64,
        /// Also report rate and distance bound for n edges.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Low-error-rate approximation of the failure probability.
    Approx {
        #[arg(long)]
        nd: f64,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long = "T", default_value_t = 1)]
        rounds: u32,
        /// Solve for the largest p whose approximate failure rate is at most this.
        #[arg(long)]
        target: Option<f64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Toric2d,
    Rotated,
    Toric4d,
    Tesseract,
    Hyperbolic,
    Semihyperbolic,
    ConstantDistance,
    Dual,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_possible_value().expect("no skipped variants");
        f.write_str(v.get_name())
    }
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long = "L")]
    pub side: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Extra relators, e.g. "srrsRSSR" or "(bac)^6, abcb".
    #[arg(long)]
    pub relators: Option<String>,
    /// Pick a catalogued quotient by edge count.
    #[arg(long)]
    pub n: Option<usize>,
    /// Subdivision factor for semihyperbolic.
    #[arg(long)]
    pub l: Option<usize>,
    /// Input artifact for semihyperbolic and dual.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub qubit_level: Option<usize>,
    #[arg(long)]
    pub max_cosets: Option<usize>,
    #[arg(long)]
    pub no_logicals: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[value(name = "2d-perfect")]
    #[serde(rename = "2d-perfect")]
    Perfect2d,
    #[value(name = "2d-noisy")]
    #[serde(rename = "2d-noisy")]
    Noisy2d,
    #[value(name = "4d-memory")]
    #[serde(rename = "4d-memory")]
    Memory4d,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleArg {
    Toom,
    Dklp,
}

impl From<RuleArg> for CaRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Toom => CaRule::Toom,
            RuleArg::Dklp => CaRule::Dklp,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Logical,
    Memory,
}

impl From<ModelArg> for FitModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Logical => FitModel::Logical,
            ModelArg::Memory => FitModel::Memory,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// Code artifacts, one or more.
    #[arg(long, num_args = 1.., required = true)]
    pub code: Vec<PathBuf>,
    /// Physical error rates, comma separated.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub p: Vec<f64>,
    /// Measurement error rate (default: equal to p).
    #[arg(long)]
    pub q: Option<f64>,
    /// 4D memory with noisy syndrome measurements.
    #[arg(long)]
    pub noisy: bool,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Noisy rounds for 2d-noisy (default: the code distance).
    #[arg(long = "rounds", alias = "T")]
    pub rounds: Option<u32>,
    #[arg(long, value_enum)]
    pub rule: Option<RuleArg>,
    #[arg(long, default_value_t = 1)]
    pub sweeps: usize,
    #[arg(long, default_value_t = 100_000)]
    pub max_cycles: u64,
    /// Sweeps without progress before verification gives up (default 10L).
    #[arg(long)]
    pub v_max: Option<usize>,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}
