use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "zext", version, about = "Riemann-Siegel Z off the critical line: evaluation, reference comparison, bounds and zero curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args, Serialize)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,

    /// Worker threads for grid and scan workloads.
    #[arg(long, global = true, env = "ZEXT_PARALLELISM", default_value_t = 1)]
    #[serde(skip)]
    pub parallelism: usize,

    /// Use theta_1 + 1/(48t) + 7/(5760t^3) as the main-sum phase.
    #[arg(long, global = true)]
    pub theta_corrected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KindArg {
    Re,
    Im,
    Both,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Evaluate Z(t, eps) at one point.
    Eval(EvalArgs),
    /// Evaluate Z on a (t, eps) grid.
    Grid(GridArgs),
    /// Critical-line zeros of Z(t).
    Zeros(ZerosArgs),
    /// Re = 0 / Im = 0 curves of e^{i pi eps/4} Z(t, eps).
    Curves(CurvesArgs),
    /// Error-bound ratio curves.
    Bounds(BoundsArgs),
    /// Compare the formula with the independent reference.
    Compare(CompareArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub eps: f64,
    /// Remainder order.
    #[arg(long, default_value_t = 1)]
    pub m: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct GridArgs {
    #[arg(long, num_args = 2, value_names = ["A", "B"], required = true, allow_negative_numbers = true)]
    pub t_range: Vec<f64>,
    #[arg(long, default_value_t = 0.1)]
    pub dt: f64,
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, default_values_t = [-0.5, 0.5])]
    pub eps_range: Vec<f64>,
    #[arg(long, default_value_t = 11)]
    pub n_eps: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    /// Maximum number of evaluations.
    #[arg(long, default_value_t = 2_000_000)]
    pub max_points: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct ZerosArgs {
    #[arg(long, num_args = 2, value_names = ["A", "B"], required = true, allow_negative_numbers = true)]
    pub t_range: Vec<f64>,
    #[arg(long, default_value_t = 0.05)]
    pub dt: f64,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 2_000_000)]
    pub max_points: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct CurvesArgs {
    #[arg(long, num_args = 2, value_names = ["A", "B"], required = true, allow_negative_numbers = true)]
    pub t_range: Vec<f64>,
    #[arg(long, default_value_t = 0.05)]
    pub dt: f64,
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, default_values_t = [-0.6, 0.6])]
    pub eps_range: Vec<f64>,
    #[arg(long, default_value_t = 49)]
    pub n_eps: usize,
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    pub kind: KindArg,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 2_000_000)]
    pub max_points: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [20.0, 200.0])]
    pub t_range: Vec<f64>,
    /// Number of log-spaced t values.
    #[arg(long, default_value_t = 100)]
    pub n_t: usize,
    /// Contour radii, each in (1, 2].
    #[arg(long, num_args = 1.., default_values_t = [1.05, 2.0])]
    pub r: Vec<f64>,
    #[arg(long, num_args = 1.., allow_negative_numbers = true, default_values_t = [-0.5, 0.5])]
    pub eps: Vec<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct CompareArgs {
    /// Preset height; with the default eps list this gives the five-row comparisons
    /// at t = 7000 and t = 250000.
    #[arg(long, value_parser = ["7000", "250000"], conflicts_with = "t")]
    pub preset: Option<String>,
    #[arg(long, required_unless_present = "preset", allow_negative_numbers = true)]
    pub t: Option<f64>,
    #[arg(long, num_args = 1.., allow_negative_numbers = true, default_values_t = [0.1, 0.2, 0.3, 0.4, 0.5])]
    pub eps: Vec<f64>,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    /// Largest acceptable |Z - Z_ref|.
    #[arg(long, default_value_t = 1e-4)]
    pub tolerance: f64,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct OracleArgs {
    /// Euler-Maclaurin direct-sum length (default: max(20, ceil t)).
    #[arg(long)]
    pub em_terms: Option<usize>,
    /// Bernoulli correction terms, 2..=10.
    #[arg(long, default_value_t = 10)]
    pub em_order: usize,
    /// Tail truncation threshold.
    #[arg(long, default_value_t = 1e-10)]
    pub oracle_tol: f64,
}
