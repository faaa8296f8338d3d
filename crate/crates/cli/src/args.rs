use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordcone::pathsolve::{SearchMode, DEFAULT_PATH_CAP};

/// Weighted ordinal ordering cones, cone dominance and efficient routes.
#[derive(Debug, Parser)]
#[command(name = "ordcone", version)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum number of paths a search or enumeration may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_PATH_CAP)]
    pub cap: usize,
    /// Reject degenerate weights instead of merging categories.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spanning rays, facets and special structure of a cone.
    Cone(ConeArgs),
    /// Decide whether one outcome vector dominates another.
    Dominates(DominatesArgs),
    /// Non-dominated subset of a point file.
    Filter(FilterArgs),
    /// Efficient s-t paths on a graph file.
    Route(RouteArgs),
    /// Route counts over a grid of weights, as CSV.
    Sweep(SweepArgs),
    /// Cross-check the fast paths against the brute-force oracles.
    Verify(VerifyArgs),
    /// Turn a route result into a GeoJSON FeatureCollection.
    #[command(name = "export-geojson")]
    ExportGeojson(ExportArgs),
}

/// Weights either broadcast (`--omega 1.5`) or per index (`--omega-vec 1.5,2,1`).
/// Missing values default to omega = 1, gamma = 0.
#[derive(Debug, Args, Clone, Default)]
pub struct WeightArgs {
    /// Number of categories (taken from the graph when one is given).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, conflicts_with = "omega_vec", allow_hyphen_values = true)]
    pub omega: Option<String>,
    #[arg(long, conflicts_with = "gamma_vec", allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega_vec: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_vec: Option<String>,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
}

#[derive(Debug, Args)]
pub struct DominatesArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
    /// Comma-separated entries, e.g. `1,0.5,2`.
    #[arg(long, allow_hyphen_values = true)]
    pub y1: String,
    #[arg(long, allow_hyphen_values = true)]
    pub y2: String,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
    /// JSON file holding an array of points, each an array of decimal strings.
    #[arg(long)]
    pub points: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    AllPaths,
    OnePerVector,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> SearchMode {
        match m {
            ModeArg::AllPaths => SearchMode::AllPaths,
            ModeArg::OnePerVector => SearchMode::OnePerVector,
        }
    }
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long = "from")]
    pub source: String,
    #[arg(long = "to")]
    pub target: String,
    #[arg(long, value_enum, default_value_t = ModeArg::AllPaths)]
    pub mode: ModeArg,
}

#[derive(Debug, Args)]
pub struct RouteArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub weights: WeightArgs,
    /// Also write the result document to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Scalar omega values, broadcast to every index.
    #[arg(long, requires = "gamma_grid")]
    pub omega_grid: Option<String>,
    /// Scalar gamma values, broadcast to every index.
    #[arg(long, requires = "omega_grid")]
    pub gamma_grid: Option<String>,
    /// Explicit grid point `OMEGA_VEC:GAMMA_VEC`, e.g. `1,2:0,0.1`; repeatable.
    #[arg(long = "point", conflicts_with_all = ["omega_grid", "gamma_grid"])]
    pub points: Vec<String>,
    /// Leave the runtime column empty so that output is reproducible byte for byte.
    #[arg(long)]
    pub no_runtime: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
    #[arg(long, requires_all = ["source", "target"])]
    pub graph: Option<PathBuf>,
    #[arg(long = "from")]
    pub source: Option<String>,
    #[arg(long = "to")]
    pub target: Option<String>,
    /// Random dominance pairs to test.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Perturb this facet row before checking (negative control).
    #[arg(long, hide = true)]
    pub corrupt_facet: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Result document written by `route --out` or `route --json`.
    #[arg(long)]
    pub result: PathBuf,
    #[arg(long)]
    pub graph: PathBuf,
    /// Add every graph edge as a background layer.
    #[arg(long)]
    pub edges: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
