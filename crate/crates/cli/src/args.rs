use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "gapkit", version, about = "Gap amplification, gadget reductions and exact oracles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a Gabber-Galil or complete-graph expander (optionally powered).
    BuildExpander(BuildExpanderArgs),
    /// Raise a rotation graph to a power.
    Power(PowerArgs),
    /// Build the derandomized walk product of a graph over an expander.
    Product(ProductArgs),
    /// Run the full gap-amplification pipeline on a graph.
    Amplify(AmplifyArgs),
    /// Apply one of the instance reductions.
    Reduce(ReduceArgs),
    /// Solve an instance exactly.
    Solve(SolveArgs),
    /// Run a seeded property suite.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    Gg,
    Complete,
}

#[derive(Args, Debug, Clone)]
pub struct BuildExpanderArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Side length for the Gabber-Galil family (k^2 vertices).
    #[arg(long)]
    pub k: Option<usize>,
    /// Vertex count for the complete family.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub power: u32,
    /// Fail unless the spectral check confirms the claimed expansion.
    #[arg(long)]
    pub verify: bool,
    /// Where to write the rotation map JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct PowerArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ProductArgs {
    /// DIMACS graph.
    #[arg(long)]
    pub graph: PathBuf,
    /// Rotation map JSON on the same vertex count.
    #[arg(long)]
    pub expander: PathBuf,
    #[arg(long)]
    pub t: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the walk table JSON.
    #[arg(long)]
    pub walks: Option<PathBuf>,
    #[arg(long, default_value_t = gapkit::product::DEFAULT_PRODUCT_CAP)]
    pub cap: usize,
}

#[derive(Args, Debug, Clone)]
pub struct AmplifyArgs {
    /// DIMACS graph.
    #[arg(long)]
    pub input: PathBuf,
    /// Yes-case density (rational, e.g. 1 or 3/4).
    #[arg(long)]
    pub a: String,
    /// No-case density.
    #[arg(long)]
    pub b: String,
    /// Target ratio b_r/a_r, in (0, 1).
    #[arg(long)]
    pub ratio: String,
    #[arg(long, value_enum, default_value_t = FamilyArg::Complete)]
    pub family: FamilyArg,
    /// Confirm the applicable bound with the clique oracle.
    #[arg(long)]
    pub check: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub walks: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    #[value(name = "max3sat-to-is")]
    Max3satToIs,
    #[value(name = "is-to-ds")]
    IsToDs,
    #[value(name = "ds-to-setcover")]
    DsToSetcover,
    #[value(name = "is-to-cb")]
    IsToCb,
    #[value(name = "lin3-to-vc")]
    Lin3ToVc,
    #[value(name = "vc-to-minsat")]
    VcToMinsat,
}

#[derive(Args, Debug, Clone)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    pub name: Reduction,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Where to write the payload maps (JSON).
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
    /// Number of clause groups (max3sat-to-is).
    #[arg(long)]
    pub k: Option<usize>,
    /// Threshold parameter in (0, 1] (max3sat-to-is).
    #[arg(long)]
    pub lambda: Option<String>,
    /// JSON file `{"blocks": [[...], ...]}` with 0-indexed vertices (is-to-ds).
    #[arg(long)]
    pub partition: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Clique,
    IndependentSet,
    VertexCover,
    DominatingSet,
    InducedBipartite,
    MaxSat,
    MinSat,
    MaxLin,
    SetCover,
    SubexpIs,
}

#[derive(Args, Debug, Clone)]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub problem: Problem,
    #[arg(long)]
    pub input: PathBuf,
    /// Size cap (dominating-set) or subset size (subexp-is).
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Roundtrip,
    SpectralGg,
    Powering,
    #[value(name = "theorem3-sandwich")]
    WalkSandwich,
    Amplify,
    GroupingAlpha,
    #[value(name = "claim1")]
    GroupingBound,
    DsGadget,
    Setcover,
    Cb,
    Lin3Vc,
    Minsat,
    SubexpApprox,
    OraclesExhaustive,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Trial count (defaults per suite).
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest instance size drawn (defaults per suite).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Seconds before the run stops with a partial report.
    #[arg(long, default_value_t = 300)]
    pub timeout: u64,
}
