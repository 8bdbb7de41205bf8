use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "ffourier",
    version,
    about = "Local fractional Fourier transforms, series and identity checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Fractal order in (0, 1]; defaults to the signal spec's value, then 1.
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    /// Kernel convention: case1, case2 or case3 (default case3).
    #[arg(long, global = true)]
    pub convention: Option<String>,
    /// Truncation X of the signal domain [−X, X].
    #[arg(long, global = true, default_value_t = 40.0)]
    pub truncation: f64,
    /// Minimum quadrature nodes per half-line.
    #[arg(long, global = true, default_value_t = 4096)]
    pub nodes: usize,
    /// Frequency range: `W` for [−W, W], or `LO,HI`.
    #[arg(long, global = true, default_value = "8", allow_hyphen_values = true)]
    pub omega_range: String,
    #[arg(long, global = true, default_value_t = 1025)]
    pub omega_count: usize,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// SVG plot file.
    #[arg(long, global = true)]
    pub plot: Option<PathBuf>,
    /// Seed for generated test families.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Tolerance for numeric identity checks.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Forward transform of a signal spec.
    Transform {
        /// Signal spec (TOML) or samples (CSV).
        signal: PathBuf,
    },
    /// Inverse transform of a spectrum CSV.
    Inverse {
        spectrum: PathBuf,
        /// Output x-range `LO,HI`.
        #[arg(long, default_value = "0.1,5", allow_hyphen_values = true)]
        x_range: String,
        #[arg(long, default_value_t = 99)]
        x_count: usize,
    },
    /// Causal convolution of two signals on [0, x_max].
    Convolve {
        f1: PathBuf,
        f2: PathBuf,
        #[arg(long, default_value_t = 8.0)]
        x_max: f64,
        #[arg(long, default_value_t = 2048)]
        x_count: usize,
    },
    /// Fractal Fourier series coefficients on [−l, l].
    Series {
        signal: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        half_period: f64,
        /// Highest |n|.
        #[arg(long, default_value_t = 16)]
        terms: usize,
        /// Also write the partial sum on [−l, l] to this CSV.
        #[arg(long)]
        sums: Option<PathBuf>,
        #[arg(long, default_value_t = 513)]
        x_count: usize,
    },
    /// Run identity verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Size of the generated formal family.
        #[arg(long, default_value_t = 24)]
        count: usize,
        /// Expressions in the fundamental-theorem round trip.
        #[arg(long, default_value_t = 1000)]
        round_trip: usize,
    },
    /// Diagnostic tables.
    Table {
        #[arg(value_enum)]
        what: TableKind,
        /// Gauss rule size (moments, rule) or largest cell count exponent.
        #[arg(long, default_value_t = 16)]
        rule_size: usize,
        /// Interval `A,B` for moments and rule dumps.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        interval: String,
        #[arg(long, value_enum, default_value_t = RuleMode::Matched)]
        mode: RuleMode,
        /// ml-values: real arguments in [−z_max, z_max].
        #[arg(long, default_value_t = 3.0)]
        z_max: f64,
        #[arg(long, default_value_t = 61)]
        count: usize,
    },
    /// Evaluate E_α at complex points given as `RE` or `RE,IM`.
    MlEval {
        #[arg(required = true, allow_hyphen_values = true)]
        z: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Formal,
    Numeric,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Moments,
    RiemannDivergence,
    MlValues,
    Rule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleMode {
    Literal,
    Matched,
}
