use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::output::Format;

/// Fractional-shift leakage, DPSS bounds and concentration.
#[derive(Debug, Parser)]
#[command(name = "halfshift", version, about, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// DPSS vectors and eigenvalues for a length and half-bandwidth.
    Dpss(DpssArgs),
    /// Samples of a shifted sequence over a window, with its energies.
    Shift(ShiftArgs),
    /// Exact tail energy outside a window, optionally checked by brute force.
    Tail(TailArgs),
    /// DPSS upper bound on the half-sample tail energy.
    Bound(BoundArgs),
    /// Exact full-band half-sample tail from DPSS coefficients.
    Equality(EqualityArgs),
    /// Ranked basis concentrations, or the concentration of one sequence.
    Concentration(ConcentrationArgs),
    /// Even-subsampled orthonormal DPSS basis.
    Basis(BasisArgs),
    /// Seeded random unit-energy sequence.
    Random(RandomArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format [default: csv; verify: json]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file. Without it, output goes to $HALFSHIFT_OUT_DIR/<command>.<ext>
    /// if that variable is set, else to standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "random"])))]
pub struct SequenceArgs {
    /// Sequence file: CSV with columns n,re[,im] or JSON
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Use a seeded random unit-energy sequence with support [-N/2, N/2]
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
    /// Seed for --random
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Make --random real-valued
    #[arg(long)]
    pub real: bool,
}

#[derive(Debug, Args)]
pub struct DpssArgs {
    /// Sequence length M (odd, at least 3)
    #[arg(long, short = 'm')]
    pub length: usize,
    /// DPSS half-bandwidth W' in (0, 0.5)
    #[arg(long = "half-bandwidth", short = 'w')]
    pub half_bandwidth: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ShiftArgs {
    #[command(flatten)]
    pub sequence: SequenceArgs,
    /// Shift half-bandwidth W in (0, 0.5]
    #[arg(long = "half-bandwidth", short = 'w', default_value_t = 0.5)]
    pub half_bandwidth: f64,
    /// Shift in samples
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub tau: f64,
    /// Window [-L, M] [default: N/2 N/2+1]
    #[arg(long, num_args = 2, value_names = ["L", "M"])]
    pub window: Option<Vec<usize>>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TailArgs {
    #[command(flatten)]
    pub sequence: SequenceArgs,
    /// Shift half-bandwidth W in (0, 0.5]
    #[arg(long = "half-bandwidth", short = 'w', default_value_t = 0.5)]
    pub half_bandwidth: f64,
    /// Shift in samples
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub tau: f64,
    /// Kept window [-L, M] [default: N/2 N/2+1]
    #[arg(long, num_args = 2, value_names = ["L", "M"])]
    pub window: Option<Vec<usize>>,
    /// Also sum samples directly until this tolerance is met
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub sequence: SequenceArgs,
    /// Shift half-bandwidth W in (0, 0.5]
    #[arg(long = "half-bandwidth", short = 'w')]
    pub half_bandwidth: f64,
    /// Also evaluate the upsampled bound with its correction term on [-L, M]
    #[arg(long, num_args = 2, value_names = ["L", "M"])]
    pub window: Option<Vec<usize>>,
    /// Evaluate the correction as a sum of squared terms (comparison only)
    #[arg(long, requires = "window")]
    pub termwise: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EqualityArgs {
    #[command(flatten)]
    pub sequence: SequenceArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["n", "input", "random"])))]
pub struct ConcentrationArgs {
    /// Rank the basis for support parameter N
    #[arg(long)]
    pub n: Option<usize>,
    /// Sequence file: CSV with columns n,re[,im] or JSON
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Use a seeded random unit-energy sequence with support [-N/2, N/2]
    #[arg(long, value_name = "N")]
    pub random: Option<usize>,
    /// Seed for --random
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BasisArgs {
    /// Support parameter N (even)
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    /// Support parameter N (even)
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Real-valued samples
    #[arg(long)]
    pub real: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON run configuration; flags override its fields
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Support parameters, comma-separated
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<usize>>,
    /// Shift half-bandwidths, comma-separated
    #[arg(long = "half-bandwidth", short = 'w', value_delimiter = ',')]
    pub half_bandwidth: Option<Vec<f64>>,
    /// Replace every check tolerance
    #[arg(long)]
    pub tol: Option<f64>,
    /// Run only these suites (repeatable)
    #[arg(long, value_name = "NAME")]
    pub only: Vec<String>,
    /// Random sequences per case
    #[arg(long)]
    pub cases: Option<usize>,
    /// Random sequences per N in the optimality search
    #[arg(long)]
    pub search_samples: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}
