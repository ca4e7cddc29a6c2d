use clap::{Args, Parser, Subcommand, ValueEnum};
use pairflip::exact::DEFAULT_SEED;
use pairflip::Rational;

fn rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: pairflip::Error| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "pairflip",
    version,
    about = "Exact wall-crossing, log-flip and catalecticant computations for rank-2 stable pairs",
    allow_negative_numbers = true
)]
pub struct Cli {
    /// Emit a single JSON document instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every sampled computation.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wall-crossing tower of X_k spaces, walls and the final contraction.
    Tower(Curve),
    /// Stability of a pair with invariants (d, a, b) at sigma.
    Classify(PairArgs),
    /// sigma-slopes of a pair and of its candidate destabilizing sub-pairs.
    Slope(PairArgs),
    /// Log-flip certificate for the wall X_{k-1} --> X_k.
    Flip(FlipArgs),
    /// Log canonical threshold of F on X_{k-1}.
    Lct(WallArgs),
    /// Discrepancy table of K + lambda F over the secant exceptional divisors.
    Disc(DiscArgs),
    /// Catalecticant (Hankel) matrix of a point of P^{d-2}.
    Hankel(HankelArgs),
    /// Splitting type of the extension bundle at a point.
    Split(SplitArgs),
    /// Vanishing order of a maximal minor at a point, by line probes.
    Multiplicity(MultiplicityArgs),
}

#[derive(Debug, Args)]
pub struct Curve {
    #[arg(long, short = 'g')]
    pub genus: i64,
    #[arg(long, short = 'd')]
    pub degree: i64,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, short = 'd')]
    pub degree: i64,
    /// Degree a of the divisor of zeros of the section.
    #[arg(long)]
    pub zeros: i64,
    /// Maximal degree b of a line subbundle.
    #[arg(long)]
    pub maxsub: i64,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub sigma: Rational,
}

#[derive(Debug, Args)]
pub struct WallArgs {
    #[command(flatten)]
    pub curve: Curve,
    /// Wall index k, the wall sigma = d - 2k.
    #[arg(long, short = 'k')]
    pub wall: i64,
}

#[derive(Debug, Args)]
pub struct FlipArgs {
    #[command(flatten)]
    pub wall: WallArgs,
    /// Scaling of F; defaults to the log canonical threshold.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct DiscArgs {
    #[command(flatten)]
    pub curve: Curve,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub lambda: Rational,
    /// Restrict to the rows relevant for the wall k; all rows otherwise.
    #[arg(long, short = 'k')]
    pub wall: Option<i64>,
}

#[derive(Debug, Args)]
#[group(skip)]
pub struct PointArgs {
    /// Curve parameters t_1, ..., t_i of a secant witness.
    #[arg(
        long,
        value_delimiter = ',',
        value_parser = rational,
        allow_hyphen_values = true,
        required_unless_present_any = ["witness", "point"],
        conflicts_with_all = ["witness", "point"]
    )]
    pub secant: Option<Vec<Rational>>,
    /// Coefficients of the witness; all 1 when omitted.
    #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true, requires = "secant")]
    pub coeffs: Option<Vec<Rational>>,
    /// Secant witness as JSON, e.g. {"t": ["0","1"], "coeffs": ["1","-1"]}.
    #[arg(long, conflicts_with_all = ["point", "coeffs"])]
    pub witness: Option<String>,
    /// Explicit coordinates z_1, ..., z_{d-1}.
    #[arg(long, value_delimiter = ',', value_parser = rational, allow_hyphen_values = true, conflicts_with = "coeffs")]
    pub point: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HankelAction {
    Rank,
    Matrix,
    Det,
}

#[derive(Debug, Args)]
pub struct HankelArgs {
    pub action: HankelAction,
    #[arg(long, short = 'd')]
    pub degree: i64,
    /// Number of rows k.
    #[arg(long, short = 'k')]
    pub rows: i64,
    /// 1-based column multi-index selecting a k x k minor for `det`.
    #[arg(long, value_delimiter = ',')]
    pub cols: Option<Vec<usize>>,
    #[command(flatten)]
    pub point: PointArgs,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long, short = 'd')]
    pub degree: i64,
    #[command(flatten)]
    pub point: PointArgs,
}

#[derive(Debug, Args)]
pub struct MultiplicityArgs {
    #[arg(long, short = 'd')]
    pub degree: i64,
    #[arg(long, short = 'k')]
    pub rows: i64,
    /// 1-based column multi-index; every minor when omitted.
    #[arg(long, value_delimiter = ',')]
    pub cols: Option<Vec<usize>>,
    #[arg(long, default_value_t = 4)]
    pub probes: usize,
    #[command(flatten)]
    pub point: PointArgs,
}
