use std::path::PathBuf;

use abc_spectra::SmallOrderVariant;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "abc-spectra",
    version,
    about = "Closed-form spectra of arrow-bordered circulant matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, multiplicities and optional eigenvectors of m_n(a, b, c).
    Spectrum(SpectrumArgs),
    /// CSV of every eigenvalue as a function of c.
    Eigenlines(EigenlinesArgs),
    /// CSV of transition points T_n(a) over a range of a.
    TransitionCurve(TransitionCurveArgs),
    /// Uppermost, lowermost and transition points with the extreme extrema.
    Extremes(ExtremesArgs),
    /// Randomized comparison against the dense eigensolver.
    Verify(VerifyArgs),
    /// Export the weighted wheel graph.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Tilde,
    Doubled,
}

impl From<Variant> for SmallOrderVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Tilde => SmallOrderVariant::Tilde,
            Variant::Doubled => SmallOrderVariant::Doubled,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct MatrixArgs {
    /// Order of the circulant block; the matrix has order n + 1.
    #[arg(long)]
    pub n: usize,
    /// Tire (cyclic) weight.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Spoke (border) weight.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Tire vertex weight.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub c: f64,
    /// Matrix family for n = 1 and n = 2.
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
}

#[derive(Debug, Clone, Args)]
pub struct OutArgs {
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Include the closed-form eigenvectors.
    #[arg(long)]
    pub eigenvectors: bool,
    /// Accept b = 0 and report the block-diagonal spectrum.
    #[arg(long)]
    pub allow_diagonal: bool,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EigenlinesArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
    pub c_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    pub c_max: f64,
    #[arg(long, default_value_t = 601)]
    pub steps: usize,
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TransitionCurveArgs {
    /// Comma-separated orders.
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,7,10,20")]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
    pub a_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    pub a_max: f64,
    #[arg(long, default_value_t = 601)]
    pub steps: usize,
    /// Add marked rows at these values of a (comma-separated).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub marker_a: Vec<f64>,
    /// Family used for n = 2.
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ExtremesArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, value_enum)]
    pub variant: Option<Variant>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Oracle tolerance, scaled by 1 + ||M||_inf.
    #[arg(long, env = "ABC_SPECTRA_TOL", default_value_t = abc_spectra::verification::DEFAULT_ORACLE_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutArgs,
}
