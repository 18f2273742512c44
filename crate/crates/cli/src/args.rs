use clap::{Args, Parser, Subcommand, ValueEnum};
use kpell_core::sequences::SeqKind;

#[derive(Debug, Parser)]
#[command(
    name = "kpell",
    version,
    about = "Exact k-Pell sequences, identities and tridiagonal matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print terms 0..=N, numerically or as polynomials in k.
    Table(TableArgs),
    /// Evaluate a single term by one of several methods.
    Eval(EvalArgs),
    /// Sweep the identity suite over a parameter grid.
    Verify(VerifyArgs),
    /// Show a generating matrix, its inverse, cofactor matrix or continuants.
    Matrix(MatrixArgs),
    /// Compare the eigenvalue product of P_n(k) with P_{k,n+1}.
    Eigen(EigenArgs),
    /// Time term evaluation and print a digest of the result.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// `P`, `Q`, `q` or `G` (case-sensitive), or a long name.
pub fn parse_kind(s: &str) -> Result<SeqKind, String> {
    match s {
        "P" | "pell" => Ok(SeqKind::Pell),
        "Q" | "pell-lucas" => Ok(SeqKind::PellLucas),
        "q" | "modified-pell" => Ok(SeqKind::ModifiedPell),
        "G" | "gen-pell" => Ok(SeqKind::GenPell),
        _ => Err(format!(
            "unknown kind `{s}`; expected P, Q, q, G (or pell, pell-lucas, modified-pell, gen-pell)"
        )),
    }
}

#[derive(Clone, Copy, Debug, Args)]
pub struct SeqOpts {
    #[arg(long, value_parser = parse_kind)]
    pub kind: SeqKind,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    /// Initial value of the generalized sequence; ignored by other kinds.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub a: u64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: SeqKind,
    #[arg(long)]
    pub n_max: u64,
    /// Print polynomials in k (P and G only; G entries carry the factor a).
    #[arg(long, conflicts_with_all = ["k", "a"])]
    pub symbolic: bool,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub a: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalMethod {
    Recurrence,
    Binet,
    Binomial,
    DoubleSum,
    Fast,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub seq: SeqOpts,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = EvalMethod::Recurrence)]
    pub method: EvalMethod,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated identity names, or `all`.
    #[arg(long, default_value = "all")]
    pub identities: String,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub k_max: u64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub a_max: u64,
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Show {
    Matrix,
    Inverse,
    Cofactor,
    ThetaPhi,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub seq: SeqOpts,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Show::Matrix)]
    pub show: Show,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EigenArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Use the factor i√k instead of 2i√k.
    #[arg(long)]
    pub paper_verbatim: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchMethod {
    Recurrence,
    Fast,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = BenchMethod::Fast)]
    pub method: BenchMethod,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub repeat: u32,
}
