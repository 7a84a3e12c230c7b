//! `algebrae`: projective geometry over involutive algebras, as data.
//!
//! Every subcommand prints JSON lines (or CSV) on stdout. Exit code 2 means the
//! arguments could not be parsed, 3 means the input was outside the domain of
//! the requested operation.

mod commands;
mod output;
mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] algebrae_core::Error),
    #[error("output failed: {0}")]
    Io(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Conv {
    Plus,
    Minus,
}

#[derive(Debug, Parser)]
#[command(name = "algebrae", version, about = "Projective geometry over involutive real algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for every sampling command.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for sampling commands (results do not depend on it).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Sign convention of the Hermitian metric.
    #[arg(long, global = true, value_enum)]
    pub conv: Option<Conv>,
    /// Tolerance for regularity and classification checks.
    #[arg(long, global = true, env = "ALGEBRAE_TOL")]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Scalar arithmetic in one algebra.
    #[command(subcommand)]
    Algebra(AlgebraOp),
    /// Tance between two projective points.
    Tance(TanceArgs),
    /// Sample a geodesic through a point.
    GeodesicTrace(TraceArgs),
    /// Sectional curvature of a named or given tangent plane.
    Curvature(CurvatureArgs),
    /// Signature of the real metric on a projective space.
    Signature(SignatureArgs),
    /// Projective lines as spaces of oriented geodesics.
    #[command(subcommand)]
    Convert(ConvertCmd),
    /// The K_t family inside the split-quaternions.
    Transition(TransitionArgs),
    /// The ℂ×ℂ projective line.
    #[command(subcommand)]
    Bidisc(BidiscCmd),
}

#[derive(Debug, Args)]
pub struct ScalarArgs {
    /// Algebra tag: R, C, D, Cs, H, Hs, CxC or Kt:<t>.
    #[arg(long)]
    pub alg: String,
    /// Coefficients of the first operand.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    /// Coefficients of the second operand.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum AlgebraOp {
    Mul(ScalarArgs),
    Conj(ScalarArgs),
    Inv(ScalarArgs),
    Unit(ScalarArgs),
    Norm(ScalarArgs),
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    #[arg(long)]
    pub alg: String,
    /// Signature of the diagonal form, e.g. `-++`; all `+` when omitted.
    #[arg(long, allow_hyphen_values = true)]
    pub sig: Option<String>,
}

#[derive(Debug, Args)]
pub struct TanceArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    #[arg(long, allow_hyphen_values = true)]
    pub q: String,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Base point coefficients.
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
    /// Coefficients of t(p); projected onto the tangent space.
    #[arg(long, allow_hyphen_values = true)]
    pub tp: String,
    /// `START,END` in the geodesic parameter; `pi` is understood.
    #[arg(long, allow_hyphen_values = true, default_value = "0,2*pi")]
    pub range: String,
    /// Number of records; a single step samples END.
    #[arg(long, default_value_t = 64)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct CurvatureArgs {
    /// ps1-split, ps1-hs, pc1, hc1, pr2, pd2, hc2, family-sinh, family-cosh, family-cos.
    #[arg(long)]
    pub space: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub theta: String,
    /// Random planes for `hc2`.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long)]
    pub alg: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub sig: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t2: Option<String>,
}

#[derive(Debug, Args)]
pub struct SignatureArgs {
    /// pr1, pc1, ph1, pd1, pcs1, phs1 or bidisc.
    #[arg(long)]
    pub space: Option<String>,
    #[arg(long)]
    pub alg: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub sig: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum ConvertCmd {
    /// ℙ¹_ℂ point ↔ pole of an oriented great circle.
    S2 {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "pole", required_unless_present = "pole")]
        point: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        pole: Option<String>,
    },
    /// ℙ¹_𝔻 point ↔ oriented line `(Re E, Im E, s)`.
    E2 {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "line", required_unless_present = "line")]
        point: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        line: Option<String>,
    },
    /// ℙ¹_ℂₛ point `(a,a'),(b,b')` ↔ oriented geodesic of H².
    H2 {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "ds", required_unless_present = "ds")]
        point: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        ds: Option<String>,
        /// Pick the other preimage of `ds`.
        #[arg(long)]
        reversed: bool,
    },
}

#[derive(Debug, Args)]
pub struct TransitionArgs {
    /// Coefficients over K_t, two per entry (1 and σ).
    #[arg(long, allow_hyphen_values = true, default_value = "1,0,0.5,0")]
    pub p: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1,0,0,0.5")]
    pub q: String,
    #[arg(long, allow_hyphen_values = true)]
    pub sig: Option<String>,
    /// Number of equally spaced t values in [0, 1].
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
}

#[derive(Debug, Subcommand)]
pub enum BidiscCmd {
    /// Which of the four balls contains `(a₁,b₁),(a₂,b₂)`.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The two disc factors.
    Split {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The swap isometry.
    Tau {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// ℝ×ℝ-valued tance.
    TancePair {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout().lock();
    match commands::run(&cli, stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("algebrae: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
