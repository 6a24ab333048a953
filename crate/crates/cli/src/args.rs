use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "grl", version, about = "Ratios of Gauss hypergeometric functions with integer parameter shifts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

/// Flags shared by every command.
#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Parameter a; decimals or `p/q`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub n1: Option<i64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub n2: Option<i64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub m: Option<i64>,
    /// Real argument, shorthand for `--z-re`.
    #[arg(long, global = true, allow_negative_numbers = true, conflicts_with = "z_re")]
    pub z: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub z_re: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub z_im: Option<f64>,
    #[arg(long, global = true, env = "GRL_TOL")]
    pub tol: Option<f64>,
    /// Integrand evaluation budget of the quadrature, or depth bound of a fraction.
    #[arg(long, global = true)]
    pub max_nodes: Option<usize>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Take shifts and default parameters from a worked example (1–15).
    #[arg(long, global = true)]
    pub example: Option<usize>,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// ₂F₁(a+n1, b+n2; c+m; z) / ₂F₁(a, b; c; z).
    EvalRatio,
    /// ₂F₁(a, b; c; z).
    #[command(name = "eval-2f1")]
    Eval2f1,
    /// C-fraction coefficients of the ratio, and its value at z if given.
    Cfrac {
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// Recover the coefficients from the Taylor series in rational arithmetic.
        #[arg(long)]
        exact: bool,
    },
    /// Generalized Nevanlinna class of the Gauss ratio.
    Classify {
        /// Pick-matrix draws per oracle; 0 skips the oracle.
        #[arg(long, default_value_t = 20)]
        draws: usize,
    },
    /// Runckel's zero-free conditions for ₂F₁(a, b; c; z).
    Runckel,
    /// Branch-cut density π⁻¹ Im R(x + i0) at one x or over a range.
    Boundary {
        #[arg(long)]
        x: Option<f64>,
        #[arg(long)]
        x_from: Option<f64>,
        #[arg(long)]
        x_to: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Integral representation, evaluated at z if given.
    IntegralRep {
        /// Order N of the representation; defaults to the one from the asymptotics.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Checks a worked example against the direct ratio.
    VerifyExample { idx: usize },
    /// Moment identities at z = 0, z = 1 and their difference.
    Moments,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::EvalRatio => "eval-ratio",
            Command::Eval2f1 => "eval-2f1",
            Command::Cfrac { .. } => "cfrac",
            Command::Classify { .. } => "classify",
            Command::Runckel => "runckel",
            Command::Boundary { .. } => "boundary",
            Command::IntegralRep { .. } => "integral-rep",
            Command::VerifyExample { .. } => "verify-example",
            Command::Moments => "moments",
        }
    }
}
