use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand, ValueEnum};
use toeplitz_lab::Convention;

#[derive(Debug, Parser)]
#[command(name = "toeplitz-lab", version, about = "Exact hyponormality and normality checks for wT_φ + T_ψ")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, ClapArgs)]
pub struct GlobalArgs {
    /// Projection and inner-product convention.
    #[arg(long, global = true, default_value = "paper-disk", value_parser = parse_convention)]
    pub convention: Convention,

    /// Truncation degree N (forms act on polynomials of degree ≤ N).
    #[arg(long, global = true, default_value_t = 12)]
    pub truncation: usize,

    /// Tolerance for float-path checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,

    /// w-plane grid, `re0:re1:steps,im0:im1:steps`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub grid: Option<String>,

    /// Output format; each command has a natural default.
    #[arg(long, global = true, value_enum)]
    pub out: Option<OutFormat>,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Fractional digits for decimal output.
    #[arg(long, global = true, default_value_t = 6)]
    pub precision: usize,
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse().map_err(|e: toeplitz_lab::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
    Csv,
}

impl OutFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutFormat::Text => "text",
            OutFormat::Json => "json",
            OutFormat::Csv => "csv",
        }
    }
}

/// Two symbol files; `ψ` defaults to the zero symbol.
#[derive(Debug, Clone, ClapArgs)]
pub struct SymbolPair {
    /// JSON file with the symbol φ.
    #[arg(long)]
    pub phi: PathBuf,

    /// JSON file with the symbol ψ (zero when omitted).
    #[arg(long)]
    pub psi: Option<PathBuf>,
}

/// A Gaussian rational given as real and imaginary parts (`p/q` or exact decimal).
#[derive(Debug, Clone, ClapArgs)]
pub struct WeightArg {
    /// Real part of w.
    #[arg(long = "w", allow_hyphen_values = true, default_value = "1")]
    pub re: String,

    /// Imaginary part of w.
    #[arg(long = "w-im", allow_hyphen_values = true, default_value = "0")]
    pub im: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the published worked examples and compare with the expected-status ledger.
    VerifyExamples {
        /// Expected-status ledger (defaults to the bundled one).
        #[arg(long)]
        ledger: Option<PathBuf>,
    },

    /// Exact PSD test of the level-N form of wT_φ + T_ψ.
    HypoCheck {
        #[command(flatten)]
        symbols: SymbolPair,
        #[command(flatten)]
        w: WeightArg,
    },

    /// Verdicts over a grid of w values (CSV by default).
    ScanW {
        #[command(flatten)]
        symbols: SymbolPair,
        /// Add exact p/q columns.
        #[arg(long)]
        exact_columns: bool,
        /// Add a column flagging PSD verdicts with a zero pivot.
        #[arg(long)]
        diagnostics: bool,
    },

    /// Test whether the level-N self-commutator form vanishes.
    NormalCheck {
        #[command(flatten)]
        symbols: SymbolPair,
        #[command(flatten)]
        w: WeightArg,
    },

    /// Cauchy–Schwarz inequality between the three brackets at a polynomial h.
    CauchySchwarz {
        #[command(flatten)]
        symbols: SymbolPair,
        /// JSON file with the polynomial h.
        #[arg(long)]
        h: PathBuf,
    },

    /// Kernel bound for analytic self-maps (circle convention).
    KernelBound {
        #[command(flatten)]
        symbols: SymbolPair,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        alpha_im: String,
        /// Boundary samples for the sup-norm estimate.
        #[arg(long, default_value_t = 256)]
        grid_m: usize,
    },

    /// Distance of the adjoint image of derivative kernels from their span.
    InvariantSubspace {
        #[command(flatten)]
        symbols: SymbolPair,
        #[command(flatten)]
        w: WeightArg,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        c: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        c_im: String,
        /// Highest derivative order m.
        #[arg(long, default_value_t = 1)]
        order: usize,
    },

    /// Geometric expansion of z/(uz + v) up to degree N.
    ExpandSymbol {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        u_im: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        v_im: String,
    },

    /// Series versus closed forms for the rational-symbol coefficients.
    CoeffCheck {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        alpha_im: String,
    },

    /// Grid estimates of sup |φ| and min |φ| over the disk.
    SymbolGrid {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long, default_value_t = 360)]
        grid_m: usize,
    },

    /// Print the exact level-N form matrix as JSON.
    DumpMatrix {
        #[command(flatten)]
        symbols: SymbolPair,
        #[command(flatten)]
        w: WeightArg,
    },

    /// Seeded randomized property checks.
    SelfCheck {
        /// Cases per property.
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}
