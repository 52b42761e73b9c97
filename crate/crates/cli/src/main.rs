//! Command-line front end: every report is a JSON object on stdout that
//! echoes the inputs, the seed and the crate version.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "skewloci",
    version,
    about = "Exact checks for degeneracy loci of skew-symmetric forms"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Master seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Random samples drawn by sampling commands (on top of structured ones).
    #[arg(long, global = true, default_value_t = 1000)]
    pub samples: usize,
    /// Restarts allowed to `constrank search`.
    #[arg(long, global = true, default_value_t = 100)]
    pub budget: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poincaré polynomials (in q = t^2).
    Poincare(PoincareArgs),
    /// Top Betti numbers of the Grassmann and isotropic bundles over a base.
    Betti(BettiArgs),
    /// Constant-rank spaces of skew matrices.
    Constrank {
        #[command(subcommand)]
        action: ConstrankAction,
    },
    /// Coadjoint orbits of Lie algebras.
    Lie(LieArgs),
    /// Dimension bound for families of forms avoiding the next degeneracy locus.
    Bounds(BoundsArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoincareKind {
    Grass2,
    Isotropic,
    Flag,
    Quotient,
    Bundle,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberKind {
    Grass2,
    Isotropic,
}

#[derive(Args, Debug)]
pub struct PoincareArgs {
    #[arg(value_enum)]
    pub kind: PoincareKind,
    /// Size of the symplectic space (grass2, isotropic, bundle).
    #[arg(long)]
    pub r: Option<usize>,
    /// Group as a comma-separated product, e.g. `sl4` or `sl2,sp4` (flag, quotient).
    #[arg(long)]
    pub group: Option<String>,
    /// Levi factor as a comma-separated product (quotient).
    #[arg(long)]
    pub levi: Option<String>,
    /// Base Poincaré polynomial coefficients in q, e.g. `1,1` for P^1 (bundle).
    #[arg(long, allow_hyphen_values = true)]
    pub base: Option<String>,
    /// Fiber of the bundle.
    #[arg(long, value_enum, default_value_t = FiberKind::Grass2)]
    pub fiber: FiberKind,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    /// Betti numbers `b_0, ..., b_2d` of the base, comma separated; empty for
    /// the empty base.
    #[arg(long, conflicts_with = "base_file", allow_hyphen_values = true)]
    pub base: Option<String>,
    /// JSON file `{"d": d, "b": [b_0, ..., b_2d]}`.
    #[arg(long)]
    pub base_file: Option<PathBuf>,
    #[arg(long)]
    pub r: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Auto,
    Exact,
    Probabilistic,
}

#[derive(Subcommand, Debug)]
pub enum ConstrankAction {
    /// Decide constant rank `r` for a space read from a file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Seeded random search for an `m`-dimensional space of constant rank `r`.
    Search {
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Ranks of structured and random elements of a space read from a file.
    Profile { file: PathBuf },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieAction {
    Validate,
    Orbit,
    Minorbit,
    Histogram,
    Bound,
}

#[derive(Args, Debug)]
pub struct LieArgs {
    #[arg(value_enum)]
    pub action: LieAction,
    /// Catalog name (`sl2`, `sl3`, `heisenberg3`, ...) or path to a JSON file.
    pub algebra: String,
    /// Covector coordinates for `orbit`, comma separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindArg {
    Skew,
    Symmetric,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long = "n", visible_alias = "N")]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value_t = 0)]
    pub e: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return output::emit_usage_error(0, Format::Json, &e.render().to_string()),
    };
    let outcome = commands::run(&cli);
    output::emit(cli.global.seed, cli.global.format, outcome)
}
