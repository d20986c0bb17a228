//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library, and returns the exit code with both output streams, so the
//! binary and the tests share one code path.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod checks;
mod commands;
mod render;

pub use render::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "wronski", version, about = "Exact universal linear ODEs, generalized Wronskians and Schubert calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The sequence h_0..h_N in e1..e_{r+1}
    Hseq(HseqArgs),
    /// Fundamental system, or the solution of a Cauchy problem
    Solve(SolveArgs),
    /// Solution of U(D) y = f with f read from a JSON series file
    SolveNonhom(NonhomArgs),
    /// Generalized Wronskian W_lambda of the universal fundamental system
    Wronskian(WronskianArgs),
    /// Schur determinants and Schur-basis expansions
    Schur(SchurArgs),
    /// Pieri successors of a partition
    Pieri(PieriArgs),
    /// Number of standard Young tableaux of a shape
    Syt(SytArgs),
    /// Plucker degree of G(r, P^d)
    Degree(GrassArgs),
    /// Product of two Schubert classes in G(r, P^d)
    Product(ProductArgs),
    /// Verify a family of identities; exits 3 on a counterexample
    Check(CheckArgs),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Rank r; the equation has order r + 1
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(0..=8))]
    rank: u32,
    /// Truncation order N
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(0..=64))]
    order: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl Common {
    fn rank(&self) -> usize {
        self.rank as usize
    }

    fn order(&self) -> usize {
        self.order as usize
    }
}

#[derive(Args, Debug)]
struct HseqArgs {
    #[command(flatten)]
    common: Common,
    /// Rational values for e1..e_{r+1}, comma separated
    #[arg(long, allow_hyphen_values = true)]
    spec: Option<String>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_hyphen_values = true)]
    spec: Option<String>,
    /// Initial values x0..xr, comma separated, or "symbolic"
    #[arg(long, allow_hyphen_values = true)]
    inits: Option<String>,
}

#[derive(Args, Debug)]
struct NonhomArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_hyphen_values = true)]
    spec: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    inits: Option<String>,
    /// Path to the right-hand side as a JSON series
    #[arg(long)]
    rhs: std::path::PathBuf,
}

#[derive(Args, Debug)]
struct WronskianArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_hyphen_values = true)]
    spec: Option<String>,
    /// Partition such as "2,1"
    #[arg(long, default_value = "")]
    partition: String,
}

#[derive(Args, Debug)]
struct SchurArgs {
    #[command(flatten)]
    common: Common,
    /// Jacobi-Trudi determinant of this partition, written in the e's
    #[arg(long, conflicts_with_all = ["poly", "k"])]
    partition: Option<String>,
    /// Expand a polynomial in h1, h2, ... in the Schur basis
    #[arg(long, conflicts_with = "k", allow_hyphen_values = true)]
    poly: Option<String>,
    /// Expand h1^k in the Schur basis
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args, Debug)]
struct PieriArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value = "")]
    partition: String,
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Restrict to the (r+1) x (d-r) box
    #[arg(long)]
    dim: Option<u32>,
}

#[derive(Args, Debug)]
struct SytArgs {
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct GrassArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(0..=8))]
    rank: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
    dim: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ProductArgs {
    #[command(flatten)]
    grass: GrassArgs,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CheckKind {
    Giambelli,
    Pieri,
    Derivative,
    Euler,
    Nonhom,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(value_enum)]
    kind: CheckKind,
    #[command(flatten)]
    common: Common,
    /// Largest partition weight (or derivative order) to check
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=8))]
    max_weight: u32,
    /// Largest k for the Pieri check
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(0..=8))]
    k: u32,
    /// Number of random cases for the non-homogeneous check
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..=1000))]
    cases: u32,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Corrupt the last case, to confirm that failures are detected
    #[arg(long, hide = true)]
    inject_fault: bool,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    let result = match cli.command {
        Command::Hseq(a) => commands::hseq(&a.common, a.spec.as_deref()),
        Command::Solve(a) => commands::solve(&a.common, a.spec.as_deref(), a.inits.as_deref()),
        Command::SolveNonhom(a) => commands::solve_nonhom(&a.common, a.spec.as_deref(), a.inits.as_deref(), &a.rhs),
        Command::Wronskian(a) => commands::wronskian(&a.common, a.spec.as_deref(), &a.partition),
        Command::Schur(a) => commands::schur(&a.common, a.partition.as_deref(), a.poly.as_deref(), a.k),
        Command::Pieri(a) => commands::pieri(&a.common, &a.partition, a.k, a.dim),
        Command::Syt(a) => commands::syt(&a.partition, a.format),
        Command::Degree(a) => commands::degree(a.rank, a.dim, a.format),
        Command::Product(a) => commands::product(&a.grass, &a.left, &a.right),
        Command::Check(a) => checks::run(&a),
    };
    match result {
        Ok(o) => o,
        Err(e) => {
            let code = match e {
                wronski::Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}
