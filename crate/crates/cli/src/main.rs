//! `hstar-lab`: h*- and local h*-polynomials of the simplices `Δ_(1,q)`.

mod commands;
mod report;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hstar_core::simplex::WeightVector;
use num_bigint::{BigInt, BigUint};

use crate::commands::CliError;
use crate::report::{Format, Method};

#[derive(Parser, Debug)]
#[command(name = "hstar-lab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report for Δ_(1,q), headlined by its h*-polynomial.
    Hstar(SimplexArgs),
    /// Report for Δ_(1,q), headlined by its local h*-polynomial.
    LocalHstar(SimplexArgs),
    /// Report for a named family of simplices.
    Family(FamilyArgs),
    /// Distributional properties of an integer polynomial.
    Props(PropsArgs),
    /// The triangle of local h* coefficients for the factoradic family.
    Triangle(TriangleArgs),
    /// Runs the oracle and cross-method battery.
    Verify,
}

#[derive(Args, Debug)]
struct SimplexArgs {
    /// Comma-separated positive weights, e.g. `3,8,12`.
    #[arg(long, value_parser = parse_weights)]
    q: WeightVector,
    /// Check both polynomials against lattice-point enumeration.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Record the runtime in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Factoradic,
    BaseR,
    Projective,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: Family,
    /// Dimension of the simplex.
    #[arg(long)]
    n: usize,
    /// Base, for `base-r`.
    #[arg(long)]
    r: Option<u64>,
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    method: Method,
    /// Compute by every applicable method and fail on disagreement.
    #[arg(long)]
    compare: bool,
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug)]
struct PropsArgs {
    /// Comma-separated coefficients, constant term first.
    #[arg(long, value_parser = parse_coeffs, allow_hyphen_values = true)]
    poly: Coeffs,
    /// Symmetry center; defaults to lowest degree plus degree.
    #[arg(long)]
    center: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TriangleFamily {
    Factoradic,
}

#[derive(Args, Debug)]
struct TriangleArgs {
    #[arg(long, value_enum, default_value_t = TriangleFamily::Factoradic)]
    family: TriangleFamily,
    #[arg(long, default_value_t = 7)]
    rows: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Print the row-index convention and exit.
    #[arg(long)]
    explain_indexing: bool,
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse()
                .map_err(|_| format!("`{part}` is not a valid integer"))
        })
        .collect()
}

fn parse_weights(s: &str) -> Result<WeightVector, String> {
    let q: Vec<BigUint> = parse_list(s)?;
    WeightVector::new(q).map_err(|e| e.to_string())
}

#[derive(Clone, Debug)]
struct Coeffs(Vec<BigInt>);

fn parse_coeffs(s: &str) -> Result<Coeffs, String> {
    parse_list(s).map(Coeffs)
}

fn init_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("HSTARLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "HSTARLAB_THREADS must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<String, CliError> {
    init_threads()?;
    match cli.command {
        Command::Hstar(a) | Command::LocalHstar(a) => {
            commands::simplex(&a.q, a.oracle, a.timing).map(|r| r.render(a.format))
        }
        Command::Family(a) => commands::family(&commands::FamilyRequest {
            family: a.family,
            n: a.n,
            r: a.r,
            method: a.method,
            compare: a.compare,
            oracle: a.oracle,
            timing: a.timing,
        })
        .map(|r| r.render(a.format)),
        Command::Props(a) => commands::props(&a.poly.0, a.center),
        Command::Triangle(a) => {
            let TriangleFamily::Factoradic = a.family;
            if a.explain_indexing {
                Ok(commands::TRIANGLE_INDEXING.to_string())
            } else {
                Ok(commands::triangle(a.rows, a.format))
            }
        }
        Command::Verify => verify::run(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
