use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semigraph_cli::commands::{self, CliError, Family, Format, SpectrumMode};
use semigraph_core::spectra::DEFAULT_SOLVER_TOL;
use semigraph_core::UpperVariant;

/// Laplacian spectra of semigraphs.
///
/// Exit codes: 0 success, 1 I/O error, 2 invalid input or refused request,
/// 3 eigensolver did not converge.
#[derive(Parser)]
#[command(name = "semigraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a valid semigraph.
    Validate { input: String },
    /// Summary, degrees, exact Laplacian, spectrum, connectivity and bounds.
    Report {
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Numeric Laplacian spectrum with multiplicity clusters.
    Spectrum {
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Lower and upper eigenvalue bounds against the numeric largest eigenvalue.
    Bounds {
        input: String,
        #[arg(long, value_enum, default_value = "proof")]
        variant: VariantArg,
    },
    /// Exact characteristic polynomial of the Laplacian.
    Charpoly { input: String },
    /// Generate a family member in the semigraph text format.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Print spectrum JSON instead of the semigraph.
        #[arg(long, value_enum)]
        spectrum: Option<ModeArg>,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Relative off-diagonal tolerance of the eigensolver.
    #[arg(long, default_value_t = DEFAULT_SOLVER_TOL)]
    tol: f64,
    /// Digits after the decimal point in CSV output.
    #[arg(long, default_value_t = 6)]
    precision: usize,
}

impl OutputArgs {
    fn format(&self) -> Format {
        if self.csv {
            Format::Csv
        } else {
            Format::Json
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Literal,
    Proof,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Star,
    Tree3,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Closed,
    Numeric,
    Both,
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Validate { input } => Ok(commands::validate(&commands::load(&input)?)),
        Command::Report { input, out } => commands::report(
            &commands::load(&input)?,
            out.format(),
            out.tol,
            out.precision,
        ),
        Command::Spectrum { input, out } => commands::spectrum(
            &commands::load(&input)?,
            out.format(),
            out.tol,
            out.precision,
        ),
        Command::Bounds { input, variant } => {
            let variant = match variant {
                VariantArg::Literal => UpperVariant::Literal,
                VariantArg::Proof => UpperVariant::Proof,
            };
            commands::bounds(&commands::load(&input)?, variant)
        }
        Command::Charpoly { input } => Ok(commands::charpoly(&commands::load(&input)?)),
        Command::Gen {
            family,
            n,
            spectrum,
        } => {
            let family = match family {
                FamilyArg::Star => Family::Star,
                FamilyArg::Tree3 => Family::Tree3,
            };
            let mode = spectrum.map(|m| match m {
                ModeArg::Closed => SpectrumMode::Closed,
                ModeArg::Numeric => SpectrumMode::Numeric,
                ModeArg::Both => SpectrumMode::Both,
            });
            commands::gen(family, n, mode)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("semigraph: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
