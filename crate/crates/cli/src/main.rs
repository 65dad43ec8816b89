//! `balseg`: count, enumerate and analyse balanced words from the command line.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use balseg::verify::VerifyConfig;
use balseg::{Family, RenderMode};
use clap::{Parser, Subcommand, ValueEnum};

use commands::EnumerateArgs;
use report::{CliError, Format, Report};

#[derive(Parser)]
#[command(
    name = "balseg",
    version,
    about = "Exact counts of balanced words and discrete segments"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Balanced words
    S,
    /// Balanced palindromes
    P,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::S => Family::Balanced,
            FamilyArg::P => Family::Palindromic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderArg {
    Naive,
    Standard,
}

impl From<RenderArg> for RenderMode {
    fn from(r: RenderArg) -> RenderMode {
        match r {
            RenderArg::Naive => RenderMode::Naive,
            RenderArg::Standard => RenderMode::Standard,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact count of words of length L and height h (any integers).
    #[command(allow_negative_numbers = true)]
    Count {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(value_name = "L")]
        len: i64,
        #[arg(value_name = "h")]
        height: i64,
    },
    /// Triangular table of counts for 0 <= h <= L <= max-L, with row totals.
    Table {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long = "max-L", value_name = "N")]
        max_len: usize,
    },
    /// List every balanced word of length L and height h.
    #[command(allow_negative_numbers = true)]
    Enumerate {
        #[arg(value_name = "L")]
        len: i64,
        #[arg(value_name = "h")]
        height: i64,
        /// Only palindromes.
        #[arg(long)]
        palindromes: bool,
        /// Draw each word as an ASCII lattice path.
        #[arg(long, value_enum)]
        render: Option<RenderArg>,
        /// Largest length that may be enumerated.
        #[arg(long, env = "BALSEG_CAP", default_value_t = 24)]
        cap: usize,
    },
    /// Generating function at fixed height and its first series terms.
    #[command(allow_negative_numbers = true)]
    Genfunc {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(value_name = "h")]
        height: i64,
        /// Print the coefficients of X^0 through X^N.
        #[arg(long, value_name = "N", default_value_t = 10)]
        terms: usize,
    },
    /// Exact quasi-polynomial profile at fixed height h >= 2.
    #[command(allow_negative_numbers = true)]
    Asymptotic {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(value_name = "h")]
        height: i64,
    },
    /// Run the built-in consistency suites.
    Verify {
        /// Largest length used by table-based checks.
        #[arg(long = "max-L", value_name = "N", default_value_t = 12)]
        max_len: usize,
        /// Largest length checked against brute-force enumeration (0 skips).
        #[arg(long, value_name = "N", default_value_t = 12)]
        brute_max: usize,
        /// Largest height for generating-function and profile checks.
        #[arg(long, value_name = "N", default_value_t = 6)]
        h_max: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Count { .. } => "count",
            Command::Table { .. } => "table",
            Command::Enumerate { .. } => "enumerate",
            Command::Genfunc { .. } => "genfunc",
            Command::Asymptotic { .. } => "asymptotic",
            Command::Verify { .. } => "verify",
        }
    }
}

fn run(command: &Command) -> Result<Report, CliError> {
    match *command {
        Command::Count {
            family,
            len,
            height,
        } => commands::count(family.into(), len, height),
        Command::Table { family, max_len } => commands::table(family.into(), max_len),
        Command::Enumerate {
            len,
            height,
            palindromes,
            render,
            cap,
        } => commands::enumerate(&EnumerateArgs {
            len,
            height,
            palindromes,
            render: render.map(Into::into),
            cap,
        }),
        Command::Genfunc {
            family,
            height,
            terms,
        } => commands::genfunc(family.into(), height, terms),
        Command::Asymptotic { family, height } => commands::asymptotic(family.into(), height),
        Command::Verify {
            max_len,
            brute_max,
            h_max,
        } => {
            let (report, passed) = commands::verify(VerifyConfig {
                max_len,
                brute_max,
                h_max,
            });
            if passed {
                Ok(report)
            } else {
                // The per-suite lines are still useful when something fails.
                eprint!("{}", report.pretty);
                Err(CliError::Inconsistency(
                    "one or more verification suites failed".into(),
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(report.render(cli.format).as_bytes())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("balseg {}: {err}", cli.command.name());
            if cli.format == Format::Json {
                print!("{}", err.to_json(cli.command.name(), &[]));
            }
            ExitCode::from(err.exit_code())
        }
    }
}
