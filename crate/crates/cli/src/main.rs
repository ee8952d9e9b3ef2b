use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semigraph::families::Family;
use semigraph::MomentMode;
use semigraph_cli::{CliError, CommandOutput, OutputFormat};

#[derive(Parser)]
#[command(name = "semigraph", version, about = "Adjacency spectra and energy of semigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "s3_2")]
    S32,
    S3,
    T3,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::S32 => Family::S3_2,
            FamilyArg::S3 => Family::S3,
            FamilyArg::T3 => Family::T3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Direct,
    Paper,
}

#[derive(Subcommand)]
enum Command {
    /// Check a semigraph file and report connectivity
    Validate { path: PathBuf },
    /// Eigenvalues, optionally with the exact characteristic polynomial
    Spectrum {
        path: PathBuf,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// Energy, optionally with its bounds
    Energy {
        path: PathBuf,
        #[arg(long)]
        bounds: bool,
        #[arg(long, value_enum, default_value = "direct")]
        moment_mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Generate a member of a star-like family
    Family {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Print the member in the semigraph file format instead of a report
        #[arg(long)]
        emit_file: bool,
        #[arg(long)]
        closed_form: bool,
        #[arg(long)]
        json: bool,
    },
    /// Energy table of the three families for n = 1..=n_max
    Table {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, conflicts_with = "json")]
        tsv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Cartesian product of two semigraph files
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
}

fn json_or_text(json: bool) -> OutputFormat {
    if json {
        OutputFormat::Json
    } else {
        OutputFormat::Text
    }
}

fn run(cli: Cli) -> Result<CommandOutput, CliError> {
    match cli.command {
        Command::Validate { path } => semigraph_cli::cmd_validate(&path),
        Command::Spectrum { path, exact, json } => semigraph_cli::cmd_spectrum(&path, exact, json_or_text(json)),
        Command::Energy {
            path,
            bounds,
            moment_mode,
            json,
        } => {
            let mode = match moment_mode {
                ModeArg::Direct => MomentMode::Direct,
                ModeArg::Paper => MomentMode::Paper,
            };
            semigraph_cli::cmd_energy(&path, bounds, mode, json_or_text(json))
        }
        Command::Family {
            family,
            n,
            emit_file,
            closed_form,
            json,
        } => semigraph_cli::cmd_family(family.into(), n as usize, emit_file, closed_form, json_or_text(json)),
        Command::Table { n_max, tsv, json } => {
            let format = if tsv { OutputFormat::Tsv } else { json_or_text(json) };
            semigraph_cli::cmd_table(n_max as usize, format)
        }
        Command::Product {
            left,
            right,
            check,
            json,
        } => semigraph_cli::cmd_product(&left, &right, check, json_or_text(json)),
    }
}

fn main() -> ExitCode {
    // usage errors share exit code 1 with parse failures; 2 is kept for numeric failures
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(output) => {
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", output.stdout);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
