use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dodecolour::Dodecahedron;
use dodecolour_cli::{classify, emit, enumerate, export, orbits, verify, CliError, ExportFormat, Outcome, SubgroupSpec};

/// Face-rainbow vertex 5-colourings of the regular dodecahedron.
#[derive(Parser)]
#[command(name = "dodecolour", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerationFormat {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every invariant check and report PASS/FAIL for each.
    Verify {
        #[arg(long)]
        json: bool,
    },
    /// Write all valid colourings in canonical order.
    Enumerate {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: EnumerationFormat,
    },
    /// Orbits of a subgroup of S5 x {1,-1} on the colourings.
    Orbits {
        /// trivial, S5, A5, S5xC2, A5xC2, C2, or generators such as "(1 2 3 4 5);(1 2):-1".
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        json: bool,
    },
    /// Validate a colouring file and describe its structure.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Export the solid, a compound, or a colouring.
    Export {
        /// dodecahedron, compound-A, compound-B or colouring.
        #[arg(long)]
        what: String,
        /// off or json.
        #[arg(long)]
        format: String,
        /// Colouring to re-export (default: seed A).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> Result<Outcome, CliError> {
    let model = Dodecahedron::build();
    match command {
        Command::Verify { json } => Ok(verify(&model, json)),
        Command::Enumerate { out, format: EnumerationFormat::Json } => enumerate(&model, &out),
        Command::Orbits { subgroup, json } => orbits(&model, &subgroup.parse::<SubgroupSpec>()?, json),
        Command::Classify { input, json } => classify(&model, &input, json),
        Command::Export {
            what,
            format,
            input,
            out,
        } => {
            let text = export(&model, what.parse()?, format.parse::<ExportFormat>()?, input.as_deref())?;
            emit(text, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
