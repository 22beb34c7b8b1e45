use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod report;

use report::{CliError, Report};

#[derive(Parser)]
#[command(name = "onerel", version, about = "Analyze one-relator presentations and automorphisms of free groups")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long = "json-style", global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the hypotheses under which the kernel is exactly Inn_R.
    CheckTheorem {
        presentation: PathBuf,
    },
    /// Certify an automorphism and place it relative to Stab(R), Ker and Inn_R.
    Classify {
        presentation: PathBuf,
        automorphism: PathBuf,
    },
    /// Write the presentation and automorphism files of an example family.
    Examples {
        /// nonorientable-phi, nonorientable-psi, orientable-phi or orientable-psi
        kind: String,
        rank: usize,
        power: u32,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Decide whether a word is primitive.
    Primitive {
        word: String,
        /// Defaults to the largest generator index used, at least 2.
        rank: Option<usize>,
    },
    /// Decide membership in the normal closure of the relator.
    Member {
        word: String,
        presentation: PathBuf,
    },
    /// Whitehead graph of a word.
    Whgraph {
        word: String,
        /// Include the external edge.
        #[arg(long)]
        cyclic: bool,
        /// Print Graphviz DOT on stdout.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Piece analysis of the relator.
    Pieces {
        presentation: PathBuf,
    },
    /// Sweep x1·c over commutator-subgroup elements c up to a length.
    #[command(name = "verify-1-3")]
    Verify13 {
        max_length: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut report = Report::new(args);
    let outcome = match cli.command {
        Command::CheckTheorem { presentation } => commands::check_theorem(&mut report, &presentation),
        Command::Classify { presentation, automorphism } => {
            commands::classify(&mut report, &presentation, &automorphism)
        }
        Command::Examples { kind, rank, power, out_dir } => {
            commands::examples(&mut report, &kind, rank, power, &out_dir)
        }
        Command::Primitive { word, rank } => commands::primitive(&mut report, &word, rank),
        Command::Member { word, presentation } => commands::member(&mut report, &word, &presentation),
        Command::Whgraph { word, cyclic, dot, rank } => {
            commands::whgraph(&mut report, &word, cyclic, dot && !cli.json, rank)
        }
        Command::Pieces { presentation } => commands::pieces(&mut report, &presentation),
        Command::Verify13 { max_length } => commands::verify_1_3(&mut report, max_length),
    };
    match outcome {
        Ok(outcome) => {
            let code = outcome.exit_code;
            report.emit(outcome, cli.json);
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Usage(_) => 2,
                CliError::Precondition(_) => 3,
            })
        }
    }
}
