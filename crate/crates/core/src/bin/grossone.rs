use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grossone::cli::{self, Output, ParadoxParams};
use grossone::paradoxes::LampState;

/// Exact arithmetic with grossone.
///
/// Without arguments an interactive prompt is started.
#[derive(Parser)]
#[command(name = "grossone", version)]
struct Args {
    /// Evaluate one expression
    #[arg(long, value_name = "EXPR", allow_hyphen_values = true, conflicts_with = "script")]
    eval: Option<String>,
    /// Evaluate a file line by line
    #[arg(long, value_name = "PATH")]
    script: Option<PathBuf>,
    /// Newline-delimited JSON output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the paradox reports
    Paradox {
        /// galileo, multiplication, hilbert, thomson or torricelli
        name: String,
        /// hilbert: number of newcomers
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
        /// thomson: number of switches
        #[arg(long, allow_hyphen_values = true)]
        switches: Option<String>,
        /// thomson: state during the first interval
        #[arg(long, value_enum)]
        initial: Option<Initial>,
        /// torricelli: segment width
        #[arg(long, allow_hyphen_values = true)]
        h: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Initial {
    On,
    Off,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mode = if args.json { Output::Json } else { Output::Text };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut err = io::stderr();

    let code = match (args.command, args.eval, args.script) {
        (Some(Command::Paradox { name, m, switches, initial, h }), _, _) => {
            let initial = initial.map(|i| match i {
                Initial::On => LampState::On,
                Initial::Off => LampState::Off,
            });
            let params = ParadoxParams { m, switches, initial, h };
            cli::run_paradox(&name, &params, mode, &mut out, &mut err)
        }
        (None, Some(expr), _) => cli::run_eval(&expr, mode, &mut out, &mut err),
        (None, None, Some(path)) => cli::run_script(&path, mode, &mut out, &mut err),
        (None, None, None) => cli::run_repl(&mut io::stdin().lock(), mode, &mut out, &mut err),
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
