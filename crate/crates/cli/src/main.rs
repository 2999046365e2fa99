use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use qcoh_cli::{cmd_coherence, cmd_demo_inversion, cmd_dynamics, cmd_nmutp, cmd_rec_curve};
use qudit_coherence::channels::DampingFamily;

/// Coherence quantifiers, damping dynamics and tensor-product inversion
/// statistics for qudit states.
#[derive(Parser)]
#[command(name = "qcoh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Channel {
    /// Phase damping
    Pd,
    /// Amplitude damping
    Ad,
}

#[derive(Subcommand)]
enum Command {
    /// Print the HS, l1 and relative-entropy coherences of a state file as JSON.
    Coherence { file: PathBuf },
    /// Qubit REC along a line of fixed l1 coherence, as CSV.
    RecCurve {
        #[arg(long, default_value_t = 0.5)]
        l1: f64,
        #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
        steps: u64,
    },
    /// Coherences of a damped qutrit along p in [0, 1], as CSV.
    Dynamics {
        #[arg(long, value_enum)]
        channel: Channel,
        /// Mixing weight of the initial state; several values add a `w` column.
        #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.0])]
        w: Vec<f64>,
        #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
        steps: u64,
    },
    /// Percentage of random state quartets whose HS-distance order flips
    /// under two-copy tensor products, one JSON line per dimension.
    Nmutp {
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4, 5])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = default_workers(), value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
    /// Two-qubit example where HS coherence order flips under two copies.
    DemoInversion,
}

fn default_workers() -> u64 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u64)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let _ = e.print();
            let mut cmd = Cli::command();
            cmd.build();
            let usage = match std::env::args().nth(1).and_then(|name| cmd.find_subcommand_mut(&name).cloned()) {
                Some(mut sub) => sub.render_usage(),
                None => cmd.render_usage(),
            };
            eprintln!("\n{usage}");
            return ExitCode::from(2);
        }
    };
    let out = match cli.command {
        Command::Coherence { file } => cmd_coherence(&file),
        Command::RecCurve { l1, steps } => cmd_rec_curve(l1, steps as usize),
        Command::Dynamics { channel, w, steps } => {
            let family = match channel {
                Channel::Pd => DampingFamily::PhaseDamping,
                Channel::Ad => DampingFamily::AmplitudeDamping,
            };
            cmd_dynamics(family, &w, steps as usize)
        }
        Command::Nmutp { dims, samples, seed, workers } => cmd_nmutp(&dims, samples, seed, workers as usize),
        Command::DemoInversion => cmd_demo_inversion(),
    };
    match out {
        Ok(text) => {
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("qcoh: error: {e}");
            ExitCode::FAILURE
        }
    }
}
