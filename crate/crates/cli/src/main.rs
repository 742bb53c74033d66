use std::path::PathBuf;

use clap::{Parser, Subcommand};
use glidepath_cli::commands;

#[derive(Parser)]
#[command(name = "glidepath", version, about = "Plan, score, and replay engine-out glide approaches")]
struct Cli {
    /// Directory holding aircraft profiles, runway tables, and recordings
    #[arg(long, default_value = "data", global = true)]
    data_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the glide-performance tables for the stored aircraft
    Tables {
        /// Aircraft name or profile file stem; all aircraft when omitted
        #[arg(long)]
        aircraft: Option<String>,
    },
    /// Plan every runway/bank candidate for a scenario and export the best
    Plan {
        #[arg(long)]
        scenario: PathBuf,
        /// Directory the trajectory exports are written into
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Print the ranked safety table for a scenario
    Rank {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Scan a recorded stream for stable-glide windows
    Estimate {
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Replay a recording through the estimate, refine, replan loop
    Replay {
        #[arg(long)]
        scenario: PathBuf,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };

    let result = match &cli.command {
        Command::Tables { aircraft } => {
            commands::cmd_tables(&cli.data_dir, aircraft.as_deref()).map(|out| (out, 0))
        }
        Command::Plan { scenario, out } => commands::cmd_plan(&cli.data_dir, scenario, out),
        Command::Rank { scenario } => commands::cmd_rank(&cli.data_dir, scenario),
        Command::Estimate { scenario } => {
            commands::cmd_estimate(&cli.data_dir, scenario).map(|out| (out, 0))
        }
        Command::Replay { scenario } => {
            commands::cmd_replay(&cli.data_dir, scenario).map(|out| (out, 0))
        }
    };

    match result {
        Ok((out, code)) => {
            print!("{out}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
