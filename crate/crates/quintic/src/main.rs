//! Thin command-line front end over the library's suite runners.

use clap::{Parser, Subcommand};
use quintic::cli::{self, Format, RunConfig, EXIT_USAGE};

#[derive(Parser)]
#[command(
    name = "quintic",
    about = "Exact genus-0/1 Gromov-Witten invariants of the quintic threefold and the identity suites behind them"
)]
struct Cli {
    /// q-truncation order (default 12, or the QUINTIC_ORDER env var)
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Output format: plain, json or csv
    #[arg(long, global = true, default_value = "plain")]
    format: String,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an identity suite (pf|wronskian|antideriv|kseries|eta|hodge|typeb|assembly|all)
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print Gromov-Witten invariants N_{g,d} for d = 1..dmax
    Gw {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        dmax: usize,
    },
    /// Dump a named series with exact rational coefficients
    Series {
        #[arg(long)]
        name: String,
    },
}

fn default_order() -> usize {
    std::env::var("QUINTIC_ORDER")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(12)
}

fn main() {
    let cli = Cli::parse();
    let format = match Format::parse(&cli.format) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_USAGE);
        }
    };
    let cfg = RunConfig {
        order: cli.order.unwrap_or_else(default_order),
        format,
    };
    let result = match &cli.command {
        Command::Check { suite } => cli::cmd_check(suite, &cfg),
        Command::Gw { genus, dmax } => cli::cmd_gw(*genus, *dmax, &cfg),
        Command::Series { name } => cli::cmd_series(name, &cfg),
    };
    match result {
        Ok((output, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(EXIT_USAGE);
                }
            } else {
                print!("{output}");
            }
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_USAGE);
        }
    }
}
