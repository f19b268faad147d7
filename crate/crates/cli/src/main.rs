use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use log::LevelFilter;

use mqslink_cli::{parse_config, run_scenario, ParseOptions, RunOptions, Status, DEFAULT_CONFIG};

const EXIT_PARTIAL: u8 = 1;
const EXIT_INVALID_CONFIG: u8 = 2;

/// Necklace-to-contact-lens magneto-quasistatic link simulator.
#[derive(Parser)]
#[command(name = "mqslink", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every request in a scenario file.
    Run {
        config: PathBuf,
        /// Output directory (overrides [output] dir).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for sweeps and field integration.
        #[arg(long)]
        threads: Option<usize>,
        /// Log level: error, warn, info, debug, trace.
        #[arg(long, default_value = "warn")]
        log: LevelFilter,
    },
    /// Check a scenario file without running it.
    Validate { config: PathBuf },
    /// Print the nominal scenario file.
    Defaults,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Defaults => {
            print!("{DEFAULT_CONFIG}");
            ExitCode::SUCCESS
        }
        Command::Validate { config } => match parse_config(&config, ParseOptions::default()) {
            Ok(c) => {
                println!(
                    "{}: ok ({} requests, digest {})",
                    config.display(),
                    c.requests.len(),
                    mqslink_cli::config_digest(&c)
                );
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{}: {e}", config.display());
                ExitCode::from(EXIT_INVALID_CONFIG)
            }
        },
        Command::Run {
            config,
            out,
            threads,
            log,
        } => {
            env_logger::Builder::new().filter_level(log).init();
            let parsed = match parse_config(&config, ParseOptions::default()) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("{}: {e}", config.display());
                    return ExitCode::from(EXIT_INVALID_CONFIG);
                }
            };
            if threads == Some(0) {
                eprintln!("--threads must be at least 1");
                return ExitCode::from(EXIT_INVALID_CONFIG);
            }
            let out_dir = out
                .or_else(|| parsed.output_dir.as_ref().map(PathBuf::from))
                .unwrap_or_else(|| PathBuf::from("mqslink-out"));
            match run_scenario(&parsed, &RunOptions { out_dir: out_dir.clone(), threads }) {
                Ok(report) => {
                    for r in &report.requests {
                        let detail = match (&r.status, &r.error) {
                            (Status::Failed, Some(e)) => e.clone(),
                            _ => r.outputs.join(", "),
                        };
                        println!("[{:?}] {} {}: {detail}", r.status, r.index + 1, r.kind);
                    }
                    println!("report: {}", out_dir.join(mqslink_cli::run::REPORT_FILE).display());
                    ExitCode::from(report.exit_code() as u8)
                }
                Err(e) => {
                    eprintln!("{e}");
                    ExitCode::from(EXIT_PARTIAL)
                }
            }
        }
    }
}
