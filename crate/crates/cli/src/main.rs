use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use chowlab::experiments::{self, ExpError, IDS};
use chowlab::golden::{self, GoldenOutcome};
use chowlab::report::Report;
use chowlab::{exit, run_script};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "chowlab",
    version,
    about = "Exact experiments on Jacobian rings and tame symbols"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a session script and print its transcript
    Run { file: PathBuf },
    /// Run an experiment by id, or `all`
    Exp {
        id: String,
        /// Print the JSON report to standard output
        #[arg(long)]
        json: bool,
        /// Directory of golden reports to compare against
        #[arg(long, env = "CHOWLAB_GOLDEN_DIR")]
        golden: Option<PathBuf>,
        /// Overwrite the golden reports instead of comparing
        #[arg(long, requires = "golden")]
        bless: bool,
        /// Seconds allowed per experiment
        #[arg(long, default_value_t = 600)]
        timeout: u64,
    },
}

enum Outcome {
    Done(Report),
    Failed(ExpError),
    TimedOut,
}

fn run_with_timeout(id: &str, timeout: Duration) -> Outcome {
    let (tx, rx) = mpsc::channel();
    let owned = id.to_string();
    thread::spawn(move || {
        let _ = tx.send(experiments::run(&owned));
    });
    match rx.recv_timeout(timeout) {
        Ok(Ok(r)) => Outcome::Done(r),
        Ok(Err(e)) => Outcome::Failed(e),
        Err(_) => Outcome::TimedOut,
    }
}

fn exp(id: &str, json: bool, golden_dir: Option<PathBuf>, bless: bool, timeout: u64) -> i32 {
    let ids: Vec<&str> = if id == "all" {
        IDS.to_vec()
    } else if IDS.contains(&id) {
        vec![id]
    } else {
        eprintln!("unknown experiment `{id}`; known: all, {}", IDS.join(", "));
        return exit::USAGE;
    };
    let mut code = exit::PASS;
    let mut reports = Vec::new();
    for id in ids {
        let report = match run_with_timeout(id, Duration::from_secs(timeout)) {
            Outcome::Done(r) => r,
            Outcome::Failed(e) => {
                eprintln!("{id}: evaluation error: {e}");
                code = code.max(exit::EVAL);
                continue;
            }
            Outcome::TimedOut => {
                eprintln!("{id}: timed out after {timeout} s");
                code = code.max(exit::CHECK_FAILED);
                continue;
            }
        };
        if !report.passed() {
            code = code.max(exit::CHECK_FAILED);
        }
        if let Some(dir) = &golden_dir {
            if bless {
                match golden::bless(&report, dir) {
                    Ok(path) => eprintln!("{id}: wrote {}", path.display()),
                    Err(e) => {
                        eprintln!("{id}: cannot write golden report: {e}");
                        code = code.max(exit::USAGE);
                    }
                }
            } else {
                match golden::compare(&report, dir) {
                    Ok(GoldenOutcome::Match) => eprintln!("{id}: golden report matches"),
                    Ok(GoldenOutcome::Mismatch {
                        path,
                        first_difference,
                    }) => {
                        eprintln!(
                            "{id}: differs from {} at line {first_difference}",
                            path.display()
                        );
                        code = code.max(exit::CHECK_FAILED);
                    }
                    Ok(GoldenOutcome::Missing(path)) => {
                        eprintln!("{id}: missing golden report {}", path.display());
                        code = code.max(exit::USAGE);
                    }
                    Err(e) => {
                        eprintln!("{id}: cannot read golden report: {e}");
                        code = code.max(exit::USAGE);
                    }
                }
            }
        }
        if !json {
            print!("{}", report.summary());
        }
        reports.push(report);
    }
    if json {
        let out = if id == "all" {
            serde_json::to_string_pretty(&reports).expect("serializable reports") + "\n"
        } else {
            reports.first().map(Report::to_json).unwrap_or_default()
        };
        print!("{out}");
    }
    code
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run { file } => {
            let run = run_script(&file);
            print!("{}", run.transcript);
            let _ = std::io::stdout().flush();
            if let Some(e) = run.error {
                eprintln!("{e}");
            }
            run.code
        }
        Command::Exp {
            id,
            json,
            golden,
            bless,
            timeout,
        } => exp(&id, json, golden, bless, timeout),
    };
    ExitCode::from(code as u8)
}
