use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use bklab_bench::{compare_spectral_naive, time_full, BenchJob};
use bklab_cli::suites::{run_suite, Suite};
use bklab_cli::{load_specs, run_all};
use bklab_core::engine::EngineKind;
use bklab_core::verify::emit_error_table;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bklab", version, about = "Quadratic-phase reconstruction laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or more JSON run specs and print the combined error table.
    Run {
        #[arg(required = true)]
        specs: Vec<PathBuf>,
        /// Write each spec's artifacts to <DIR>/<spec file stem> instead of its output_dir.
        #[arg(long, value_name = "DIR")]
        output_root: Option<PathBuf>,
        /// Also write the combined CSV here.
        #[arg(long, value_name = "FILE")]
        table: Option<PathBuf>,
    },
    /// Run the numerical verification checks.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Time an engine on a Gaussian job.
    Bench {
        #[arg(long, default_value = "spectral")]
        engine: String,
        /// Input nodes per side.
        #[arg(long, default_value_t = 2048)]
        size: usize,
        #[arg(long, default_value_t = 200)]
        output: usize,
        #[arg(long, default_value_t = 40.0)]
        lambda: f64,
        /// With the spectral engine, compare against naive on this many sampled nodes.
        #[arg(long)]
        compare: Option<usize>,
    },
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<ExitCode> {
    let cli = Cli::parse();
    bklab_cli::threads::configure_threads()?;
    match cli.command {
        Command::Run { specs, output_root, table } => {
            let specs = load_specs(&specs, output_root.as_deref())?;
            let (report, outcomes) = run_all(&specs)?;
            let t = emit_error_table(&report);
            print!("{}", t.text);
            for o in &outcomes {
                eprintln!("wrote {} images, {}", o.images.len(), o.csv.display());
            }
            if let Some(path) = table {
                std::fs::write(&path, t.csv)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => {
            let lines = run_suite(suite)?;
            let mut failed = false;
            for l in &lines {
                println!("{}", l.render());
                failed |= l.pass == Some(false);
            }
            Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
        }
        Command::Bench { engine, size, output, lambda, compare } => {
            let kind: EngineKind = engine.parse()?;
            let job = BenchJob::new(size, output, lambda);
            match (kind, compare) {
                (EngineKind::Spectral, Some(n)) => println!("{}", compare_spectral_naive(&job, n)?.render()),
                _ => {
                    let (t, _) = time_full(&job, &job.potential()?, kind)?;
                    println!("{} {}^2 -> {}^2, lambda {}: {:.3} s", t.engine, size, output, lambda, t.seconds);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
