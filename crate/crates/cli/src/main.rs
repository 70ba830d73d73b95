//! `grover` — command-line front end for the quantum search simulator.
//!
//! Subcommands: `run` (one experiment, JSON or trajectory CSV), `verify`
//! (operator-identity suite against the dense reference), `compare`
//! (quantum schedule vs classical scan, CSV table), `directory` (search a
//! `name,number` file for one name).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod directory;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use grover_core::{
    classical_baseline, resolve_iterations, run,
    verify::{run_identity_suite, VerifyOptions},
    BasisIndex, DiffusionKind, IterationMode, QubitCount, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "grover",
    version,
    about = "State-vector simulator of the quantum search algorithm"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one search experiment and print the result
    Run(RunArgs),
    /// Check the operator identities against the dense reference matrices
    Verify(VerifyArgs),
    /// Tabulate the quantum schedule against the classical scan baseline
    Compare(CompareArgs),
    /// Find a name's number in a `name,number` directory file
    Directory(DirectoryArgs),
}

#[derive(clap::Args)]
struct RunArgs {
    /// Register width in bits (1..=26)
    #[arg(long)]
    qubits: u32,
    /// Marked basis index, or "random" to derive one from the seed
    #[arg(long, default_value = "random", value_parser = parse_marked)]
    marked: MarkedArg,
    /// Iteration count, or "auto" for the closed-form argmax schedule
    #[arg(long, default_value = "auto", value_parser = parse_iterations)]
    iterations: IterationsArg,
    /// Seed for measurement sampling (and the random marked index)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Measurement samples to draw after the run
    #[arg(long, default_value_t = 0)]
    samples: usize,
    /// Record the per-iteration trajectory
    #[arg(long)]
    trace: bool,
    /// Diffusion implementation to use in the loop
    #[arg(long, value_enum, default_value_t = DiffusionArg::Direct)]
    diffusion: DiffusionArg,
    /// Output format; csv prints the trajectory table and needs --trace
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Largest register size to check (1..=8)
    #[arg(long, default_value_t = 6)]
    max_qubits: u32,
    /// Flip the sign of the dense phase rotation matrix (test hook)
    #[arg(long, hide = true)]
    corrupt_r_sign: bool,
}

#[derive(clap::Args)]
struct CompareArgs {
    /// Largest register size; one row per n from 2 up to this value
    #[arg(long, default_value_t = 10)]
    qubits: u32,
    /// Classical scan trials per row
    #[arg(long, default_value_t = 2000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(clap::Args)]
struct DirectoryArgs {
    /// Path to a newline-delimited name,number file
    #[arg(long)]
    file: PathBuf,
    /// Name to look up (must appear exactly once)
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra independent runs if the sampled index misses
    #[arg(long, default_value_t = 0)]
    retries: u32,
}

#[derive(Debug, Clone, Copy)]
enum MarkedArg {
    Random,
    Index(usize),
}

fn parse_marked(s: &str) -> Result<MarkedArg, String> {
    if s.eq_ignore_ascii_case("random") {
        return Ok(MarkedArg::Random);
    }
    s.parse::<usize>()
        .map(MarkedArg::Index)
        .map_err(|_| format!("expected a basis index or \"random\", got {s:?}"))
}

#[derive(Debug, Clone, Copy)]
enum IterationsArg {
    Auto,
    Count(u64),
}

fn parse_iterations(s: &str) -> Result<IterationsArg, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(IterationsArg::Auto);
    }
    s.parse::<u64>()
        .map(IterationsArg::Count)
        .map_err(|_| format!("expected an iteration count or \"auto\", got {s:?}"))
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DiffusionArg {
    Direct,
    Wrw,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Compare(args) => cmd_compare(&args),
        Command::Directory(args) => cmd_directory(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_run(args: &RunArgs) -> Result<ExitCode, String> {
    let n = QubitCount::new(args.qubits).map_err(|e| e.to_string())?;
    let marked = match args.marked {
        MarkedArg::Index(i) => BasisIndex::checked(i, n).map_err(|e| e.to_string())?,
        MarkedArg::Random => {
            // Stream 1 keeps the pick independent of measurement sampling,
            // which reads stream 0 of the same seed.
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            rng.set_stream(1);
            BasisIndex(rng.gen_range(0..n.state_count()))
        }
    };
    if matches!(args.format, FormatArg::Csv) && !args.trace {
        return Err("--format csv prints the trajectory table and needs --trace".into());
    }

    let config = RunConfig {
        n,
        marked,
        iterations: match args.iterations {
            IterationsArg::Auto => IterationMode::Auto,
            IterationsArg::Count(k) => IterationMode::Explicit(k),
        },
        seed: args.seed,
        sample_count: args.samples,
        trace: args.trace,
        diffusion: match args.diffusion {
            DiffusionArg::Direct => DiffusionKind::Direct,
            DiffusionArg::Wrw => DiffusionKind::Wrw,
        },
    };
    let result = run(&config).map_err(|e| e.to_string())?;

    match args.format {
        FormatArg::Json => println!(
            "{}",
            serde_json::to_string_pretty(&result).expect("result serializes")
        ),
        FormatArg::Csv => print!("{}", output::trajectory_csv(&result.trajectory)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    if args.max_qubits == 0 || args.max_qubits > 8 {
        return Err(format!(
            "--max-qubits must be between 1 and 8, got {}",
            args.max_qubits
        ));
    }
    let options = VerifyOptions {
        max_qubits: args.max_qubits,
        corrupt_phase_rotation_sign: args.corrupt_r_sign,
        ..VerifyOptions::default()
    };
    let checks = run_identity_suite(&options).map_err(|e| e.to_string())?;

    println!(
        "{:<22} {:>14} {:>11} {:>7}",
        "identity", "max deviation", "tolerance", "result"
    );
    for check in &checks {
        println!(
            "{:<22} {:>14.3e} {:>11.0e} {:>7}",
            check.name,
            check.max_deviation,
            check.tolerance,
            if check.passed { "pass" } else { "FAIL" }
        );
    }

    let mut failed = false;
    for check in checks.iter().filter(|c| !c.passed) {
        failed = true;
        eprintln!(
            "verification failed: {} deviated by {:.3e} (tolerance {:.0e})",
            check.name, check.max_deviation, check.tolerance
        );
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_compare(args: &CompareArgs) -> Result<ExitCode, String> {
    if args.qubits < 2 {
        return Err(format!("--qubits must be at least 2, got {}", args.qubits));
    }
    QubitCount::new(args.qubits).map_err(|e| e.to_string())?;
    if args.trials == 0 {
        return Err("--trials must be at least 1".into());
    }

    // Rows are independent (per-row derived seeds) and may run
    // concurrently; they are printed in n order regardless.
    let rows: Result<Vec<String>, String> = (2..=args.qubits)
        .into_par_iter()
        .map(|qubits| {
            let n = QubitCount::new(qubits).map_err(|e| e.to_string())?;
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            rng.set_stream(u64::from(qubits));
            let marked = BasisIndex(rng.gen_range(0..n.state_count()));
            let classical_seed: u64 = rng.gen();

            let iterations =
                resolve_iterations(n, IterationMode::Auto).map_err(|e| e.to_string())?;
            let config = RunConfig {
                n,
                marked,
                iterations: IterationMode::Auto,
                seed: rng.gen(),
                sample_count: 0,
                trace: false,
                diffusion: DiffusionKind::Direct,
            };
            let result = run(&config).map_err(|e| e.to_string())?;
            let classical =
                classical_baseline(n, classical_seed, args.trials).map_err(|e| e.to_string())?;

            Ok(format!(
                "{},{},{},{}",
                n.state_count(),
                iterations,
                output::csv_f64(result.final_success_prob),
                classical.queries_for_half_success
            ))
        })
        .collect();

    println!("N,quantum_iterations_auto,quantum_success_prob,classical_queries_for_half_success");
    for row in rows? {
        println!("{row}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_directory(args: &DirectoryArgs) -> Result<ExitCode, String> {
    let records = directory::load_records(&args.file)?;
    let report = directory::search(&records, &args.name, args.seed, args.retries)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(ExitCode::SUCCESS)
}
