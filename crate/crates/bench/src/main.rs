use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chunkdiff_bench::{emit_csv, run_chunk_sweep, run_size_sweep, verify, BenchError, BenchRecord, Function, DEFAULT_SEED};
use clap::{Parser, Subcommand};

/// Timing sweeps and gradient verification for chunked forward-mode AD.
#[derive(Parser)]
#[command(name = "bench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time one gradient size across several chunk sizes.
    ChunkSweep {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long)]
        size: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        chunks: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Time several gradient sizes at a fixed chunk size.
    SizeSweep {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        chunk: usize,
        /// One or more thread counts; `1,4` gives a serial/threaded pair per size.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        threads: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Cross-check AD, closed-form and finite-difference gradients.
    Verify {
        #[arg(long, value_enum)]
        function: Function,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        chunk: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1e-5)]
        tol: f64,
        /// Evaluate at x = (1, ..., 1) instead of a random point.
        #[arg(long)]
        at_ones: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, BenchError> {
    match command {
        Command::ChunkSweep { function, size, chunks, reps, seed, csv } => {
            let records = run_chunk_sweep(function, size, &chunks, reps, seed)?;
            report(&records, csv)
        }
        Command::SizeSweep { function, sizes, chunk, threads, reps, seed, csv } => {
            let records = run_size_sweep(function, &sizes, chunk, &threads, reps, seed)?;
            report(&records, csv)
        }
        Command::Verify { function, size, chunk, seed, tol, at_ones } => {
            let r = if at_ones {
                function.check_size(size)?;
                chunkdiff_bench::verify_at(function, &vec![1.0; size], chunk, tol)?
            } else {
                verify(function, size, chunk, seed, tol)?
            };
            // a closed pipe is not a verification failure
            let _ = writeln!(std::io::stdout().lock(), "{r}");
            Ok(if r.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn report(records: &[BenchRecord], csv: Option<PathBuf>) -> Result<ExitCode, BenchError> {
    match csv {
        Some(path) => emit_csv(records, path)?,
        None => chunkdiff_bench::csv_out::write_csv(records, std::io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}
