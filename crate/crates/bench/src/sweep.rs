use std::hint::black_box;
use std::time::Instant;

use chunkdiff::ChunkConfig;
use serde::{Deserialize, Serialize};

use crate::error::BenchError;
use crate::inputs::{sample_input, Function};

/// One timing observation. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub function: Function,
    pub k: usize,
    pub chunk: usize,
    pub threads: usize,
    pub reps: usize,
    pub min_seconds: f64,
    pub mean_seconds: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Timing {
    pub min_seconds: f64,
    pub mean_seconds: f64,
}

pub const MIN_REPS: usize = 3;

/// Times `reps` gradient evaluations after one untimed warm-up run.
pub fn time_gradient(
    function: Function,
    x: &[f64],
    cfg: &ChunkConfig,
    reps: usize,
) -> Result<Timing, BenchError> {
    if reps < MIN_REPS {
        return Err(BenchError::Usage(format!("reps must be at least {MIN_REPS}, got {reps}")));
    }
    black_box(function.gradient(black_box(x), cfg)?);
    let mut total = 0.0;
    let mut min = f64::INFINITY;
    for _ in 0..reps {
        let start = Instant::now();
        let g = function.gradient(black_box(x), cfg)?;
        let secs = start.elapsed().as_secs_f64();
        black_box(g);
        total += secs;
        min = min.min(secs);
    }
    Ok(Timing {
        min_seconds: min,
        mean_seconds: total / reps as f64,
    })
}

/// One record per chunk size at a fixed input of length `k`.
pub fn run_chunk_sweep(
    function: Function,
    k: usize,
    chunks: &[usize],
    reps: usize,
    seed: u64,
) -> Result<Vec<BenchRecord>, BenchError> {
    function.check_size(k)?;
    if chunks.is_empty() || chunks.contains(&0) {
        return Err(BenchError::Usage("chunk sizes must be non-empty and at least 1".into()));
    }
    let x = sample_input(function, k, seed);
    chunks
        .iter()
        .map(|&chunk| {
            let t = time_gradient(function, &x, &ChunkConfig::new(chunk), reps)?;
            Ok(record(function, k, chunk, 1, reps, t))
        })
        .collect()
}

/// One record per `(k, threads)` pair, `k` outermost.
pub fn run_size_sweep(
    function: Function,
    sizes: &[usize],
    chunk: usize,
    threads: &[usize],
    reps: usize,
    seed: u64,
) -> Result<Vec<BenchRecord>, BenchError> {
    if sizes.is_empty() || threads.is_empty() {
        return Err(BenchError::Usage("sizes and thread counts must be non-empty".into()));
    }
    if chunk == 0 || threads.contains(&0) {
        return Err(BenchError::Usage("chunk and thread counts must be at least 1".into()));
    }
    let mut out = Vec::with_capacity(sizes.len() * threads.len());
    for &k in sizes {
        function.check_size(k)?;
        let x = sample_input(function, k, seed);
        for &t in threads {
            let cfg = ChunkConfig::new(chunk).with_threads(t);
            let timing = time_gradient(function, &x, &cfg, reps)?;
            out.push(record(function, k, chunk, t, reps, timing));
        }
    }
    Ok(out)
}

fn record(function: Function, k: usize, chunk: usize, threads: usize, reps: usize, t: Timing) -> BenchRecord {
    BenchRecord {
        function,
        k,
        chunk,
        threads,
        reps,
        min_seconds: t.min_seconds,
        mean_seconds: t.mean_seconds,
    }
}
