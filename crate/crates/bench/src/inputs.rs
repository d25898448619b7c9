use std::fmt;
use std::str::FromStr;

use chunkdiff::testfns::{Ackley, AckleyParams, Rosenbrock};
use chunkdiff::{gradient, gradient_threaded, ChunkConfig, GradientResult};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::BenchError;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Function {
    Rosenbrock,
    Ackley,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Rosenbrock => "rosenbrock",
            Function::Ackley => "ackley",
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            Function::Rosenbrock => 2,
            Function::Ackley => 1,
        }
    }

    /// Sampling interval for benchmark inputs.
    pub fn input_range(self) -> (f64, f64) {
        match self {
            Function::Rosenbrock => (-2.0, 2.0),
            Function::Ackley => (-1.0, 1.0),
        }
    }

    pub fn check_size(self, k: usize) -> Result<(), BenchError> {
        if k < self.min_size() {
            return Err(BenchError::Usage(format!(
                "{} needs at least {} inputs, got {k}",
                self.name(),
                self.min_size()
            )));
        }
        Ok(())
    }

    /// Gradient through the serial driver, or the threaded one when
    /// `cfg.threads > 1`.
    pub fn gradient(self, x: &[f64], cfg: &ChunkConfig) -> Result<GradientResult<f64>, chunkdiff::Error> {
        match (self, cfg.threads > 1) {
            (Function::Rosenbrock, false) => gradient(&Rosenbrock, x, cfg),
            (Function::Rosenbrock, true) => gradient_threaded(&Rosenbrock, x, cfg),
            (Function::Ackley, false) => gradient(&Ackley::new(AckleyParams::default()), x, cfg),
            (Function::Ackley, true) => gradient_threaded(&Ackley::new(AckleyParams::default()), x, cfg),
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Function {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rosenbrock" => Ok(Function::Rosenbrock),
            "ackley" => Ok(Function::Ackley),
            other => Err(BenchError::Usage(format!(
                "unknown function '{other}', expected rosenbrock or ackley"
            ))),
        }
    }
}

/// Deterministic input of length `k` drawn uniformly from the function's
/// sampling interval.
pub fn sample_input(function: Function, k: usize, seed: u64) -> Vec<f64> {
    let (lo, hi) = function.input_range();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..k).map(|_| rng.random_range(lo..hi)).collect()
}
