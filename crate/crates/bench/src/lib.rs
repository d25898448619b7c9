//! Benchmark and verification harness for `chunkdiff`.
//!
//! Chunk-size sweeps and input-size sweeps time gradient evaluation of the
//! Rosenbrock and Ackley functions; `verify` cross-checks the AD gradient
//! against closed-form and finite-difference gradients. Results are written
//! as CSV.

pub mod csv_out;
mod error;
mod inputs;
mod sweep;
mod verify;

pub use csv_out::{emit_csv, read_csv};
pub use error::BenchError;
pub use inputs::{sample_input, Function, DEFAULT_SEED};
pub use sweep::{run_chunk_sweep, run_size_sweep, time_gradient, BenchRecord, Timing};
pub use verify::{verify, verify_at, ComponentError, VerifyReport};
