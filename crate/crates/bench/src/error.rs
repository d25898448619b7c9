use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Diff(#[from] chunkdiff::Error),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

impl BenchError {
    /// 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Usage(_) => 2,
            BenchError::Diff(chunkdiff::Error::ZeroChunk)
            | BenchError::Diff(chunkdiff::Error::ChunkTooLarge { .. })
            | BenchError::Diff(chunkdiff::Error::ZeroThreads)
            | BenchError::Diff(chunkdiff::Error::TooFewInputs { .. })
            | BenchError::Diff(chunkdiff::Error::EmptyInput) => 2,
            _ => 1,
        }
    }
}
