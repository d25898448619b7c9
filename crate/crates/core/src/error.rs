use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} partials, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("lane {lane} out of range for {len} partials")]
    LaneOutOfRange { lane: usize, len: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("chunk size must be at least 1")]
    ZeroChunk,
    #[error("thread count must be at least 1")]
    ZeroThreads,
    #[error("chunk size {requested} exceeds the largest supported inline chunk {max}")]
    ChunkTooLarge { requested: usize, max: usize },
    #[error("function returned {found} outputs, expected {expected}")]
    InconsistentOutput { expected: usize, found: usize },
    #[error("input dimension {k} exceeds the limit {max}; split the computation into batched calls")]
    DimensionTooLarge { k: usize, max: usize },
    #[error("need at least {needed} inputs, got {found}")]
    TooFewInputs { needed: usize, found: usize },
    #[error("non-differentiable point")]
    NonDifferentiablePoint,
    #[error("finite-difference step must be positive and finite")]
    InvalidStep,
}
