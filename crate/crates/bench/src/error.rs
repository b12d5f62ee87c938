use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BenchError {
    #[error("alphabet size {0} is outside 1..=256")]
    InvalidAlphabet(usize),
    #[error("sizes must be strictly ascending")]
    SizesNotAscending,
    #[error("reps must be at least 1")]
    InvalidReps,
    #[error(transparent)]
    Core(#[from] repseq_core::Error),
}
