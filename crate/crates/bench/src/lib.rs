//! Deterministic corpora and runtime-scaling measurement for the repseq
//! drivers. Inputs are pure functions of (kind, n, sigma, seed) over a
//! pinned SplitMix64 stream, so benchmark corpora reproduce bit-for-bit
//! anywhere; timings are summarized as log-log slopes of median runtimes.

pub mod error;
pub mod gen;
pub mod rng;
pub mod scaling;

pub use error::BenchError;
pub use gen::{gen_string, GenKind};
pub use rng::SplitMix64;
pub use scaling::{log_log_slope, run_scaling, write_csv, BenchRecord, ScalingConfig, ScalingReport};
