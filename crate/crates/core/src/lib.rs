//! Repetition-structured subsequence search.
//!
//! Given a text, find the longest subsequence whose repetition exponent —
//! length divided by a period — lies in a chosen domain: non-integer
//! exponents, exponents in [2, 3] or [3, 4), exact squares, anything
//! periodic, or any repetition at all. Each search fixes a factorization
//! of the text, fills a small family of dynamic-programming tables over
//! the factors, and takes the best corner across all factorizations;
//! witnesses come from deterministic tracebacks.
//!
//! Entry points live in [`driver`]; [`oracle`] holds an exhaustive
//! reference search for cross-checking on short inputs.

pub mod d2;
pub mod d3;
pub mod d4;
pub mod domain;
pub mod driver;
pub mod error;
pub mod factorization;
pub mod lcs;
pub mod oracle;
pub mod period;
pub mod rational;
pub mod witness;

pub use d2::{d2_table, D2Gate, DpTable2};
pub use d3::{d3_table, DpTable3};
pub use d4::{d4_table, DpTable4};
pub use domain::ExponentDomain;
pub use driver::{
    check_mode_limits, d2_driver, d3_driver, d4_driver, longest_any_repetition, longest_periodic,
    longest_square, run_mode, DriverOptions, Limits, Mode,
};
pub use error::Error;
pub use factorization::Factorization;
pub use lcs::{lcs_table, LcsTable};
pub use oracle::{oracle_longest, OracleResult, ORACLE_MAX_LEN};
pub use period::{
    classify, failure_function, in_domain, max_exponent, periods, Classification, PeriodProfile,
};
pub use rational::ExactRational;
pub use witness::{Answer, RepetitionWitness, Source};
