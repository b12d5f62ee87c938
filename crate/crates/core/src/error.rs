use thiserror::Error;

/// Errors surfaced by the library. Internal contract violations (mismatched
/// table dimensions, broken traceback state) are asserts, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `lcs_table` accepts 2 to 4 strings.
    #[error("lcs_table takes 2 to 4 strings, got {0}")]
    UnsupportedArity(usize),

    /// A driver or the oracle refused an input longer than its size guard.
    #[error("input length {len} exceeds the {guard} limit of {limit}")]
    LimitExceeded {
        guard: &'static str,
        limit: usize,
        len: usize,
    },

    /// Period analysis of the empty string is undefined.
    #[error("empty text has no periods or exponents")]
    EmptyText,
}
