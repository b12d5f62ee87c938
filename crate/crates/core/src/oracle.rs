//! Exhaustive subset oracle: ground truth for the dynamic programs.
//!
//! Enumerates every non-empty subsequence of the text and keeps the longest
//! whose exponent set meets the requested domain. Exponential, so it is
//! guarded at [`ORACLE_MAX_LEN`]; it exists to validate the polynomial
//! algorithms, not to be fast.

use crate::domain::ExponentDomain;
use crate::error::Error;
use crate::period;

/// Largest text length the oracle accepts (2^22 subsets is the practical cap).
pub const ORACLE_MAX_LEN: usize = 22;

/// Outcome of an oracle search. `positions` are 1-based indices into the
/// text, ascending; empty (with `length == 0`) when no subsequence qualifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub length: usize,
    pub positions: Vec<usize>,
    pub string: Vec<u8>,
}

/// Longest subsequence of `text` with some exponent in `d`, by brute force.
///
/// Subsets are scanned as bitmasks in increasing numeric order, bit `i`
/// selecting position `i + 1`; a later subset replaces the incumbent only
/// when strictly longer, so the reported witness is the first maximum in
/// that order.
pub fn oracle_longest(text: &[u8], d: ExponentDomain) -> Result<OracleResult, Error> {
    if text.len() > ORACLE_MAX_LEN {
        return Err(Error::LimitExceeded {
            guard: "oracle",
            limit: ORACLE_MAX_LEN,
            len: text.len(),
        });
    }
    let n = text.len();
    let mut best_len = 0usize;
    let mut best_mask = 0u32;
    let mut buf = Vec::with_capacity(n);
    for mask in 1u32..(1u32 << n) {
        let len = mask.count_ones() as usize;
        if len <= best_len {
            continue;
        }
        buf.clear();
        for i in 0..n {
            if mask >> i & 1 == 1 {
                buf.push(text[i]);
            }
        }
        if period::in_domain(&buf, d) {
            best_len = len;
            best_mask = mask;
        }
    }
    let positions: Vec<usize> = (0..n).filter(|i| best_mask >> i & 1 == 1).map(|i| i + 1).collect();
    let string: Vec<u8> = positions.iter().map(|&p| text[p - 1]).collect();
    Ok(OracleResult {
        length: best_len,
        positions,
        string,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_lengths() {
        let cases: &[(&[u8], ExponentDomain, usize)] = &[
            (b"abcaaaca", ExponentDomain::Periodic, 6),
            (b"abcaaaca", ExponentDomain::NonInteger, 8),
            (b"abab", ExponentDomain::AnyRepetition, 4),
            (b"abcdef", ExponentDomain::Periodic, 0),
            (b"aaaa", ExponentDomain::EvenInteger, 4),
            (b"aaaa", ExponentDomain::CubeToFourth, 3),
            (b"aaaa", ExponentDomain::SquareToCube, 4),
        ];
        for &(text, d, want) in cases {
            let got = oracle_longest(text, d).unwrap();
            assert_eq!(got.length, want, "text {text:?} domain {d:?}");
            assert_eq!(got.positions.len(), got.length);
        }
    }

    #[test]
    fn first_maximum_in_mask_order_wins() {
        // "aa" (mask 0b0011) and "bb" (mask 0b1100) both qualify at length 2;
        // the numerically smaller mask is reported.
        let r = oracle_longest(b"aabb", ExponentDomain::AnyRepetition).unwrap();
        assert_eq!(r.length, 2);
        assert_eq!(r.positions, vec![1, 2]);
        assert_eq!(r.string, b"aa");
    }

    #[test]
    fn positions_are_one_based_ascending() {
        let r = oracle_longest(b"aba", ExponentDomain::NonInteger).unwrap();
        assert_eq!(r.length, 3);
        assert_eq!(r.positions, vec![1, 2, 3]);
        assert_eq!(r.string, b"aba");
    }

    #[test]
    fn empty_text_yields_zero() {
        let r = oracle_longest(b"", ExponentDomain::AnyRepetition).unwrap();
        assert_eq!(r.length, 0);
        assert!(r.positions.is_empty());
        assert!(r.string.is_empty());
    }

    #[test]
    fn length_guard() {
        let text = vec![b'a'; ORACLE_MAX_LEN + 1];
        assert_eq!(
            oracle_longest(&text, ExponentDomain::AnyRepetition),
            Err(Error::LimitExceeded {
                guard: "oracle",
                limit: ORACLE_MAX_LEN,
                len: ORACLE_MAX_LEN + 1,
            })
        );
    }

    #[test]
    fn witness_exponent_is_in_domain() {
        for d in [
            ExponentDomain::NonInteger,
            ExponentDomain::SquareToCube,
            ExponentDomain::CubeToFourth,
        ] {
            let r = oracle_longest(b"abacabad", d).unwrap();
            if r.length > 0 {
                assert!(period::in_domain(&r.string, d), "domain {d:?}");
            }
        }
    }
}
