//! Periods, exponents and repetition classification of byte strings.
//!
//! `p` is a period of `S` when `S[i] = S[i+p]` for every valid `i` (1-based).
//! Every `p` in `[1, |S|]` is tested against that definition; the length
//! itself is always a period. The exponent of `S` with respect to `p` is the
//! exact rational `|S| / p`, so the set of exponents of `S` is in bijection
//! with its set of periods.
//!
//! Periods are recovered from the border structure: `p` is a period iff
//! `|S| - p` is the length of a border (a string that is both a proper prefix
//! and a suffix), and the border lengths are exactly the iterates of the
//! failure function at `|S|`. Debug builds cross-check the result against the
//! sliding-equality definition.

use crate::domain::ExponentDomain;
use crate::error::Error;
use crate::rational::ExactRational;

/// Classification of a string by its maximal exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Maximal exponent ≥ 2.
    Periodic,
    /// Maximal exponent strictly between 1 and 2.
    SubPeriodic,
    /// Maximal exponent exactly 1 (no repetition structure at all).
    Neither,
}

impl Classification {
    /// Stable lowercase token used in CLI output.
    pub fn token(&self) -> &'static str {
        match self {
            Classification::Periodic => "periodic",
            Classification::SubPeriodic => "sub-periodic",
            Classification::Neither => "neither",
        }
    }
}

/// The full period/exponent structure of one non-empty string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodProfile {
    pub length: usize,
    /// All periods, ascending; always ends with `length`.
    pub periods: Vec<usize>,
    /// Smallest period; `length - minPeriod` is the longest border length.
    pub min_period: usize,
    /// `length / p` for each period, aligned with `periods` (so descending).
    pub exponents: Vec<ExactRational>,
    /// `length / min_period`.
    pub max_exponent: ExactRational,
}

impl PeriodProfile {
    /// Computes the profile of `s`. Errors on the empty string.
    pub fn compute(s: &[u8]) -> Result<Self, Error> {
        if s.is_empty() {
            return Err(Error::EmptyText);
        }
        let periods = periods(s);
        let min_period = periods[0];
        let length = s.len();
        let exponents: Vec<ExactRational> = periods
            .iter()
            .map(|&p| ExactRational::new(length as u64, p as u64))
            .collect();
        let max_exponent = exponents[0];
        Ok(PeriodProfile {
            length,
            periods,
            min_period,
            exponents,
            max_exponent,
        })
    }

    /// The largest exponent lying in `d`, if any (periods scanned ascending,
    /// so exponents are tried from the largest down).
    pub fn exponent_in(&self, d: ExponentDomain) -> Option<ExactRational> {
        self.exponents.iter().copied().find(|&e| d.contains(e))
    }
}

/// Longest-proper-border lengths: `f[i]` is the longest border of `s[..=i]`.
pub fn failure_function(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut f = vec![0usize; n];
    for i in 1..n {
        let mut k = f[i - 1];
        while k > 0 && s[i] != s[k] {
            k = f[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        f[i] = k;
    }
    f
}

/// All periods of `s`, ascending. Empty input yields the empty set.
pub fn periods(s: &[u8]) -> Vec<usize> {
    if s.is_empty() {
        return Vec::new();
    }
    let n = s.len();
    let f = failure_function(s);
    // Border lengths of s are f[n-1], f[f[n-1]-1], …, down to 0; the periods
    // are n minus each of them, which comes out ascending.
    let mut out = Vec::new();
    let mut b = f[n - 1];
    while b > 0 {
        out.push(n - b);
        b = f[b - 1];
    }
    out.push(n);
    debug_assert!(
        s.len() > 512 || out == periods_by_definition(s),
        "border-derived periods disagree with the sliding-equality definition"
    );
    out
}

/// Sliding-equality definition of the period set; quadratic reference route.
fn periods_by_definition(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    (1..=n)
        .filter(|&p| (0..n - p).all(|i| s[i] == s[i + p]))
        .collect()
}

/// Maximal exponent of `s` together with its minimal period.
pub fn max_exponent(s: &[u8]) -> Result<(ExactRational, usize), Error> {
    let profile = PeriodProfile::compute(s)?;
    Ok((profile.max_exponent, profile.min_period))
}

/// Classifies `s` as periodic (max exponent ≥ 2), sub-periodic (in (1,2)) or
/// neither (exactly 1). Errors on the empty string.
pub fn classify(s: &[u8]) -> Result<Classification, Error> {
    let (e, _) = max_exponent(s)?;
    let two = ExactRational::integer(2);
    let one = ExactRational::integer(1);
    Ok(if e >= two {
        Classification::Periodic
    } else if e > one {
        Classification::SubPeriodic
    } else {
        Classification::Neither
    })
}

/// True when some exponent of `s` lies in `d`. The empty string has no
/// exponents, so it is in no domain.
pub fn in_domain(s: &[u8], d: ExponentDomain) -> bool {
    let n = s.len() as u64;
    periods(s)
        .into_iter()
        .any(|p| d.contains(ExactRational::new(n, p as u64)))
}
