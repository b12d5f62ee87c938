//! Reconstructed answers: positions, content, and exponent bookkeeping.

use crate::domain::ExponentDomain;
use crate::period::PeriodProfile;
use crate::rational::ExactRational;

/// Which search produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    D2,
    D3,
    D4,
    Square,
    Oracle,
}

impl Source {
    pub fn token(self) -> &'static str {
        match self {
            Source::D2 => "d2",
            Source::D3 => "d3",
            Source::D4 => "d4",
            Source::Square => "square",
            Source::Oracle => "oracle",
        }
    }
}

/// A subsequence of the queried text together with the repetition facts
/// that certify it: its minimal period, its maximal exponent, and the
/// exponent that places it in the queried domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepetitionWitness {
    pub length: usize,
    /// 1-based, strictly increasing positions in the original text.
    pub positions: Vec<usize>,
    pub content: Vec<u8>,
    pub min_period: usize,
    pub max_exponent: ExactRational,
    /// First exponent, in increasing period order, that lies in the
    /// queried domain.
    pub domain_exponent: ExactRational,
    pub source: Source,
    /// Split points of the factorization the witness was found under;
    /// empty for whole-text searches.
    pub factor_cuts: Vec<usize>,
}

impl RepetitionWitness {
    /// Builds a witness from reconstructed positions, deriving the period
    /// facts from the extracted content. Panics if the positions are not a
    /// valid non-empty selection or the content has no exponent in
    /// `domain` — both are construction bugs, not input errors.
    pub fn build(
        text: &[u8],
        positions: Vec<usize>,
        source: Source,
        factor_cuts: Vec<usize>,
        domain: ExponentDomain,
    ) -> RepetitionWitness {
        assert!(!positions.is_empty(), "witness positions must be non-empty");
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]), "positions must increase");
        debug_assert!(*positions.last().unwrap() <= text.len(), "positions must fit the text");
        let content: Vec<u8> = positions.iter().map(|&p| text[p - 1]).collect();
        let profile = PeriodProfile::compute(&content).expect("non-empty content");
        let domain_exponent = profile
            .exponent_in(domain)
            .expect("witness content must lie in the queried domain");
        RepetitionWitness {
            length: content.len(),
            positions,
            content,
            min_period: profile.min_period,
            max_exponent: profile.max_exponent,
            domain_exponent,
            source,
            factor_cuts,
        }
    }

    /// Re-derives the domain exponent for a wider domain, keeping
    /// everything else. Used when a sub-search's answer is reported under
    /// the umbrella query it served.
    pub fn with_domain(mut self, domain: ExponentDomain) -> RepetitionWitness {
        let profile = PeriodProfile::compute(&self.content).expect("non-empty content");
        self.domain_exponent = profile
            .exponent_in(domain)
            .expect("witness content must lie in the queried domain");
        self
    }

    /// Checks the witness against the text it claims to come from.
    pub fn matches_text(&self, text: &[u8]) -> bool {
        self.length == self.positions.len()
            && self.length == self.content.len()
            && self.positions.windows(2).all(|w| w[0] < w[1])
            && self.positions.first().is_none_or(|&p| p >= 1)
            && self.positions.last().is_none_or(|&p| p <= text.len())
            && self.positions.iter().zip(&self.content).all(|(&p, &c)| text[p - 1] == c)
    }
}

/// Result of one search: the optimal length, and the witness when
/// reconstruction was requested and the length is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub length: usize,
    pub witness: Option<RepetitionWitness>,
}

impl Answer {
    pub fn empty() -> Answer {
        Answer { length: 0, witness: None }
    }
}
