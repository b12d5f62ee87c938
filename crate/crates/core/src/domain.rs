//! Exponent domains: the sets of rational exponents each search mode targets.

use crate::rational::ExactRational;

/// A set of rational exponents, decided exactly (no floating point).
///
/// The first six variants are the query domains exposed through the search
/// modes and the classification machinery. The last two are the structural
/// domains the three- and four-factor tables compute directly; the exhaustive
/// oracle uses them for differential testing of those drivers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentDomain {
    /// ℚ⁺ \ ℕ — any non-integer exponent.
    NonInteger,
    /// Exponents ≥ 2.
    Periodic,
    /// Even integers {2, 4, 6, …} — exact squares.
    EvenInteger,
    /// (2, 3] ∪ [4, ∞).
    TwoThreeOrFourUp,
    /// ∪ over natural x ≥ 1 of the open intervals (3x, 4x).
    ThreeXToFourX,
    /// Exponents > 1 — any repetition at all.
    AnyRepetition,
    /// [2, 3] — what a double copy plus a prefix of the root can spell.
    SquareToCube,
    /// [3, 4) — what a triple copy plus a proper prefix of the root can spell.
    CubeToFourth,
}

impl ExponentDomain {
    /// Exact membership test for the exponent `e`.
    pub fn contains(&self, e: ExactRational) -> bool {
        let int = ExactRational::integer;
        match self {
            ExponentDomain::NonInteger => !e.is_integer(),
            ExponentDomain::Periodic => e >= int(2),
            ExponentDomain::EvenInteger => e.is_integer() && e.num() % 2 == 0,
            ExponentDomain::TwoThreeOrFourUp => (e > int(2) && e <= int(3)) || e >= int(4),
            ExponentDomain::ThreeXToFourX => {
                // Some integer x ≥ 1 with 3x < e < 4x, i.e. x within the open
                // interval (e/4, e/3). The smallest integer above e/4 is the
                // only candidate that can work.
                let x = (e.num() / (4 * e.den())) + 1;
                (3 * x) as u128 * u128::from(e.den()) < u128::from(e.num())
            }
            ExponentDomain::AnyRepetition => e > int(1),
            ExponentDomain::SquareToCube => e >= int(2) && e <= int(3),
            ExponentDomain::CubeToFourth => e >= int(3) && e < int(4),
        }
    }
}
