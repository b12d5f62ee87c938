//! Search drivers: enumerate factorizations, run the per-split tables,
//! and assemble witnesses in original-text coordinates.

use rayon::prelude::*;

use crate::d2::{d2_table, D2Gate};
use crate::d3::d3_table;
use crate::d4::d4_table;
use crate::domain::ExponentDomain;
use crate::error::Error;
use crate::factorization::Factorization;
use crate::lcs::lcs_table;
use crate::witness::{Answer, RepetitionWitness, Source};

/// Input-length guards per driver family. The DP cost grows with the
/// number of factors (roughly n³, n⁵ and n⁷ cell updates in total), so
/// each family gets its own ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub d2: usize,
    pub d3: usize,
    pub d4: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { d2: 2000, d3: 120, d4: 40 }
    }
}

/// Knobs shared by all drivers.
#[derive(Debug, Clone, Copy)]
pub struct DriverOptions {
    /// Reconstruct positions and period facts, not just the length.
    pub reconstruct: bool,
    pub limits: Limits,
    /// Anchor gate for the two-factor table; see [`D2Gate`].
    pub gate: D2Gate,
}

impl Default for DriverOptions {
    fn default() -> Self {
        DriverOptions { reconstruct: false, limits: Limits::default(), gate: D2Gate::Above }
    }
}

fn check_limit(len: usize, limit: usize, guard: &'static str) -> Result<(), Error> {
    if len > limit {
        return Err(Error::LimitExceeded { guard, limit, len });
    }
    Ok(())
}

/// The guard check `run_mode` would apply for `mode` on an input of length
/// `len`, without running anything. Lets callers validate a batch up front.
pub fn check_mode_limits(mode: Mode, len: usize, limits: &Limits) -> Result<(), Error> {
    match mode {
        Mode::NonInt | Mode::Any => check_limit(len, limits.d2, "two-factor driver"),
        Mode::Square => check_limit(len, limits.d2, "square driver"),
        Mode::D3 => check_limit(len, limits.d3, "three-factor driver"),
        Mode::D4 => check_limit(len, limits.d4, "four-factor driver"),
        Mode::Periodic => {
            check_limit(len, limits.d3, "three-factor driver")?;
            check_limit(len, limits.d4, "four-factor driver")
        }
    }
}

/// Keeps the larger value; on equal values, the lexicographically smaller
/// cut tuple. Commutative and associative, so parallel reduction order
/// cannot change the outcome.
fn prefer<C: Ord + Copy>(a: (u32, C), b: (u32, C)) -> (u32, C) {
    match (a.0.cmp(&b.0), a.1.cmp(&b.1)) {
        (std::cmp::Ordering::Greater, _) => a,
        (std::cmp::Ordering::Less, _) => b,
        (_, std::cmp::Ordering::Greater) => b,
        _ => a,
    }
}

/// Longest subsequence with a non-integer exponent: best two-factor table
/// corner over all splits `T = YZ` with both factors non-empty.
pub fn d2_driver(text: &[u8], opts: &DriverOptions) -> Result<Answer, Error> {
    let n = text.len();
    check_limit(n, opts.limits.d2, "two-factor driver")?;
    if n < 2 {
        return Ok(Answer::empty());
    }
    let corner = |b: usize| {
        let (y, z) = (&text[..b], &text[b..]);
        let l = lcs_table(&[y, z]).expect("two factors");
        (d2_table(y, z, &l, opts.gate).corner(), b)
    };
    let (best, cut) = (1..n)
        .into_par_iter()
        .map(corner)
        .reduce(|| (0, usize::MAX), prefer);
    if best == 0 {
        return Ok(Answer::empty());
    }
    if !opts.reconstruct {
        return Ok(Answer { length: best as usize, witness: None });
    }
    let f = Factorization::two(n, cut);
    let (y, z) = (f.factor(text, 0), f.factor(text, 1));
    let l = lcs_table(&[y, z]).expect("two factors");
    let t = d2_table(y, z, &l, opts.gate);
    let (uy, uz) = t.traceback(&l, y, z);
    let positions = assemble(&f, &[&uy, &uz]);
    let w = RepetitionWitness::build(
        text,
        positions,
        Source::D2,
        f.cuts().to_vec(),
        ExponentDomain::NonInteger,
    );
    Ok(Answer { length: best as usize, witness: Some(w) })
}

/// Longest subsequence that is an exact square `DD`: twice the best LCS of
/// a prefix/suffix split.
pub fn longest_square(text: &[u8], opts: &DriverOptions) -> Result<Answer, Error> {
    let n = text.len();
    check_limit(n, opts.limits.d2, "square driver")?;
    if n < 2 {
        return Ok(Answer::empty());
    }
    let half = |b: usize| {
        let l = lcs_table(&[&text[..b], &text[b..]]).expect("two factors");
        (l.corner(), b)
    };
    let (best, cut) = (1..n)
        .into_par_iter()
        .map(half)
        .reduce(|| (0, usize::MAX), prefer);
    if best == 0 {
        return Ok(Answer::empty());
    }
    let length = 2 * best as usize;
    if !opts.reconstruct {
        return Ok(Answer { length, witness: None });
    }
    let f = Factorization::two(n, cut);
    let (y, z) = (f.factor(text, 0), f.factor(text, 1));
    let l = lcs_table(&[y, z]).expect("two factors");
    let w = l.witness_at(&[y, z], &[y.len(), z.len()]);
    let positions = assemble(&f, &[&w[0], &w[1]]);
    let w = RepetitionWitness::build(
        text,
        positions,
        Source::Square,
        f.cuts().to_vec(),
        ExponentDomain::EvenInteger,
    );
    Ok(Answer { length, witness: Some(w) })
}

/// Longest subsequence with an exponent in [2, 3]: best over all splits
/// `T = XYZ` of the three-factor corner and the exact-cube value
/// `3·LCS(X,Y,Z)`, corner preferred on ties.
pub fn d3_driver(text: &[u8], opts: &DriverOptions) -> Result<Answer, Error> {
    let n = text.len();
    check_limit(n, opts.limits.d3, "three-factor driver")?;
    if n < 2 {
        return Ok(Answer::empty());
    }
    let cuts: Vec<(usize, usize)> =
        (1..n).flat_map(|b1| (b1 + 1..=n).map(move |b2| (b1, b2))).collect();
    let value = |&(b1, b2): &(usize, usize)| {
        let f = Factorization::three(n, b1, b2);
        let (x, y, z) = (f.factor(text, 0), f.factor(text, 1), f.factor(text, 2));
        let l = lcs_table(&[x, y, z]).expect("three factors");
        let corner = d3_table(x, y, z, &l).corner();
        (corner.max(3 * l.corner()), (b1, b2))
    };
    let (best, cut) = cuts
        .par_iter()
        .map(value)
        .reduce(|| (0, (usize::MAX, usize::MAX)), prefer);
    if best == 0 {
        return Ok(Answer::empty());
    }
    if !opts.reconstruct {
        return Ok(Answer { length: best as usize, witness: None });
    }
    let f = Factorization::three(n, cut.0, cut.1);
    let (x, y, z) = (f.factor(text, 0), f.factor(text, 1), f.factor(text, 2));
    let l = lcs_table(&[x, y, z]).expect("three factors");
    let t = d3_table(x, y, z, &l);
    let positions = if t.corner() >= 3 * l.corner() {
        let (ux, uy, uz) = t.traceback(&l, x, y, z);
        assemble(&f, &[&ux, &uy, &uz])
    } else {
        let w = l.witness_at(&[x, y, z], &[x.len(), y.len(), z.len()]);
        assemble(&f, &[&w[0], &w[1], &w[2]])
    };
    let w = RepetitionWitness::build(
        text,
        positions,
        Source::D3,
        f.cuts().to_vec(),
        ExponentDomain::SquareToCube,
    );
    Ok(Answer { length: best as usize, witness: Some(w) })
}

/// Longest subsequence with an exponent in [3, 4): best four-factor corner
/// over all splits `T = WXYZ`.
pub fn d4_driver(text: &[u8], opts: &DriverOptions) -> Result<Answer, Error> {
    let n = text.len();
    check_limit(n, opts.limits.d4, "four-factor driver")?;
    if n < 3 {
        return Ok(Answer::empty());
    }
    let cuts: Vec<(usize, usize, usize)> = (1..n)
        .flat_map(|b1| {
            (b1 + 1..n).flat_map(move |b2| (b2 + 1..=n).map(move |b3| (b1, b2, b3)))
        })
        .collect();
    let value = |&(b1, b2, b3): &(usize, usize, usize)| {
        let f = Factorization::four(n, b1, b2, b3);
        let (w, x, y, z) =
            (f.factor(text, 0), f.factor(text, 1), f.factor(text, 2), f.factor(text, 3));
        let l = lcs_table(&[w, x, y, z]).expect("four factors");
        (d4_table(w, x, y, z, &l).corner(), (b1, b2, b3))
    };
    let (best, cut) = cuts
        .par_iter()
        .map(value)
        .reduce(|| (0, (usize::MAX, usize::MAX, usize::MAX)), prefer);
    if best == 0 {
        return Ok(Answer::empty());
    }
    if !opts.reconstruct {
        return Ok(Answer { length: best as usize, witness: None });
    }
    let f = Factorization::four(n, cut.0, cut.1, cut.2);
    let (w, x, y, z) =
        (f.factor(text, 0), f.factor(text, 1), f.factor(text, 2), f.factor(text, 3));
    let l = lcs_table(&[w, x, y, z]).expect("four factors");
    let t = d4_table(w, x, y, z, &l);
    let (uw, ux, uy, uz) = t.traceback(&l, w, x, y, z);
    let positions = assemble(&f, &[&uw, &ux, &uy, &uz]);
    let w = RepetitionWitness::build(
        text,
        positions,
        Source::D4,
        f.cuts().to_vec(),
        ExponentDomain::CubeToFourth,
    );
    Ok(Answer { length: best as usize, witness: Some(w) })
}

/// Longest subsequence with exponent at least 2. Any such string also has
/// an exponent in [2, 3] or [3, 4) — doubling a period halves the exponent
/// until it lands there — so this is the better of the three- and
/// four-factor searches (three preferred on ties).
pub fn longest_periodic(text: &[u8], opts: &DriverOptions) -> Result<Answer, Error> {
    let n = text.len();
    check_limit(n, opts.limits.d3, "three-factor driver")?;
    check_limit(n, opts.limits.d4, "four-factor driver")?;
    let a3 = d3_driver(text, opts)?;
    let a4 = d4_driver(text, opts)?;
    let best = if a3.length >= a4.length { a3 } else { a4 };
    Ok(Answer {
        length: best.length,
        witness: best.witness.map(|w| w.with_domain(ExponentDomain::Periodic)),
    })
}

/// Longest subsequence with any exponent above 1. Odd integer exponents
/// reduce to non-integer ones (doubling the period), so this is the better
/// of the non-integer and exact-square searches (non-integer preferred on
/// ties).
pub fn longest_any_repetition(text: &[u8], opts: &DriverOptions) -> Result<Answer, Error> {
    let n = text.len();
    check_limit(n, opts.limits.d2, "two-factor driver")?;
    let a2 = d2_driver(text, opts)?;
    let asq = longest_square(text, opts)?;
    let best = if a2.length >= asq.length { a2 } else { asq };
    Ok(Answer {
        length: best.length,
        witness: best.witness.map(|w| w.with_domain(ExponentDomain::AnyRepetition)),
    })
}

/// Translates per-factor 1-based locals into original-text positions.
fn assemble(f: &Factorization, locals: &[&Vec<usize>]) -> Vec<usize> {
    assert_eq!(locals.len(), f.arity());
    let mut out = Vec::with_capacity(locals.iter().map(|l| l.len()).sum());
    for (i, part) in locals.iter().enumerate() {
        let off = f.offset(i);
        out.extend(part.iter().map(|p| off + p));
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

/// The search surface exposed to callers, one entry per query domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    NonInt,
    Periodic,
    Square,
    Any,
    D3,
    D4,
}

impl Mode {
    pub fn token(self) -> &'static str {
        match self {
            Mode::NonInt => "nonint",
            Mode::Periodic => "periodic",
            Mode::Square => "square",
            Mode::Any => "any",
            Mode::D3 => "d3",
            Mode::D4 => "d4",
        }
    }

    /// The exponent domain this mode searches.
    pub fn domain(self) -> ExponentDomain {
        match self {
            Mode::NonInt => ExponentDomain::NonInteger,
            Mode::Periodic => ExponentDomain::Periodic,
            Mode::Square => ExponentDomain::EvenInteger,
            Mode::Any => ExponentDomain::AnyRepetition,
            Mode::D3 => ExponentDomain::SquareToCube,
            Mode::D4 => ExponentDomain::CubeToFourth,
        }
    }
}

pub fn run_mode(mode: Mode, text: &[u8], opts: &DriverOptions) -> Result<Answer, Error> {
    match mode {
        Mode::NonInt => d2_driver(text, opts),
        Mode::Periodic => longest_periodic(text, opts),
        Mode::Square => longest_square(text, opts),
        Mode::Any => longest_any_repetition(text, opts),
        Mode::D3 => d3_driver(text, opts),
        Mode::D4 => d4_driver(text, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ExactRational;

    fn raw(text: &str, mode: Mode) -> usize {
        run_mode(mode, text.as_bytes(), &DriverOptions::default()).unwrap().length
    }

    fn full(text: &str, mode: Mode) -> Answer {
        let opts = DriverOptions { reconstruct: true, ..DriverOptions::default() };
        run_mode(mode, text.as_bytes(), &opts).unwrap()
    }

    #[test]
    fn d2_worked_example() {
        let a = full("abcaaaca", Mode::NonInt);
        assert_eq!(a.length, 8);
        let w = a.witness.unwrap();
        assert_eq!(w.positions, vec![1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(w.factor_cuts, vec![7]);
        assert_eq!(w.max_exponent, ExactRational::new(8, 7));
        assert_eq!(w.domain_exponent, ExactRational::new(8, 7));
        assert_eq!(w.source, Source::D2);
    }

    #[test]
    fn d2_split_corners_of_worked_example() {
        // Per-split corners, b = 1..7; the full text wins at the last split.
        let text = b"abcaaaca";
        let corners: Vec<u32> = (1..8)
            .map(|b| {
                let (y, z) = (&text[..b], &text[b..]);
                let l = lcs_table(&[y, z]).unwrap();
                d2_table(y, z, &l, D2Gate::Above).corner()
            })
            .collect();
        assert_eq!(corners, vec![0, 3, 4, 5, 7, 7, 8]);
    }

    #[test]
    fn d2_small_values() {
        assert_eq!(raw("abab", Mode::NonInt), 3);
        assert_eq!(raw("aaaa", Mode::NonInt), 4);
        assert_eq!(raw("ab", Mode::NonInt), 0);
        assert_eq!(raw("a", Mode::NonInt), 0);
        assert_eq!(raw("", Mode::NonInt), 0);
    }

    #[test]
    fn d2_tie_prefers_first_split() {
        // "abab" scores 3 at both b = 2 and b = 3.
        let a = full("abab", Mode::NonInt);
        let w = a.witness.unwrap();
        assert_eq!(w.factor_cuts, vec![2]);
        assert_eq!(w.positions, vec![1, 2, 3]);
        assert_eq!(w.content, b"aba");
    }

    #[test]
    fn d2_gate_changes_bab() {
        let above = DriverOptions::default();
        let diagonal = DriverOptions { gate: D2Gate::Diagonal, ..above };
        assert_eq!(d2_driver(b"bab", &above).unwrap().length, 3);
        assert_eq!(d2_driver(b"bab", &diagonal).unwrap().length, 0);
    }

    #[test]
    fn square_values_and_witness() {
        assert_eq!(raw("aaa", Mode::Square), 2);
        assert_eq!(raw("abcaaaca", Mode::Square), 6);
        let a = full("abab", Mode::Square);
        assert_eq!(a.length, 4);
        let w = a.witness.unwrap();
        assert_eq!(w.positions, vec![1, 2, 3, 4]);
        assert_eq!(w.factor_cuts, vec![2]);
        assert_eq!(w.domain_exponent, ExactRational::integer(2));
    }

    #[test]
    fn d3_values() {
        assert_eq!(raw("ababab", Mode::D3), 6);
        assert_eq!(raw("aa", Mode::D3), 2);
        assert_eq!(raw("aaaa", Mode::D3), 4);
        assert_eq!(raw("abcab", Mode::D3), 4);
        assert_eq!(raw("abababa", Mode::D3), 6);
        assert_eq!(raw("abcdef", Mode::D3), 0);
    }

    #[test]
    fn d3_cube_witness() {
        let a = full("ababab", Mode::D3);
        assert_eq!(a.length, 6);
        let w = a.witness.unwrap();
        assert_eq!(w.positions, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(w.factor_cuts, vec![2, 4]);
        assert_eq!(w.domain_exponent, ExactRational::integer(3));
    }

    #[test]
    fn d4_values_and_witness() {
        assert_eq!(raw("abc", Mode::D4), 0);
        assert_eq!(raw("aaaaaaa", Mode::D4), 7);
        let a = full("abababa", Mode::D4);
        assert_eq!(a.length, 7);
        let w = a.witness.unwrap();
        assert_eq!(w.positions, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(w.factor_cuts, vec![2, 4, 6]);
        assert_eq!(w.domain_exponent, ExactRational::new(7, 2));
        assert_eq!(w.source, Source::D4);
    }

    #[test]
    fn periodic_values() {
        assert_eq!(raw("abcaaaca", Mode::Periodic), 6);
        assert_eq!(raw("aaaaa", Mode::Periodic), 5);
        assert_eq!(raw("abcdef", Mode::Periodic), 0);
        let a = full("abcaaaca", Mode::Periodic);
        let w = a.witness.unwrap();
        assert!(w.matches_text(b"abcaaaca"));
        assert!(w.max_exponent >= ExactRational::integer(2));
        assert!(ExponentDomain::Periodic.contains(w.domain_exponent));
    }

    #[test]
    fn any_values() {
        assert_eq!(raw("abcaaaca", Mode::Any), 8);
        assert_eq!(raw("abab", Mode::Any), 4);
        let a = full("aaa", Mode::Any);
        assert_eq!(a.length, 3);
        assert_eq!(a.witness.unwrap().source, Source::D2);
    }

    #[test]
    fn limits_guard_each_family() {
        let opts = DriverOptions {
            limits: Limits { d2: 4, d3: 4, d4: 4 },
            ..DriverOptions::default()
        };
        let text = b"aaaaa";
        for (mode, guard) in [
            (Mode::NonInt, "two-factor driver"),
            (Mode::Square, "square driver"),
            (Mode::D3, "three-factor driver"),
            (Mode::D4, "four-factor driver"),
            (Mode::Periodic, "three-factor driver"),
            (Mode::Any, "two-factor driver"),
        ] {
            let err = run_mode(mode, text, &opts).unwrap_err();
            assert_eq!(err, Error::LimitExceeded { guard, limit: 4, len: 5 });
        }
    }

    #[test]
    fn no_witness_without_reconstruct() {
        let a = run_mode(Mode::NonInt, b"abcaaaca", &DriverOptions::default()).unwrap();
        assert_eq!(a.length, 8);
        assert!(a.witness.is_none());
    }

    #[test]
    fn mode_tokens_round_trip() {
        let all = [Mode::NonInt, Mode::Periodic, Mode::Square, Mode::Any, Mode::D3, Mode::D4];
        let tokens: Vec<&str> = all.iter().map(|m| m.token()).collect();
        assert_eq!(tokens, vec!["nonint", "periodic", "square", "any", "d3", "d4"]);
    }
}
