//! Exact reduced rationals for exponent arithmetic.
//!
//! Domain boundaries such as "exponent in (2,3]" are decided at rationals, so
//! everything here is integer arithmetic; no floating point is involved.

use std::cmp::Ordering;
use std::fmt;

/// A non-negative rational kept in lowest terms (`gcd(num, den) = 1`, `den ≥ 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactRational {
    num: u64,
    den: u64,
}

impl ExactRational {
    /// Builds `num/den` reduced to lowest terms. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        let g = gcd(num, den);
        ExactRational {
            num: num / g,
            den: den / g,
        }
    }

    /// The integer `n` as a rational `n/1`.
    pub fn integer(n: u64) -> Self {
        ExactRational { num: n, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// True when the reduced denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiply in u128: values here are string-length ratios, far
        // below overflow range even before widening.
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}
