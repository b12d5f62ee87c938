//! Factorizations of a text into 2, 3 or 4 contiguous factors.
//!
//! A factorization is described by its strictly increasing cut positions:
//! cut `b` ends a factor after global position `b`. Every factor except the
//! last must be non-empty; the last may be empty (a witness whose final
//! position is `n` forces an empty trailing factor).

/// One way of splitting `T[1..n]` into consecutive factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    cuts: Vec<usize>,
}

impl Factorization {
    /// Two factors `Y = T[1..b]`, `Z = T[b+1..n]`.
    pub fn two(n: usize, b: usize) -> Self {
        Self::new(n, vec![b])
    }

    /// Three factors with cuts `b1 < b2`; the third may be empty (`b2 = n`).
    pub fn three(n: usize, b1: usize, b2: usize) -> Self {
        Self::new(n, vec![b1, b2])
    }

    /// Four factors with cuts `b1 < b2 < b3`; the fourth may be empty.
    pub fn four(n: usize, b1: usize, b2: usize, b3: usize) -> Self {
        Self::new(n, vec![b1, b2, b3])
    }

    fn new(n: usize, cuts: Vec<usize>) -> Self {
        assert!(!cuts.is_empty() && cuts.len() <= 3);
        assert!(cuts[0] >= 1, "first factor must be non-empty");
        assert!(cuts.windows(2).all(|w| w[0] < w[1]), "non-last factors must be non-empty");
        assert!(*cuts.last().unwrap() <= n, "cuts must stay inside the text");
        Factorization { n, cuts }
    }

    /// Number of factors (2, 3 or 4).
    pub fn arity(&self) -> usize {
        self.cuts.len() + 1
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    /// The `i`-th factor (0-based) of `text`.
    pub fn factor<'a>(&self, text: &'a [u8], i: usize) -> &'a [u8] {
        assert_eq!(text.len(), self.n);
        let start = self.offset(i);
        let end = if i == self.cuts.len() { self.n } else { self.cuts[i] };
        &text[start..end]
    }

    /// Global offset of factor `i`: local 1-based position `p` inside the
    /// factor sits at global position `offset(i) + p`.
    pub fn offset(&self, i: usize) -> usize {
        assert!(i <= self.cuts.len());
        if i == 0 {
            0
        } else {
            self.cuts[i - 1]
        }
    }
}
