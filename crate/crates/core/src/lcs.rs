//! Prefix LCS tables for 2, 3 or 4 strings.
//!
//! `L[i1,…,ik]` is the length of the longest common subsequence of the
//! prefixes `S1[1..i1], …, Sk[1..ik]` (1-based; index 0 means the empty
//! prefix). The table is stored flat, row-major with the last coordinate
//! fastest, and filled by the standard recurrence: when all k current
//! symbols are equal the diagonal predecessor plus one wins outright,
//! otherwise the maximum over dropping one coordinate.

use crate::error::Error;

/// A filled k-dimensional prefix LCS table (k ∈ {2,3,4}).
#[derive(Debug, Clone)]
pub struct LcsTable {
    dims: Vec<usize>,
    strides: Vec<usize>,
    cells: Vec<u32>,
}

/// Builds the full prefix LCS table of 2 to 4 strings.
pub fn lcs_table(strings: &[&[u8]]) -> Result<LcsTable, Error> {
    let k = strings.len();
    if !(2..=4).contains(&k) {
        return Err(Error::UnsupportedArity(k));
    }
    let dims: Vec<usize> = strings.iter().map(|s| s.len() + 1).collect();
    let mut strides = vec![1usize; k];
    for i in (0..k - 1).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let cells = vec![0u32; dims.iter().product()];
    let mut t = LcsTable { dims, strides, cells };
    match k {
        2 => t.fill2(strings[0], strings[1]),
        3 => t.fill3(strings[0], strings[1], strings[2]),
        _ => t.fill4(strings[0], strings[1], strings[2], strings[3]),
    }
    Ok(t)
}

impl LcsTable {
    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    /// Prefix-length bounds per coordinate (string length + 1 each).
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Value at an arbitrary coordinate tuple.
    pub fn at(&self, idx: &[usize]) -> u32 {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut off = 0;
        for (i, &c) in idx.iter().enumerate() {
            debug_assert!(c < self.dims[i]);
            off += c * self.strides[i];
        }
        self.cells[off]
    }

    #[inline]
    pub fn get2(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.strides[0] + j]
    }

    #[inline]
    pub fn get3(&self, i: usize, j: usize, k: usize) -> u32 {
        self.cells[i * self.strides[0] + j * self.strides[1] + k]
    }

    #[inline]
    pub fn get4(&self, i: usize, j: usize, k: usize, l: usize) -> u32 {
        self.cells[i * self.strides[0] + j * self.strides[1] + k * self.strides[2] + l]
    }

    /// LCS length of all full strings.
    pub fn corner(&self) -> u32 {
        *self.cells.last().expect("table is never empty")
    }

    fn fill2(&mut self, a: &[u8], b: &[u8]) {
        let w = self.strides[0];
        for i in 1..self.dims[0] {
            let ai = a[i - 1];
            for j in 1..self.dims[1] {
                self.cells[i * w + j] = if ai == b[j - 1] {
                    self.cells[(i - 1) * w + j - 1] + 1
                } else {
                    self.cells[(i - 1) * w + j].max(self.cells[i * w + j - 1])
                };
            }
        }
    }

    fn fill3(&mut self, a: &[u8], b: &[u8], c: &[u8]) {
        let (s0, s1) = (self.strides[0], self.strides[1]);
        for i in 1..self.dims[0] {
            let ai = a[i - 1];
            for j in 1..self.dims[1] {
                let bj = b[j - 1];
                let base = i * s0 + j * s1;
                for k in 1..self.dims[2] {
                    self.cells[base + k] = if ai == bj && bj == c[k - 1] {
                        self.cells[base - s0 - s1 + k - 1] + 1
                    } else {
                        self.cells[base - s0 + k]
                            .max(self.cells[base - s1 + k])
                            .max(self.cells[base + k - 1])
                    };
                }
            }
        }
    }

    fn fill4(&mut self, a: &[u8], b: &[u8], c: &[u8], d: &[u8]) {
        let (s0, s1, s2) = (self.strides[0], self.strides[1], self.strides[2]);
        for i in 1..self.dims[0] {
            let ai = a[i - 1];
            for j in 1..self.dims[1] {
                let bj = b[j - 1];
                for k in 1..self.dims[2] {
                    let ck = c[k - 1];
                    let base = i * s0 + j * s1 + k * s2;
                    for l in 1..self.dims[3] {
                        self.cells[base + l] = if ai == bj && bj == ck && ck == d[l - 1] {
                            self.cells[base - s0 - s1 - s2 + l - 1] + 1
                        } else {
                            self.cells[base - s0 + l]
                                .max(self.cells[base - s1 + l])
                                .max(self.cells[base - s2 + l])
                                .max(self.cells[base + l - 1])
                        };
                    }
                }
            }
        }
    }

    /// One LCS witness ending at coordinate tuple `at`, as per-string
    /// position lists (1-based, ascending, each of length `self.at(at)`).
    ///
    /// The walk is deterministic: when all current symbols are equal the
    /// match is taken; otherwise the first coordinate whose decrement
    /// preserves the cell value is dropped.
    pub fn witness_at(&self, strings: &[&[u8]], at: &[usize]) -> Vec<Vec<usize>> {
        let k = self.dims.len();
        debug_assert_eq!(strings.len(), k);
        debug_assert!(strings.iter().zip(&self.dims).all(|(s, &d)| s.len() + 1 == d));
        let mut pos = vec![Vec::new(); k];
        let mut v: Vec<usize> = at.to_vec();
        while v.iter().all(|&c| c > 0) {
            let cur = self.at(&v);
            if cur == 0 {
                break;
            }
            let first = strings[0][v[0] - 1];
            if (1..k).all(|j| strings[j][v[j] - 1] == first) {
                for j in 0..k {
                    pos[j].push(v[j]);
                    v[j] -= 1;
                }
            } else {
                let j = (0..k)
                    .find(|&j| {
                        v[j] -= 1;
                        let keeps = self.at(&v) == cur;
                        v[j] += 1;
                        keeps
                    })
                    .expect("some drop preserves a non-match cell value");
                v[j] -= 1;
            }
        }
        for p in &mut pos {
            p.reverse();
        }
        pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_string_values() {
        let t = lcs_table(&[b"abca", b"aca"]).unwrap();
        assert_eq!(t.corner(), 3);
        let t = lcs_table(&[b"abcbdab", b"bdcaba"]).unwrap();
        assert_eq!(t.corner(), 4);
        let t = lcs_table(&[b"abc", b"def"]).unwrap();
        assert_eq!(t.corner(), 0);
    }

    #[test]
    fn empty_string_gives_all_zero() {
        let t = lcs_table(&[b"", b"xyz"]).unwrap();
        for i in 0..t.dims()[0] {
            for j in 0..t.dims()[1] {
                assert_eq!(t.get2(i, j), 0);
            }
        }
    }

    #[test]
    fn three_and_four_string_values() {
        let t = lcs_table(&[b"ab", b"ab", b"ab"]).unwrap();
        assert_eq!(t.corner(), 2);
        // Only "cd" is common to all three.
        let t = lcs_table(&[b"abcd", b"bcda", b"cdab"]).unwrap();
        assert_eq!(t.corner(), 2);
        let t = lcs_table(&[b"ab", b"ab", b"ab", b"a"]).unwrap();
        assert_eq!(t.corner(), 1);
        let t = lcs_table(&[b"abab", b"baba", b"abba", b"baab"]).unwrap();
        assert_eq!(t.corner(), 2);
    }

    #[test]
    fn arity_guard() {
        assert_eq!(lcs_table(&[]).unwrap_err(), Error::UnsupportedArity(0));
        assert_eq!(lcs_table(&[b"a".as_slice()]).unwrap_err(), Error::UnsupportedArity(1));
        let five = [b"a".as_slice(); 5];
        assert_eq!(lcs_table(&five).unwrap_err(), Error::UnsupportedArity(5));
    }

    #[test]
    fn witness_spells_a_common_subsequence() {
        let strings: [&[u8]; 2] = [b"abcbdab", b"bdcaba"];
        let t = lcs_table(&strings).unwrap();
        let dims: Vec<usize> = strings.iter().map(|s| s.len()).collect();
        let w = t.witness_at(&strings, &dims);
        assert_eq!(w[0].len(), 4);
        assert_eq!(w[1].len(), 4);
        let s0: Vec<u8> = w[0].iter().map(|&p| strings[0][p - 1]).collect();
        let s1: Vec<u8> = w[1].iter().map(|&p| strings[1][p - 1]).collect();
        assert_eq!(s0, s1);
        assert!(w[0].windows(2).all(|ab| ab[0] < ab[1]));
    }

    #[test]
    fn witness_walk_is_deterministic() {
        // "ab" vs "ba": both "a" and "b" are maximal; dropping the first
        // coordinate first lands on the match of 'a' at positions (1, 2).
        let strings: [&[u8]; 2] = [b"ab", b"ba"];
        let t = lcs_table(&strings).unwrap();
        let w = t.witness_at(&strings, &[2, 2]);
        assert_eq!(w, vec![vec![1], vec![2]]);
    }

    #[test]
    fn witness_at_interior_cell() {
        // Anchor-style retrace: LCS of "abca" (prefix of "abcaa") and "aca".
        let strings: [&[u8]; 2] = [b"abcaa", b"aca"];
        let t = lcs_table(&strings).unwrap();
        assert_eq!(t.get2(4, 3), 3);
        let w = t.witness_at(&strings, &[4, 3]);
        assert_eq!(w, vec![vec![1, 3, 4], vec![1, 2, 3]]);
    }
}
