//! Two-factor dynamic program.
//!
//! For a fixed split `T = YZ`, cell `[y,z]` holds the length of the longest
//! subsequence `UU'` where `U` is a subsequence of `Y[1..y]`, `U'` is a
//! non-empty proper prefix of `U` and a common subsequence of `Y[1..y]` and
//! `Z[1..z]` — or 0 when no such pair exists. Such a string has period `|U|`
//! and exponent `(|U|+|U'|)/|U|`, a non-integer in (1, 2).
//!
//! Cell options, in tie-break order:
//!   1. anchor: `2·L[y−1,z] + 1` — take an LCS `C` of `Y[1..y−1]` and
//!      `Z[1..z]`, set `U = C·Y[y]`, `U' = C` (gated, see [`D2Gate`]);
//!   2. chain: `D2[y−1,z] + 1` when positive — extend `U` by `Y[y]`;
//!   3. copy: `D2[y,z−1]`.
//! Boundary rows/columns (`y = 0` or `z = 0`) are 0.

use crate::lcs::LcsTable;

/// Which LCS cell gates the anchor option.
///
/// `Above` requires `L[y−1,z] > 0`, i.e. exactly that the repeated prefix
/// `U'` is non-empty; this is the sound condition. `Diagonal` requires
/// `L[y−1,z−1] > 0`, a strictly stronger test kept for comparison: it loses
/// witnesses whose `U'` consumes all of `Z[1..z]` (e.g. the text "bab" split
/// after "ba" — see the regression tests).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum D2Gate {
    Above,
    Diagonal,
}

/// Filled two-factor table for one split.
#[derive(Debug, Clone)]
pub struct DpTable2 {
    dims: [usize; 2],
    cells: Vec<u32>,
    gate: D2Gate,
}

/// Fills the table for `T = YZ`; `lcs` must be the table of exactly `(Y, Z)`.
pub fn d2_table(y: &[u8], z: &[u8], lcs: &LcsTable, gate: D2Gate) -> DpTable2 {
    assert_eq!(lcs.dims(), &[y.len() + 1, z.len() + 1], "LCS table dimension mismatch");
    let (ly, lz) = (y.len(), z.len());
    let w = lz + 1;
    let mut cells = vec![0u32; (ly + 1) * w];
    for yy in 1..=ly {
        for zz in 1..=lz {
            let mut v = cells[yy * w + zz - 1];
            let chain = cells[(yy - 1) * w + zz];
            if chain > 0 {
                v = v.max(chain + 1);
            }
            let anchor = lcs.get2(yy - 1, zz);
            let open = match gate {
                D2Gate::Above => anchor > 0,
                D2Gate::Diagonal => lcs.get2(yy - 1, zz - 1) > 0,
            };
            if open {
                v = v.max(2 * anchor + 1);
            }
            cells[yy * w + zz] = v;
        }
    }
    DpTable2 { dims: [ly + 1, lz + 1], cells, gate }
}

impl DpTable2 {
    pub fn get(&self, y: usize, z: usize) -> u32 {
        self.cells[y * self.dims[1] + z]
    }

    pub fn corner(&self) -> u32 {
        *self.cells.last().unwrap()
    }

    pub fn gate(&self) -> D2Gate {
        self.gate
    }

    /// Positions realizing the corner value, as 1-based locals in `Y` (the
    /// `U` part) and in `Z` (the `U'` part). Requires a positive corner.
    ///
    /// The walk re-derives at each cell which listed option attains the
    /// value, first listed winning, so the result is deterministic.
    pub fn traceback(&self, lcs: &LcsTable, y: &[u8], z: &[u8]) -> (Vec<usize>, Vec<usize>) {
        assert_eq!(self.dims, [y.len() + 1, z.len() + 1]);
        assert!(self.corner() > 0, "traceback needs a positive corner");
        let (mut yy, mut zz) = (y.len(), z.len());
        let mut tail: Vec<usize> = Vec::new();
        loop {
            let v = self.get(yy, zz);
            debug_assert!(v > 0 && yy > 0 && zz > 0);
            let anchor = lcs.get2(yy - 1, zz);
            let open = match self.gate {
                D2Gate::Above => anchor > 0,
                D2Gate::Diagonal => lcs.get2(yy - 1, zz - 1) > 0,
            };
            if open && v == 2 * anchor + 1 {
                let w = lcs.witness_at(&[y, z], &[yy - 1, zz]);
                let mut u = w[0].clone();
                u.push(yy);
                u.extend(tail.iter().rev());
                return (u, w[1].clone());
            }
            let chain = self.get(yy - 1, zz);
            if chain > 0 && v == chain + 1 {
                tail.push(yy);
                yy -= 1;
                continue;
            }
            debug_assert!(v == self.get(yy, zz - 1));
            zz -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcs::lcs_table;

    fn table(y: &[u8], z: &[u8], gate: D2Gate) -> DpTable2 {
        let l = lcs_table(&[y, z]).unwrap();
        d2_table(y, z, &l, gate)
    }

    /// The fully worked "abcaaaca" split Y="abcaa", Z="aca".
    #[test]
    fn worked_example_rows() {
        let t = table(b"abcaa", b"aca", D2Gate::Above);
        let row = |z: usize| (1..=5).map(|y| t.get(y, z)).collect::<Vec<_>>();
        assert_eq!(row(1), vec![0, 3, 4, 5, 6]);
        assert_eq!(row(2), vec![0, 3, 4, 5, 6]);
        assert_eq!(row(3), vec![0, 3, 4, 5, 7]);
        assert_eq!(t.corner(), 7);
    }

    #[test]
    fn single_symbol_y_never_scores() {
        let t = table(b"a", b"aaaa", D2Gate::Above);
        for z in 0..=4 {
            assert_eq!(t.get(1, z), 0);
        }
    }

    #[test]
    fn gate_difference_on_bab_split() {
        // Y="ba", Z="b": the witness "bab" needs the anchor at (2,1) where
        // L[1,1] = 0 — the diagonal gate wrongly blocks it.
        assert_eq!(table(b"ba", b"b", D2Gate::Above).get(2, 1), 3);
        assert_eq!(table(b"ba", b"b", D2Gate::Diagonal).get(2, 1), 0);
    }

    #[test]
    fn nonzero_cells_are_at_least_three() {
        for (y, z) in [(&b"abcaa"[..], &b"aca"[..]), (b"abab", b"ab"), (b"aaa", b"aaa")] {
            let t = table(y, z, D2Gate::Above);
            for yy in 0..=y.len() {
                for zz in 0..=z.len() {
                    let v = t.get(yy, zz);
                    assert!(v == 0 || v >= 3);
                }
            }
        }
    }

    #[test]
    fn traceback_of_worked_example() {
        let (y, z): (&[u8], &[u8]) = (b"abcaa", b"aca");
        let l = lcs_table(&[y, z]).unwrap();
        let t = d2_table(y, z, &l, D2Gate::Above);
        let (u, u_prime) = t.traceback(&l, y, z);
        assert_eq!(u, vec![1, 3, 4, 5]);
        assert_eq!(u_prime, vec![1, 2, 3]);
    }

    #[test]
    fn traceback_of_chain_heavy_cell() {
        // Y="abcaaac", Z="a": U = the whole of Y, U' = "a".
        let (y, z): (&[u8], &[u8]) = (b"abcaaac", b"a");
        let l = lcs_table(&[y, z]).unwrap();
        let t = d2_table(y, z, &l, D2Gate::Above);
        assert_eq!(t.corner(), 8);
        let (u, u_prime) = t.traceback(&l, y, z);
        assert_eq!(u, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(u_prime, vec![1]);
    }
}
