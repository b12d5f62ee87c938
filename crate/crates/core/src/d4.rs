//! Four-factor dynamic program.
//!
//! For a fixed split `T = WXYZ` (Z may be empty), cell `[w,x,y,z]` holds
//! the length of the longest subsequence `UUUU'` where `U` is non-empty
//! and occurs in each of `W[1..w]`, `X[1..x]`, `Y[1..y]`, and `U'` is a
//! (possibly empty) proper prefix of `U` occurring in `Z[1..z]` — giving
//! period `|U|` and exponent `(3|U|+|U'|)/|U|` in [3, 4). Exponent exactly
//! 4 is out of range here, so unlike the three-factor table the anchor is
//! gated: an un-extended LCS would read as `U' = U`.
//!
//! With `δ = 3` when `W[w] = X[x] = Y[y]` (else 0), cell options in
//! tie-break order:
//!   1. anchor, only when `δ > 0`: `4·L[w−1,x−1,y−1,z] + δ`;
//!   2. chain: `D4[w−1,x−1,y−1,z] + δ` when `δ > 0` and the source is
//!      positive;
//!   3. copy `w−1`;  4. copy `x−1`;  5. copy `y−1`;  6. copy `z−1`.
//! Cells with `w = 0`, `x = 0` or `y = 0` are 0; the `z = 0` layer is
//! computed.

use crate::lcs::LcsTable;

/// Filled four-factor table for one split.
#[derive(Debug, Clone)]
pub struct DpTable4 {
    dims: [usize; 4],
    cells: Vec<u32>,
}

/// Fills the table for `T = WXYZ`; `lcs` must be the table of exactly
/// `(W, X, Y, Z)`.
pub fn d4_table(w: &[u8], x: &[u8], y: &[u8], z: &[u8], lcs: &LcsTable) -> DpTable4 {
    assert_eq!(
        lcs.dims(),
        &[w.len() + 1, x.len() + 1, y.len() + 1, z.len() + 1],
        "LCS table dimension mismatch"
    );
    let (lw, lx, ly, lz) = (w.len(), x.len(), y.len(), z.len());
    let s2 = lz + 1;
    let s1 = (ly + 1) * s2;
    let s0 = (lx + 1) * s1;
    let mut cells = vec![0u32; (lw + 1) * s0];
    for ww in 1..=lw {
        for xx in 1..=lx {
            for yy in 1..=ly {
                let matched = w[ww - 1] == x[xx - 1] && x[xx - 1] == y[yy - 1];
                let base = ww * s0 + xx * s1 + yy * s2;
                for zz in 0..=lz {
                    let mut v = 0;
                    if matched {
                        v = 4 * lcs.get4(ww - 1, xx - 1, yy - 1, zz) + 3;
                        let chain = cells[base - s0 - s1 - s2 + zz];
                        if chain > 0 {
                            v = v.max(chain + 3);
                        }
                    }
                    v = v.max(cells[base - s0 + zz]);
                    v = v.max(cells[base - s1 + zz]);
                    v = v.max(cells[base - s2 + zz]);
                    if zz > 0 {
                        v = v.max(cells[base + zz - 1]);
                    }
                    cells[base + zz] = v;
                }
            }
        }
    }
    DpTable4 { dims: [lw + 1, lx + 1, ly + 1, lz + 1], cells }
}

impl DpTable4 {
    pub fn get(&self, w: usize, x: usize, y: usize, z: usize) -> u32 {
        self.cells[((w * self.dims[1] + x) * self.dims[2] + y) * self.dims[3] + z]
    }

    pub fn corner(&self) -> u32 {
        *self.cells.last().unwrap()
    }

    /// Positions realizing the corner value, as 1-based locals: the three
    /// `U` occurrences in `W`, `X`, `Y`, and the `U'` occurrence in `Z`.
    /// Requires a positive corner. First listed option wins, so the result
    /// is deterministic.
    #[allow(clippy::type_complexity)]
    pub fn traceback(
        &self,
        lcs: &LcsTable,
        w: &[u8],
        x: &[u8],
        y: &[u8],
        z: &[u8],
    ) -> (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>) {
        assert_eq!(self.dims, [w.len() + 1, x.len() + 1, y.len() + 1, z.len() + 1]);
        assert!(self.corner() > 0, "traceback needs a positive corner");
        let (mut ww, mut xx, mut yy, mut zz) = (w.len(), x.len(), y.len(), z.len());
        let mut tails: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        loop {
            let v = self.get(ww, xx, yy, zz);
            debug_assert!(v > 0 && ww > 0 && xx > 0 && yy > 0);
            let matched = w[ww - 1] == x[xx - 1] && x[xx - 1] == y[yy - 1];
            if matched {
                if v == 4 * lcs.get4(ww - 1, xx - 1, yy - 1, zz) + 3 {
                    let wit = lcs.witness_at(&[w, x, y, z], &[ww - 1, xx - 1, yy - 1, zz]);
                    let mut uw = wit[0].clone();
                    let mut ux = wit[1].clone();
                    let mut uy = wit[2].clone();
                    uw.push(ww);
                    ux.push(xx);
                    uy.push(yy);
                    uw.extend(tails[0].iter().rev());
                    ux.extend(tails[1].iter().rev());
                    uy.extend(tails[2].iter().rev());
                    return (uw, ux, uy, wit[3].clone());
                }
                let chain = self.get(ww - 1, xx - 1, yy - 1, zz);
                if chain > 0 && v == chain + 3 {
                    tails[0].push(ww);
                    tails[1].push(xx);
                    tails[2].push(yy);
                    ww -= 1;
                    xx -= 1;
                    yy -= 1;
                    continue;
                }
            }
            if v == self.get(ww - 1, xx, yy, zz) {
                ww -= 1;
            } else if v == self.get(ww, xx - 1, yy, zz) {
                xx -= 1;
            } else if v == self.get(ww, xx, yy - 1, zz) {
                yy -= 1;
            } else {
                debug_assert!(zz > 0 && v == self.get(ww, xx, yy, zz - 1));
                zz -= 1;
            }
        }
    }
}
