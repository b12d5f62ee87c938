//! Three-factor dynamic program.
//!
//! For a fixed split `T = XYZ` (Z may be empty), cell `[x,y,z]` holds the
//! length of the longest subsequence `UUU'` where `U` is non-empty and
//! occurs in both `X[1..x]` and `Y[1..y]`, and `U'` is a (possibly empty)
//! proper prefix of `U` occurring in `Z[1..z]` — giving period `|U|` and
//! exponent `(2|U|+|U'|)/|U|` in [2, 3). Exact cubes (exponent 3) are
//! handled by the caller via the full LCS corner.
//!
//! With `δ = 2` when `X[x] = Y[y]` (else 0), cell options in tie-break
//! order:
//!   1. anchor: `3·L[x−1,y−1,z] + δ` — `U` is an LCS `C` of the three
//!      truncated factors, extended by the matched character when `δ > 0`;
//!   2. chain: `D3[x−1,y−1,z] + δ` when `δ > 0` and the source is positive;
//!   3. copy `x−1`;  4. copy `y−1`;  5. copy `z−1`.
//! Cells with `x = 0` or `y = 0` are 0; the `z = 0` layer is computed.

use crate::lcs::LcsTable;

/// Filled three-factor table for one split.
#[derive(Debug, Clone)]
pub struct DpTable3 {
    dims: [usize; 3],
    cells: Vec<u32>,
}

/// Fills the table for `T = XYZ`; `lcs` must be the table of exactly
/// `(X, Y, Z)`.
pub fn d3_table(x: &[u8], y: &[u8], z: &[u8], lcs: &LcsTable) -> DpTable3 {
    assert_eq!(
        lcs.dims(),
        &[x.len() + 1, y.len() + 1, z.len() + 1],
        "LCS table dimension mismatch"
    );
    let (lx, ly, lz) = (x.len(), y.len(), z.len());
    let (s0, s1) = ((ly + 1) * (lz + 1), lz + 1);
    let mut cells = vec![0u32; (lx + 1) * s0];
    for xx in 1..=lx {
        for yy in 1..=ly {
            let delta = if x[xx - 1] == y[yy - 1] { 2 } else { 0 };
            let base = xx * s0 + yy * s1;
            for zz in 0..=lz {
                let mut v = 3 * lcs.get3(xx - 1, yy - 1, zz) + delta;
                if delta > 0 {
                    let chain = cells[base - s0 - s1 + zz];
                    if chain > 0 {
                        v = v.max(chain + delta);
                    }
                }
                v = v.max(cells[base - s0 + zz]);
                v = v.max(cells[base - s1 + zz]);
                if zz > 0 {
                    v = v.max(cells[base + zz - 1]);
                }
                cells[base + zz] = v;
            }
        }
    }
    DpTable3 { dims: [lx + 1, ly + 1, lz + 1], cells }
}

impl DpTable3 {
    pub fn get(&self, x: usize, y: usize, z: usize) -> u32 {
        self.cells[(x * self.dims[1] + y) * self.dims[2] + z]
    }

    pub fn corner(&self) -> u32 {
        *self.cells.last().unwrap()
    }

    /// Positions realizing the corner value, as 1-based locals: the two `U`
    /// occurrences in `X` and `Y`, and the `U'` occurrence in `Z`. Requires
    /// a positive corner. First listed option wins, so the result is
    /// deterministic.
    pub fn traceback(
        &self,
        lcs: &LcsTable,
        x: &[u8],
        y: &[u8],
        z: &[u8],
    ) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        assert_eq!(self.dims, [x.len() + 1, y.len() + 1, z.len() + 1]);
        assert!(self.corner() > 0, "traceback needs a positive corner");
        let (mut xx, mut yy, mut zz) = (x.len(), y.len(), z.len());
        let (mut tail_x, mut tail_y): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
        loop {
            let v = self.get(xx, yy, zz);
            debug_assert!(v > 0 && xx > 0 && yy > 0);
            let delta = if x[xx - 1] == y[yy - 1] { 2 } else { 0 };
            if v == 3 * lcs.get3(xx - 1, yy - 1, zz) + delta {
                let w = lcs.witness_at(&[x, y, z], &[xx - 1, yy - 1, zz]);
                let mut ux = w[0].clone();
                let mut uy = w[1].clone();
                if delta > 0 {
                    ux.push(xx);
                    uy.push(yy);
                }
                ux.extend(tail_x.iter().rev());
                uy.extend(tail_y.iter().rev());
                return (ux, uy, w[2].clone());
            }
            if delta > 0 {
                let chain = self.get(xx - 1, yy - 1, zz);
                if chain > 0 && v == chain + delta {
                    tail_x.push(xx);
                    tail_y.push(yy);
                    xx -= 1;
                    yy -= 1;
                    continue;
                }
            }
            if v == self.get(xx - 1, yy, zz) {
                xx -= 1;
            } else if v == self.get(xx, yy - 1, zz) {
                yy -= 1;
            } else {
                debug_assert!(zz > 0 && v == self.get(xx, yy, zz - 1));
                zz -= 1;
            }
        }
    }
}
