//! The finite Weyl group W(C2) of order 8, acting on coweights.
//!
//! Coweights are written in the (eps1, eps2) basis, so every element acts by
//! a fixed 2x2 integer matrix. The two generating reflections are
//! `s1: (m, n) -> (-m, 2m + n)` and `s2: (m, n) -> (m + n, -n)`.

use std::fmt;

/// One of the 8 elements of W(C2), indexed by its canonical word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElt(pub(crate) u8);

pub const W_E: WeylElt = WeylElt(0);
pub const W_S1: WeylElt = WeylElt(1);
pub const W_S2: WeylElt = WeylElt(2);
pub const W_S12: WeylElt = WeylElt(3);
pub const W_S21: WeylElt = WeylElt(4);
pub const W_S121: WeylElt = WeylElt(5);
pub const W_S212: WeylElt = WeylElt(6);
pub const W_S1212: WeylElt = WeylElt(7);

/// All 8 elements in index order.
pub const W_ALL: [WeylElt; 8] = [
    W_E, W_S1, W_S2, W_S12, W_S21, W_S121, W_S212, W_S1212,
];

pub(crate) const W_NAMES: [&str; 8] = ["e", "s1", "s2", "s12", "s21", "s121", "s212", "s1212"];

/// Row-major action matrices on column vectors (m, n).
pub(crate) const W_MAT: [[i64; 4]; 8] = [
    [1, 0, 0, 1],
    [-1, 0, 2, 1],
    [1, 1, 0, -1],
    [-1, -1, 2, 1],
    [1, 1, -2, -1],
    [-1, -1, 0, 1],
    [1, 0, -2, -1],
    [-1, 0, 0, -1],
];

/// Composition table: MUL[i][j] = index of w_i * w_j (so w_i applied after w_j).
const W_MUL: [[u8; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 4, 0, 6, 1, 7, 3, 5],
    [3, 5, 1, 7, 0, 6, 2, 4],
    [4, 2, 6, 0, 7, 1, 5, 3],
    [5, 3, 7, 1, 6, 0, 4, 2],
    [6, 7, 4, 5, 2, 3, 0, 1],
    [7, 6, 5, 4, 3, 2, 1, 0],
];

const W_INV: [u8; 8] = [0, 1, 2, 4, 3, 5, 6, 7];

/// For each w and each positive root alpha (order: a1, a2, a1+a2, a0 = 2a1+a2),
/// the sign of w^{-1}(alpha): `true` when w^{-1}(alpha) is again positive.
pub(crate) const W_INV_ROOT_POS: [[bool; 4]; 8] = [
    [true, true, true, true],
    [false, true, true, true],
    [true, false, true, true],
    [false, true, true, false],
    [true, false, false, true],
    [false, true, false, false],
    [true, false, false, false],
    [false, false, false, false],
];

impl WeylElt {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn name(self) -> &'static str {
        W_NAMES[self.index()]
    }

    pub fn from_name(s: &str) -> Option<WeylElt> {
        W_NAMES.iter().position(|&n| n == s).map(|i| WeylElt(i as u8))
    }

    pub fn compose(self, other: WeylElt) -> WeylElt {
        WeylElt(W_MUL[self.index()][other.index()])
    }

    pub fn inverse(self) -> WeylElt {
        WeylElt(W_INV[self.index()])
    }

    pub fn act(self, m: i64, n: i64) -> (i64, i64) {
        let mat = &W_MAT[self.index()];
        (mat[0] * m + mat[1] * n, mat[2] * m + mat[3] * n)
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
