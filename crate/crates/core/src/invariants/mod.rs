//! The seven algebraic invariants `H`, `L`, `M`, `N`, `Dxt`, `Dxy`, `Dxz`.
//!
//! All values come from closed-form determinant formulas in the amplitudes
//! `a_r`, `r = 8i + 4j + 2k + l`. Under a local operator quartet `G` an
//! invariant of degree `d` picks up the factor `(det G1 · det G2 · det G3 ·
//! det G4)^{d/2}`; for `SL(2)⁴` it is unchanged.

mod det;
mod identities;
mod table;

use num_complex::Complex64;

use crate::state::FourQubitState;

pub use det::{det3, det4};
pub use identities::{check_identities, cross_check_tensor, cross_check_tensor_with};
pub use table::{decompose, permuted_invariants, TRANSPOSITIONS};

/// `H = ½ Σ A A εεεε`, evaluated as the sixteen-term sum over
/// complementary index pairs.
pub fn compute_h(state: &FourQubitState) -> Complex64 {
    let a = state.amps();
    // ε_{b,1−b} is +1 for b = 0 and −1 for b = 1, one factor per slot.
    let sum: Complex64 = (0..16)
        .map(|r: usize| {
            let sign = if r.count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
            a[r] * a[15 - r] * sign
        })
        .sum();
    sum * 0.5
}

/// The three 4×4 determinants `(L, M, N)`.
pub fn compute_lmn(state: &FourQubitState) -> (Complex64, Complex64, Complex64) {
    let a = state.amps();
    let grid = |idx: [[usize; 4]; 4]| det4(&idx.map(|row| row.map(|r| a[r])));
    let l = grid([[0, 4, 8, 12], [1, 5, 9, 13], [2, 6, 10, 14], [3, 7, 11, 15]]);
    let m = grid([[0, 8, 2, 10], [1, 9, 3, 11], [4, 12, 6, 14], [5, 13, 7, 15]]);
    let n = grid([[0, 1, 8, 9], [2, 3, 10, 11], [4, 5, 12, 13], [6, 7, 14, 15]]);
    (l, m, n)
}

/// Signed sum of amplitude products; `(+1, [p, q])` stands for `+a_p a_q`.
fn quad(a: &[Complex64; 16], terms: &[(f64, [usize; 2])]) -> Complex64 {
    terms.iter().map(|&(s, [p, q])| a[p] * a[q] * s).sum()
}

/// The three 3×3 determinants `(Dxt, Dxy, Dxz)` with quadratic entries.
pub fn compute_d(state: &FourQubitState) -> (Complex64, Complex64, Complex64) {
    let a = state.amps();
    let e = |t: &[(f64, [usize; 2])]| quad(a, t);
    const P: f64 = 1.0;
    const M: f64 = -1.0;

    let dxt = det3(&[
        [
            e(&[(P, [0, 6]), (M, [2, 4])]),
            e(&[(P, [0, 7]), (P, [1, 6]), (M, [2, 5]), (M, [3, 4])]),
            e(&[(P, [1, 7]), (M, [3, 5])]),
        ],
        [
            e(&[(P, [0, 14]), (P, [8, 6]), (M, [2, 12]), (M, [4, 10])]),
            e(&[
                (P, [0, 15]),
                (P, [6, 9]),
                (P, [1, 14]),
                (P, [7, 8]),
                (M, [2, 13]),
                (M, [4, 11]),
                (M, [3, 12]),
                (M, [5, 10]),
            ]),
            e(&[(P, [1, 15]), (P, [7, 9]), (M, [3, 13]), (M, [5, 11])]),
        ],
        [
            e(&[(P, [8, 14]), (M, [10, 12])]),
            e(&[(P, [8, 15]), (P, [9, 14]), (M, [10, 13]), (M, [11, 12])]),
            e(&[(P, [9, 15]), (M, [11, 13])]),
        ],
    ]);

    let dxy = det3(&[
        [
            e(&[(P, [0, 3]), (M, [1, 2])]),
            e(&[(P, [0, 7]), (P, [3, 4]), (M, [2, 5]), (M, [1, 6])]),
            e(&[(P, [4, 7]), (M, [5, 6])]),
        ],
        [
            e(&[(P, [0, 11]), (P, [3, 8]), (M, [2, 9]), (M, [1, 10])]),
            e(&[
                (P, [0, 15]),
                (P, [3, 12]),
                (P, [4, 11]),
                (P, [7, 8]),
                (M, [2, 13]),
                (M, [1, 14]),
                (M, [6, 9]),
                (M, [5, 10]),
            ]),
            e(&[(P, [4, 15]), (P, [7, 12]), (M, [6, 13]), (M, [5, 14])]),
        ],
        [
            e(&[(P, [8, 11]), (M, [9, 10])]),
            e(&[(P, [8, 15]), (P, [11, 12]), (M, [10, 13]), (M, [9, 14])]),
            e(&[(P, [12, 15]), (M, [13, 14])]),
        ],
    ]);

    let dxz = det3(&[
        [
            e(&[(P, [0, 5]), (M, [1, 4])]),
            e(&[(P, [0, 7]), (P, [2, 5]), (M, [1, 6]), (M, [3, 4])]),
            e(&[(P, [2, 7]), (M, [3, 6])]),
        ],
        [
            e(&[(P, [0, 13]), (P, [5, 8]), (M, [1, 12]), (M, [4, 9])]),
            e(&[
                (P, [0, 15]),
                (P, [5, 10]),
                (P, [2, 13]),
                (P, [7, 8]),
                (M, [1, 14]),
                (M, [4, 11]),
                (M, [3, 12]),
                (M, [6, 9]),
            ]),
            e(&[(P, [2, 15]), (P, [7, 10]), (M, [3, 14]), (M, [6, 11])]),
        ],
        [
            e(&[(P, [8, 13]), (M, [9, 12])]),
            e(&[(P, [8, 15]), (P, [10, 13]), (M, [9, 14]), (M, [11, 12])]),
            e(&[(P, [10, 15]), (M, [11, 14])]),
        ],
    ]);

    (dxt, dxy, dxz)
}

/// The seven invariants of one state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantSet {
    pub h: Complex64,
    pub l: Complex64,
    pub m: Complex64,
    pub n: Complex64,
    pub dxt: Complex64,
    pub dxy: Complex64,
    pub dxz: Complex64,
}

impl InvariantSet {
    pub const NAMES: [&'static str; 7] = ["H", "L", "M", "N", "Dxt", "Dxy", "Dxz"];
    /// Homogeneity degrees, in [`InvariantSet::NAMES`] order.
    pub const DEGREES: [i32; 7] = [2, 4, 4, 4, 6, 6, 6];

    pub fn of(state: &FourQubitState) -> Self {
        let (l, m, n) = compute_lmn(state);
        let (dxt, dxy, dxz) = compute_d(state);
        Self {
            h: compute_h(state),
            l,
            m,
            n,
            dxt,
            dxy,
            dxz,
        }
    }

    pub fn to_array(&self) -> [Complex64; 7] {
        [self.h, self.l, self.m, self.n, self.dxt, self.dxy, self.dxz]
    }

    pub fn from_array([h, l, m, n, dxt, dxy, dxz]: [Complex64; 7]) -> Self {
        Self { h, l, m, n, dxt, dxy, dxz }
    }

    /// `Dxt + Dxy + Dxz`, the permutation-invariant sum of the sextics.
    pub fn d_sum(&self) -> Complex64 {
        self.dxt + self.dxy + self.dxz
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (name, v) in Self::NAMES.iter().zip(self.to_array()) {
            map.insert((*name).into(), crate::report::json_complex(v));
        }
        serde_json::Value::Object(map)
    }
}

/// Shorthand for [`InvariantSet::of`].
pub fn invariant_set(state: &FourQubitState) -> InvariantSet {
    InvariantSet::of(state)
}
