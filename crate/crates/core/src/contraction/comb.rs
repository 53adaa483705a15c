//! The identity that turns the metric-contracted σ comb into ε factors:
//! `(σ_μ)_{i1 i2} g^{μν} (σ_ν)_{i3 i4} = ε_{i1 i3} ε_{i4 i2} + ε_{i1 i4} ε_{i3 i2}`
//! with `σ = (1, σx, σy, σz)` and `g = diag(−1, 1, 0, 1)`.

use num_complex::Complex64;

use super::EPSILON;
use crate::state::gates;

const METRIC: [f64; 4] = [-1.0, 1.0, 0.0, 1.0];

/// Left-hand side, by direct matrix arithmetic on the Pauli matrices.
pub fn comb_lhs([i1, i2, i3, i4]: [usize; 4]) -> Complex64 {
    let sigma = [gates::IDENTITY, gates::PAULI_X, gates::PAULI_Y, gates::PAULI_Z];
    sigma
        .iter()
        .zip(METRIC)
        .map(|(s, g)| s[i1][i2] * g * s[i3][i4])
        .sum()
}

pub fn comb_rhs([i1, i2, i3, i4]: [usize; 4]) -> f64 {
    EPSILON[i1][i3] * EPSILON[i4][i2] + EPSILON[i1][i4] * EPSILON[i3][i2]
}

/// Exhaustive, exact check over all sixteen index tuples.
pub fn verify_comb_identity() -> bool {
    (0..16).all(|r| {
        let t = [(r >> 3) & 1, (r >> 2) & 1, (r >> 1) & 1, r & 1];
        comb_lhs(t) == Complex64::new(comb_rhs(t), 0.0)
    })
}
