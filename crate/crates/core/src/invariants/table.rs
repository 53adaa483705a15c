//! How the invariants transform when two slots are exchanged.


use super::InvariantSet;
use crate::state::QubitPermutation;

/// The six transpositions (1-based slots). Rows come in pairs with
/// identical action: `1↔2 ~ 3↔4`, `1↔3 ~ 2↔4`, `1↔4 ~ 2↔3`.
pub const TRANSPOSITIONS: [(usize, usize); 6] = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)];

/// Source index and sign for each component of the transformed set, in
/// [`InvariantSet::NAMES`] order.
type Row = [(usize, f64); 7];

const H: usize = 0;
const L: usize = 1;
const M: usize = 2;
const N: usize = 3;
const DXT: usize = 4;
const DXY: usize = 5;
const DXZ: usize = 6;

const SWAP_12_34: Row = [(H, 1.0), (L, -1.0), (N, -1.0), (M, -1.0), (DXZ, 1.0), (DXY, 1.0), (DXT, 1.0)];
const SWAP_13_24: Row = [(H, 1.0), (N, -1.0), (M, -1.0), (L, -1.0), (DXY, 1.0), (DXT, 1.0), (DXZ, 1.0)];
const SWAP_14_23: Row = [(H, 1.0), (M, -1.0), (L, -1.0), (N, -1.0), (DXT, 1.0), (DXZ, 1.0), (DXY, 1.0)];

fn row(a: usize, b: usize) -> &'static Row {
    match (a.min(b), a.max(b)) {
        (1, 2) | (3, 4) => &SWAP_12_34,
        (1, 3) | (2, 4) => &SWAP_13_24,
        (1, 4) | (2, 3) => &SWAP_14_23,
        _ => unreachable!("not a transposition of four slots"),
    }
}

/// Writes `perm` as a sequence of transpositions, in the order they act on
/// the state. The factorization is canonical: the permutation is sorted
/// slot by slot from slot 1 upwards and the swaps are then replayed in
/// reverse.
pub fn decompose(perm: &QubitPermutation) -> Vec<(usize, usize)> {
    let mut image = perm.image();
    let mut undo = Vec::new();
    for q in 0..4 {
        let target = image[q];
        if target != q {
            for s in image.iter_mut() {
                if *s == q {
                    *s = target;
                } else if *s == target {
                    *s = q;
                }
            }
            undo.push((q.min(target) + 1, q.max(target) + 1));
        }
    }
    undo.reverse();
    undo
}

/// Predicts the invariants of the permuted state from those of the
/// original, one transposition at a time.
pub fn permuted_invariants(inv: &InvariantSet, perm: &QubitPermutation) -> InvariantSet {
    let mut values = inv.to_array();
    for (a, b) in decompose(perm) {
        let old = values;
        values = row(a, b).map(|(src, sign)| old[src] * sign);
    }
    InvariantSet::from_array(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{FourQubitState, StandardState};
    use num_complex::Complex64;

    #[test]
    fn decomposition_reproduces_every_permutation() {
        for p in QubitPermutation::all() {
            let rebuilt = decompose(&p)
                .into_iter()
                .map(|(a, b)| QubitPermutation::transposition(a, b).unwrap())
                .fold(QubitPermutation::IDENTITY, |acc, t| acc.then(&t));
            assert_eq!(rebuilt, p);
            assert!(decompose(&p).len() <= 3);
        }
        assert!(decompose(&QubitPermutation::IDENTITY).is_empty());
    }

    #[test]
    fn identity_leaves_set_unchanged() {
        let inv = InvariantSet::of(&FourQubitState::random(1));
        assert_eq!(permuted_invariants(&inv, &QubitPermutation::IDENTITY), inv);
    }

    #[test]
    fn swap_12_on_phi4() {
        let inv = InvariantSet::of(&FourQubitState::standard(StandardState::Phi4, &[]).unwrap());
        let out = permuted_invariants(&inv, &QubitPermutation::transposition(1, 2).unwrap());
        let near = |a: Complex64, b: f64| (a - Complex64::new(b, 0.0)).norm() < 1e-15;
        assert!(near(out.l, -1.0 / 16.0) && near(out.m, 0.0) && near(out.n, 1.0 / 16.0));
    }

    #[test]
    fn prediction_matches_recomputation() {
        for seed in 0..50 {
            let s = FourQubitState::random(seed);
            let inv = InvariantSet::of(&s);
            let p = QubitPermutation::all()[(seed as usize * 7) % 24];
            let predicted = permuted_invariants(&inv, &p).to_array();
            let actual = InvariantSet::of(&s.apply_permutation(&p)).to_array();
            for (x, y) in predicted.iter().zip(&actual) {
                assert!(crate::report::residual(*x, *y) < 1e-12, "seed {seed} perm {p}");
            }
        }
    }
}
