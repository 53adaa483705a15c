use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::ops::{gates, LocalOperatorQuartet, OperatorKind, SingleQubitOp};
use super::FourQubitState;

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn gaussian_op(rng: &mut impl Rng) -> SingleQubitOp {
    [[gaussian(rng), gaussian(rng)], [gaussian(rng), gaussian(rng)]]
}

/// Gram-Schmidt on the columns of a Gaussian matrix.
fn unitary_op(rng: &mut impl Rng) -> SingleQubitOp {
    loop {
        let m = gaussian_op(rng);
        let (mut u0, mut u1) = ([m[0][0], m[1][0]], [m[0][1], m[1][1]]);
        let n0 = (u0[0].norm_sqr() + u0[1].norm_sqr()).sqrt();
        if n0 < 1e-8 {
            continue;
        }
        u0 = u0.map(|x| x / n0);
        let overlap = u0[0].conj() * u1[0] + u0[1].conj() * u1[1];
        u1 = [u1[0] - overlap * u0[0], u1[1] - overlap * u0[1]];
        let n1 = (u1[0].norm_sqr() + u1[1].norm_sqr()).sqrt();
        if n1 < 1e-8 {
            continue;
        }
        u1 = u1.map(|x| x / n1);
        return [[u0[0], u1[0]], [u0[1], u1[1]]];
    }
}

impl FourQubitState {
    /// Haar-random unit state: sixteen independent standard complex
    /// Gaussians, normalized. Deterministic in `seed`.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let amps: [Complex64; 16] = std::array::from_fn(|_| gaussian(&mut rng));
            if let Ok(s) = FourQubitState::new(amps) {
                return s.normalize();
            }
        }
    }

    /// Normalized tensor product of four random single-qubit states.
    pub fn random_product(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let qubits = std::array::from_fn(|_| [gaussian(&mut rng), gaussian(&mut rng)]);
            if let Ok(s) = FourQubitState::product(qubits) {
                return s.normalize();
            }
        }
    }
}

impl LocalOperatorQuartet {
    /// Random quartet, deterministic in `seed`. General operators have
    /// Gaussian entries resampled until `|det| ≥ 0.1`; unitary ones are
    /// orthonormalized Gaussian columns.
    pub fn random(seed: u64, kind: OperatorKind) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ops = std::array::from_fn(|_| match kind {
            OperatorKind::Unitary => unitary_op(&mut rng),
            OperatorKind::General => loop {
                let op = gaussian_op(&mut rng);
                if gates::det(&op).norm() >= OperatorKind::MIN_ABS_DET {
                    break op;
                }
            },
        });
        LocalOperatorQuartet::new(ops, kind).expect("random quartet satisfies its constraint")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_state_is_deterministic_and_normalized() {
        for seed in [0, 1, 42, u64::MAX] {
            let a = FourQubitState::random(seed);
            assert_eq!(a, FourQubitState::random(seed));
            assert!((a.norm_sqr() - 1.0).abs() < 1e-12);
        }
        assert_ne!(FourQubitState::random(1), FourQubitState::random(2));
    }

    #[test]
    fn random_state_first_weight_is_uniform() {
        // |a_0|² of a Haar state on C^16 is Beta(1, 15): mean 1/16, variance 15/(16²·17).
        let n = 1000;
        let mean = (0..n).map(|s| FourQubitState::random(s).amps()[0].norm_sqr()).sum::<f64>() / n as f64;
        let sigma = (15.0 / (256.0 * 17.0) / n as f64).sqrt();
        assert!((mean - 1.0 / 16.0).abs() < 3.0 * sigma, "mean {mean}");
    }

    #[test]
    fn random_quartets_meet_their_constraints() {
        for seed in 0..50 {
            let u = LocalOperatorQuartet::random(seed, OperatorKind::Unitary);
            assert!(u.ops().iter().all(|op| gates::unitarity_defect(op) <= 1e-12));
            let g = LocalOperatorQuartet::random(seed, OperatorKind::General);
            assert!((0..4).all(|q| g.det(q).norm() >= 0.1));
            assert_eq!(g, LocalOperatorQuartet::random(seed, OperatorKind::General));
        }
    }

    #[test]
    fn random_product_is_product() {
        let s = FourQubitState::random_product(5);
        // Slot-1 matricization has rank one.
        let a = s.amps();
        for r in 0..8 {
            for t in 0..8 {
                let minor = a[r] * a[8 + t] - a[t] * a[8 + r];
                assert!(minor.norm() < 1e-14);
            }
        }
    }
}
