use fourqubit::contraction::{builtin_pattern, evaluate, evaluate_naive, PatternLibrary, MAX_ORACLE_DEGREE};
use fourqubit::invariants::{permuted_invariants, InvariantSet};
use fourqubit::monotones::{monotone_set, MonotoneSet};
use fourqubit::report::{residual, residual_real};
use fourqubit::{Complex64, FourQubitState, LocalOperatorQuartet, OperatorKind, QubitPermutation};
use proptest::prelude::*;

fn nonzero_scale() -> impl Strategy<Value = Complex64> {
    (0.2f64..3.0, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_and_naive_evaluators_agree(seed in any::<u64>()) {
        let s = FourQubitState::random(seed);
        for (name, p) in PatternLibrary::standard().iter() {
            if p.degree() <= MAX_ORACLE_DEGREE {
                let r = residual(evaluate(&s, p), evaluate_naive(&s, p).unwrap());
                prop_assert!(r < 1e-12, "{name}: {r}");
            }
        }
    }

    #[test]
    fn invariants_are_homogeneous(seed in any::<u64>(), lambda in nonzero_scale()) {
        let s = FourQubitState::random(seed);
        let base = InvariantSet::of(&s).to_array();
        let scaled = InvariantSet::of(&s.scale(lambda).unwrap()).to_array();
        for ((b, x), d) in base.iter().zip(scaled).zip(InvariantSet::DEGREES) {
            prop_assert!(residual(x, lambda.powi(d) * b) < 1e-10);
        }
    }

    #[test]
    fn monotones_ignore_normalization(seed in any::<u64>(), lambda in nonzero_scale()) {
        let s = FourQubitState::random(seed);
        let (a, b) = (monotone_set(&s), monotone_set(&s.scale(lambda).unwrap()));
        for (x, y) in a.to_array().iter().zip(b.to_array()) {
            prop_assert!(residual_real(*x, y) < 1e-10);
        }
    }

    #[test]
    fn relabeling_permutes_invariants_as_predicted(seed in any::<u64>(), which in 0usize..24) {
        let s = FourQubitState::random(seed);
        let p = QubitPermutation::all()[which];
        let predicted = permuted_invariants(&InvariantSet::of(&s), &p).to_array();
        let actual = InvariantSet::of(&s.apply_permutation(&p)).to_array();
        for (x, y) in predicted.iter().zip(actual) {
            prop_assert!(residual(*x, y) < 1e-10);
        }
    }

    #[test]
    fn invariant_monotones_survive_relabeling(seed in any::<u64>(), which in 0usize..24) {
        let s = FourQubitState::random(seed);
        let p = QubitPermutation::all()[which];
        let (a, b) = (monotone_set(&s), monotone_set(&s.apply_permutation(&p)));
        for (x, y) in [(a.f1, b.f1), (a.f3, b.f3), (a.f2prime, b.f2prime)] {
            prop_assert!(residual_real(x, y) < 1e-9);
        }
        let sorted = |m: &MonotoneSet| {
            let mut v = [m.f2, m.f4, m.f5];
            v.sort_by(f64::total_cmp);
            v
        };
        for (x, y) in sorted(&a).iter().zip(sorted(&b)) {
            prop_assert!(residual_real(*x, y) < 1e-9);
        }
    }

    #[test]
    fn general_quartets_scale_invariants(seed in any::<u64>()) {
        let s = FourQubitState::random(seed);
        let g = LocalOperatorQuartet::random(seed.wrapping_add(1), OperatorKind::General);
        let det = g.det_product();
        let before = InvariantSet::of(&s).to_array();
        let after = InvariantSet::of(&s.apply_local_ops(&g).unwrap()).to_array();
        for ((b, a), d) in before.iter().zip(after).zip(InvariantSet::DEGREES) {
            prop_assert!(residual(a, det.powi(d / 2) * b) < 1e-8);
        }
    }

    #[test]
    fn local_unitaries_preserve_monotones(seed in any::<u64>()) {
        let s = FourQubitState::random(seed);
        let u = LocalOperatorQuartet::random(seed ^ 0xabc, OperatorKind::Unitary);
        let (a, b) = (monotone_set(&s), monotone_set(&s.apply_local_ops(&u).unwrap()));
        for (x, y) in a.to_array().iter().zip(b.to_array()) {
            prop_assert!(residual_real(*x, y) < 1e-9);
        }
    }

    #[test]
    fn product_states_have_no_monotones(seed in any::<u64>()) {
        let m = monotone_set(&FourQubitState::random_product(seed));
        prop_assert!(m.to_array().iter().all(|v| *v <= 1e-10));
    }
}

#[test]
fn grouped_f3_matches_its_expansion() {
    let f3 = builtin_pattern("F3").unwrap();
    let expanded = f3.expand();
    assert!(!expanded.is_product());
    assert_eq!(expanded.degree(), 12);
    for seed in 0..3 {
        let s = FourQubitState::random(seed);
        let r = residual(evaluate(&s, &f3), evaluate(&s, &expanded));
        assert!(r < 1e-10, "seed {seed}: {r}");
    }
}
