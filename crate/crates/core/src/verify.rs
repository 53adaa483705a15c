//! Seeded ensemble checks with machine-readable reports.
//!
//! Trial `t` of a suite run with base seed `s` uses seed `s + t` (wrapping),
//! so a failing trial can be replayed alone by running one trial at its
//! recorded seed. Every residual is `|lhs − rhs| / (1 + max(|lhs|, |rhs|))`
//! and a trial passes when its largest residual is at most the tolerance.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde_json::{Map, Value};

use crate::contraction::{evaluate, evaluate_naive, verify_comb_identity, PatternLibrary, MAX_ORACLE_DEGREE};
use crate::invariants::{check_identities, cross_check_tensor_with, permuted_invariants, InvariantSet, TRANSPOSITIONS};
use crate::monotones::{
    monotone_set, monotones_tensor_route_with, pi1_closed_form, pi1_product_coefficients, pi2_closed_form,
    MonotoneSet,
};
use crate::report::{json_number, residual, residual_real};
use crate::state::{gates, FourQubitState, LocalOperatorQuartet, OperatorKind, QubitPermutation, StandardState};
use crate::{Error, Result};

pub const RESIDUAL_DEFINITION: &str = "|lhs - rhs| / (1 + max(|lhs|, |rhs|))";

/// Reference monotone values `(|F1|, |F2|, |F3|, |F4|, |F5|, |F2′|)` of the
/// five maximally entangled benchmark states.
pub const BENCHMARK_MONOTONES: [(StandardState, [f64; 6]); 5] = [
    (StandardState::Phi1, [1.0, 1.0, 0.5, 1.0, 1.0, 3.0]),
    (StandardState::Phi2, [8.0 / 9.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
    (StandardState::Phi3, [0.0, 0.0, 1.0, 0.0, 1.0, 1.0]),
    (StandardState::Phi4, [0.0, 1.0, 1.0, 0.0, 0.0, 1.0]),
    (StandardState::Phi5, [0.0, 0.0, 1.0, 1.0, 0.0, 1.0]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Identities,
    Permutation,
    Slocc,
    LocalUnitary,
    Cluster,
    Oracle,
    Table2,
    Comb,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Self::Identities,
        Self::Permutation,
        Self::Slocc,
        Self::LocalUnitary,
        Self::Cluster,
        Self::Oracle,
        Self::Table2,
        Self::Comb,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Identities => "identities",
            Self::Permutation => "permutation",
            Self::Slocc => "slocc",
            Self::LocalUnitary => "local_unitary",
            Self::Cluster => "cluster",
            Self::Oracle => "oracle",
            Self::Table2 => "table2",
            Self::Comb => "comb",
        }
    }

    /// Suites that check fixed data and ignore the trial count.
    fn is_deterministic(self) -> bool {
        matches!(self, Self::Table2 | Self::Comb)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub tol: f64,
    pub suites: Vec<Suite>,
}

impl SuiteConfig {
    pub fn new(seed: u64, trials: usize, tol: f64, suites: Vec<Suite>) -> Result<Self> {
        if trials == 0 {
            return Err(Error::Malformed("trials must be at least 1".into()));
        }
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Malformed("tolerance must be positive".into()));
        }
        Ok(Self {
            seed,
            trials,
            tol,
            suites,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub pass: bool,
    pub trials: usize,
    pub max_residual: f64,
    pub first_fail_seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub overall: bool,
    pub suites: Vec<(Suite, SuiteOutcome)>,
}

impl SuiteReport {
    pub fn get(&self, suite: Suite) -> Option<&SuiteOutcome> {
        self.suites.iter().find(|(s, _)| *s == suite).map(|(_, o)| o)
    }

    pub fn to_json(&self) -> Value {
        let mut suites = Map::new();
        for (suite, o) in &self.suites {
            let mut entry = Map::new();
            entry.insert("pass".into(), Value::Bool(o.pass));
            entry.insert("trials".into(), Value::from(o.trials));
            entry.insert("max_residual".into(), json_number(o.max_residual));
            entry.insert("first_fail_seed".into(), o.first_fail_seed.map_or(Value::Null, Value::from));
            suites.insert(suite.name().into(), Value::Object(entry));
        }
        let mut map = Map::new();
        map.insert("overall".into(), Value::Bool(self.overall));
        map.insert("residual_definition".into(), Value::from(RESIDUAL_DEFINITION));
        map.insert("suites".into(), Value::Object(suites));
        Value::Object(map)
    }
}

pub fn run(config: &SuiteConfig) -> SuiteReport {
    run_with(config, &PatternLibrary::standard())
}

/// Runs the configured suites, taking contraction patterns from `library`.
pub fn run_with(config: &SuiteConfig, library: &PatternLibrary) -> SuiteReport {
    let suites: Vec<(Suite, SuiteOutcome)> = config
        .suites
        .iter()
        .map(|&suite| (suite, run_suite(suite, config, library)))
        .collect();
    SuiteReport {
        overall: suites.iter().all(|(_, o)| o.pass),
        suites,
    }
}

fn run_suite(suite: Suite, config: &SuiteConfig, library: &PatternLibrary) -> SuiteOutcome {
    let trials = if suite.is_deterministic() { 1 } else { config.trials };
    let residuals: Vec<(u64, f64)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let seed = config.seed.wrapping_add(t as u64);
            (seed, trial(suite, seed, library))
        })
        .collect();
    let failing = |r: f64| r.is_nan() || r > config.tol;
    SuiteOutcome {
        pass: !residuals.iter().any(|&(_, r)| failing(r)),
        trials,
        max_residual: residuals
            .iter()
            .map(|&(_, r)| if r.is_nan() { f64::INFINITY } else { r })
            .fold(0.0, f64::max),
        first_fail_seed: residuals.iter().find(|&&(_, r)| failing(r)).map(|&(s, _)| s),
    }
}

/// Largest residual of one trial.
pub fn trial(suite: Suite, seed: u64, library: &PatternLibrary) -> f64 {
    match suite {
        Suite::Identities => identities_trial(seed),
        Suite::Permutation => permutation_trial(seed),
        Suite::Slocc => slocc_trial(seed),
        Suite::LocalUnitary => local_unitary_trial(seed),
        Suite::Cluster => cluster_trial(seed),
        Suite::Oracle => oracle_trial(seed, library),
        Suite::Table2 => table2_residual(),
        Suite::Comb => {
            if verify_comb_identity() {
                0.0
            } else {
                f64::INFINITY
            }
        }
    }
}

fn max_of(values: impl IntoIterator<Item = f64>) -> f64 {
    values
        .into_iter()
        .map(|r| if r.is_nan() { f64::INFINITY } else { r })
        .fold(0.0, f64::max)
}

fn identities_trial(seed: u64) -> f64 {
    check_identities(&InvariantSet::of(&FourQubitState::random(seed)), 1.0).max_residual()
}

/// Largest component-wise residual between predicted and recomputed
/// invariants, over the six transpositions.
pub fn transposition_residual(state: &FourQubitState) -> f64 {
    let inv = InvariantSet::of(state);
    max_of(TRANSPOSITIONS.iter().flat_map(|&(a, b)| {
        let p = QubitPermutation::transposition(a, b).expect("valid transposition");
        let predicted = permuted_invariants(&inv, &p).to_array();
        let actual = InvariantSet::of(&state.apply_permutation(&p)).to_array();
        predicted.into_iter().zip(actual).map(|(x, y)| residual(x, y))
    }))
}

/// Largest change of `|F1|`, `|F3|`, `|F2′|` and of the sorted multiset
/// `{|F2|, |F4|, |F5|}` over all 24 relabelings.
pub fn permutation_invariance_residual(state: &FourQubitState) -> f64 {
    let base = monotone_set(state);
    let orbit = |m: &MonotoneSet| {
        let mut v = [m.f2, m.f4, m.f5];
        v.sort_by(f64::total_cmp);
        v
    };
    max_of(QubitPermutation::all().into_iter().flat_map(|p| {
        let m = monotone_set(&state.apply_permutation(&p));
        let invariant = [(m.f1, base.f1), (m.f3, base.f3), (m.f2prime, base.f2prime)];
        let multiset = orbit(&m).into_iter().zip(orbit(&base));
        invariant.into_iter().chain(multiset).map(|(a, b)| residual_real(a, b)).collect::<Vec<_>>()
    }))
}

/// `|F2|(Φ3) = 0` against `|F2|(Φ4) = 1`, Φ4 being a relabeled Φ3.
pub fn f2_witness_residual() -> f64 {
    let phi3 = FourQubitState::standard(StandardState::Phi3, &[]).expect("standard state");
    let phi4 = phi3.apply_permutation(&QubitPermutation::transposition(2, 4).expect("valid"));
    max_of([
        residual_real(monotone_set(&phi3).f2, 0.0),
        residual_real(monotone_set(&phi4).f2, 1.0),
    ])
}

fn permutation_trial(seed: u64) -> f64 {
    let s = FourQubitState::random(seed);
    max_of([
        transposition_residual(&s),
        permutation_invariance_residual(&s),
        f2_witness_residual(),
    ])
}

/// `I(G·s)` against `(Π det G_q)^{d/2} I(s)` for all seven invariants.
pub fn covariance_residual(state: &FourQubitState, quartet: &LocalOperatorQuartet) -> f64 {
    let Ok(moved) = state.apply_local_ops(quartet) else {
        return f64::INFINITY;
    };
    let before = InvariantSet::of(state).to_array();
    let after = InvariantSet::of(&moved).to_array();
    let det = quartet.det_product();
    max_of(
        before
            .iter()
            .zip(&after)
            .zip(InvariantSet::DEGREES)
            .map(|((b, a), d)| residual(*a, det.powi(d / 2) * b)),
    )
}

/// Largest monotone value on a random product state.
pub fn product_state_residual(seed: u64) -> f64 {
    max_of(monotone_set(&FourQubitState::random_product(seed)).to_array())
}

fn slocc_trial(seed: u64) -> f64 {
    let s = FourQubitState::random(seed);
    let g = LocalOperatorQuartet::random(seed, OperatorKind::General);
    max_of([covariance_residual(&s, &g), product_state_residual(seed)])
}

/// Largest change of any monotone under a local unitary quartet.
pub fn local_unitary_residual(state: &FourQubitState, quartet: &LocalOperatorQuartet) -> f64 {
    let Ok(moved) = state.apply_local_ops(quartet) else {
        return f64::INFINITY;
    };
    let (a, b) = (monotone_set(state).to_array(), monotone_set(&moved).to_array());
    max_of(a.iter().zip(&b).map(|(x, y)| residual_real(*x, *y)))
}

fn local_unitary_trial(seed: u64) -> f64 {
    local_unitary_residual(
        &FourQubitState::random(seed),
        &LocalOperatorQuartet::random(seed, OperatorKind::Unitary),
    )
}

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Random Π1 coefficients of product form `(αγ, αδ, βγ, βδ)`.
pub fn random_pi1_coefficients(seed: u64) -> [Complex64; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let [a, b, c, d] = std::array::from_fn(|_| gaussian(&mut rng));
    pi1_product_coefficients(a, b, c, d)
}

/// Random real non-negative Π2 coefficients with unit norm.
pub fn random_pi2_coefficients(seed: u64) -> [Complex64; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0002);
    let raw: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>());
    let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
    raw.map(|x| Complex64::new(x / norm, 0.0))
}

/// Monotone drift along `Φ3 → (σx on slot 4) → (H on slots 3, 4)`, plus
/// the distance of the endpoint from `½(|0000⟩ + |0011⟩ + |1100⟩ − |1111⟩)`.
pub fn equivalence_chain_residual() -> f64 {
    let phi3 = FourQubitState::standard(StandardState::Phi3, &[]).expect("standard state");
    let flip = LocalOperatorQuartet::new(
        [gates::IDENTITY, gates::IDENTITY, gates::IDENTITY, gates::PAULI_X],
        OperatorKind::Unitary,
    )
    .expect("unitary");
    let hadamards = LocalOperatorQuartet::new(
        [gates::IDENTITY, gates::IDENTITY, gates::HADAMARD, gates::HADAMARD],
        OperatorKind::Unitary,
    )
    .expect("unitary");
    let Ok(mid) = phi3.apply_local_ops(&flip) else {
        return f64::INFINITY;
    };
    let Ok(end) = mid.apply_local_ops(&hadamards) else {
        return f64::INFINITY;
    };
    let half = Complex64::new(0.5, 0.0);
    let target = FourQubitState::standard(StandardState::Pi1, &[half; 4]).expect("standard state");
    let start = monotone_set(&phi3).to_array();
    let drift = [mid, end].into_iter().flat_map(|s| {
        let m = monotone_set(&s).to_array();
        start.into_iter().zip(m).map(|(a, b)| residual_real(a, b)).collect::<Vec<_>>()
    });
    let distance = end.amps().iter().zip(target.amps()).map(|(a, b)| residual(*a, *b));
    max_of(drift.chain(distance))
}

fn cluster_trial(seed: u64) -> f64 {
    max_of([
        pi1_closed_form(random_pi1_coefficients(seed), 1.0).max_residual(),
        pi2_closed_form(random_pi2_coefficients(seed), 1.0).max_residual(),
        equivalence_chain_residual(),
    ])
}

fn oracle_trial(seed: u64, library: &PatternLibrary) -> f64 {
    let s = FourQubitState::random(seed);
    let tensor = cross_check_tensor_with(&s, 1.0, library).max_residual();
    let naive = library
        .iter()
        .filter(|(_, p)| p.degree() <= MAX_ORACLE_DEGREE)
        .map(|(_, p)| match evaluate_naive(&s, p) {
            Ok(v) => residual(evaluate(&s, p), v),
            Err(_) => f64::INFINITY,
        });
    let ms = monotone_set(&s);
    let (f1, f2, f3) = monotones_tensor_route_with(&s, library);
    let routes = [(f1, ms.f1), (f2, ms.f2), (f3, ms.f3)].map(|(a, b)| residual_real(a, b));
    max_of(naive.chain(routes).chain([tensor]))
}

/// Largest deviation from the benchmark table, over all 30 entries.
pub fn table2_residual() -> f64 {
    max_of(BENCHMARK_MONOTONES.iter().flat_map(|&(w, expected)| {
        let got = monotone_set(&FourQubitState::standard(w, &[]).expect("standard state")).to_array();
        got.into_iter().zip(expected).map(|(a, b)| (a - b).abs())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(suites: Vec<Suite>, trials: usize) -> SuiteConfig {
        SuiteConfig::new(1, trials, 1e-10, suites).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(SuiteConfig::new(0, 0, 1e-10, vec![]).is_err());
        assert!(SuiteConfig::new(0, 1, 0.0, vec![]).is_err());
        assert!(SuiteConfig::new(0, 1, f64::NAN, vec![]).is_err());
        assert_eq!("local_unitary".parse(), Ok(Suite::LocalUnitary));
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn table2_and_comb_pass() {
        let r = run(&config(vec![Suite::Table2, Suite::Comb], 5));
        assert!(r.overall, "{r:?}");
        assert_eq!(r.get(Suite::Table2).unwrap().trials, 1);
    }

    #[test]
    fn each_randomized_suite_passes_briefly() {
        let suites = vec![
            Suite::Identities,
            Suite::Permutation,
            Suite::Slocc,
            Suite::LocalUnitary,
            Suite::Cluster,
        ];
        let r = run(&config(suites, 4));
        assert!(r.overall, "{r:?}");
    }

    #[test]
    fn corrupted_engine_fails_oracle_suite() {
        let mut lib = PatternLibrary::standard();
        lib.replace("NmM", lib.get("NmM").with_term_weight(0, 0, -1.0));
        let r = run_with(&config(vec![Suite::Oracle], 2), &lib);
        let o = r.get(Suite::Oracle).unwrap();
        assert!(!o.pass);
        assert_eq!(o.first_fail_seed, Some(1));
        assert!(o.max_residual > 1e-3);
        assert!(!r.overall);
    }

    #[test]
    fn report_is_deterministic() {
        let c = config(vec![Suite::Identities, Suite::Cluster], 20);
        assert_eq!(run(&c), run(&c));
        let json = run(&c).to_json();
        assert_eq!(json["suites"]["identities"]["trials"], 20);
        assert!(json["suites"]["cluster"]["first_fail_seed"].is_null());
    }

    #[test]
    fn random_coefficients_have_expected_form() {
        for seed in 0..20 {
            let [a, b, c, d] = random_pi1_coefficients(seed);
            assert!((a * d - b * c).norm() < 1e-12);
            let p = random_pi2_coefficients(seed);
            assert!(p.iter().all(|x| x.im == 0.0 && x.re >= 0.0));
            assert!((p.iter().map(|x| x.norm_sqr()).sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }
}
