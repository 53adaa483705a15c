//! Entanglement monotones `|F1|…|F5|` and the permutation-invariant `|F2′|`.
//!
//! Each monotone is the modulus of a polynomial in the invariant set:
//!
//! ```text
//! F1  = 8[4(Dxz + Dxt + Dxy) − H³]
//! F2  = 16[H⁴ − 4H(2Dxt + Dxz + Dxy) − 16LM]
//! F3  = 32[4(N − M) + H²][4(L − N) + H²][4(M − L) + H²]
//! F4  = 16[H⁴ − 4H(Dxt + 2Dxz + Dxy) − 16LN]
//! F5  = 16[H⁴ − 4H(Dxt + Dxz + 2Dxy) − 16MN]
//! F2′ = 16[3H⁴ − 16H(Dxt + Dxz + Dxy) − 16(MN + NL + ML)]
//! ```
//!
//! `|F1|`, `|F3|` and `|F2′|` are invariant under relabeling the qubits;
//! `|F2|`, `|F4|`, `|F5|` are permuted among themselves.

use std::fmt;

use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::contraction::{evaluate, PatternLibrary};
use crate::invariants::InvariantSet;
use crate::report::{json_number, CheckReport};
use crate::state::{FourQubitState, StandardState};

/// Default zero threshold for [`classify`] on normalized states.
pub const DEFAULT_ZERO_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotoneSet {
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
    pub f4: f64,
    pub f5: f64,
    pub f2prime: f64,
}

impl MonotoneSet {
    pub const NAMES: [&'static str; 6] = ["F1", "F2", "F3", "F4", "F5", "F2prime"];
    /// Homogeneity degrees in the amplitudes, in [`MonotoneSet::NAMES`] order.
    pub const DEGREES: [i32; 6] = [6, 8, 12, 8, 8, 8];

    /// Moduli of the polynomials evaluated on `inv` as given, without any
    /// normalization of the underlying state.
    pub fn from_invariants(inv: &InvariantSet) -> Self {
        let [f1, f2, f3, f4, f5, f2prime] = monotone_polynomials(inv).map(|z| z.norm());
        Self {
            f1,
            f2,
            f3,
            f4,
            f5,
            f2prime,
        }
    }

    pub fn to_array(&self) -> [f64; 6] {
        [self.f1, self.f2, self.f3, self.f4, self.f5, self.f2prime]
    }

    /// `{"F1": x, …, "F2prime": x, "class": label}`.
    pub fn to_json(&self, tol: f64) -> Value {
        let mut map = Map::new();
        for (name, v) in Self::NAMES.iter().zip(self.to_array()) {
            map.insert((*name).into(), json_number(v));
        }
        map.insert("class".into(), Value::String(classify(self, tol).label.to_string()));
        Value::Object(map)
    }
}

/// The complex polynomials whose moduli are the monotones, in
/// [`MonotoneSet::NAMES`] order.
pub fn monotone_polynomials(inv: &InvariantSet) -> [Complex64; 6] {
    let &InvariantSet {
        h,
        l,
        m,
        n,
        dxt,
        dxy,
        dxz,
    } = inv;
    let h2 = h * h;
    let h4 = h2 * h2;
    let dsum = inv.d_sum();
    [
        (dsum * 4.0 - h2 * h) * 8.0,
        (h4 - h * (dxt * 2.0 + dxz + dxy) * 4.0 - l * m * 16.0) * 16.0,
        ((n - m) * 4.0 + h2) * ((l - n) * 4.0 + h2) * ((m - l) * 4.0 + h2) * 32.0,
        (h4 - h * (dxt + dxz * 2.0 + dxy) * 4.0 - l * n * 16.0) * 16.0,
        (h4 - h * (dxt + dxz + dxy * 2.0) * 4.0 - m * n * 16.0) * 16.0,
        (h4 * 3.0 - h * dsum * 16.0 - (m * n + n * l + m * l) * 16.0) * 16.0,
    ]
}

/// Monotones of the normalized state.
pub fn monotone_set(state: &FourQubitState) -> MonotoneSet {
    MonotoneSet::from_invariants(&InvariantSet::of(&state.normalize()))
}

/// `(|F1|, |F2|, |F3|)` of the normalized state, from the contraction
/// patterns rather than the invariant polynomials.
pub fn monotones_tensor_route(state: &FourQubitState) -> (f64, f64, f64) {
    monotones_tensor_route_with(state, &PatternLibrary::standard())
}

pub fn monotones_tensor_route_with(state: &FourQubitState, library: &PatternLibrary) -> (f64, f64, f64) {
    let s = state.normalize();
    let f = |name| evaluate(&s, library.get(name)).norm();
    (f("F1"), f("F2"), f("F3"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    AllNonzero,
    F1Only,
    ClusterLike,
    ProductLike,
    Other,
}

impl ClassLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::AllNonzero => "all_nonzero",
            Self::F1Only => "f1_only",
            Self::ClusterLike => "cluster_like",
            Self::ProductLike => "product_like",
            Self::Other => "other",
        }
    }

    /// Label of a zero pattern over `(|F1|, |F2′|, |F3|)`.
    pub fn from_zero_pattern(zero: [bool; 3]) -> Self {
        match zero {
            [false, false, false] => Self::AllNonzero,
            [false, true, true] => Self::F1Only,
            [true, false, false] => Self::ClusterLike,
            [true, true, true] => Self::ProductLike,
            _ => Self::Other,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which of the permutation-invariant monotones vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassSignature {
    pub label: ClassLabel,
    /// Zero flags for `(|F1|, |F2′|, |F3|)`.
    pub zero_pattern: [bool; 3],
}

pub fn classify(ms: &MonotoneSet, tol: f64) -> ClassSignature {
    let zero_pattern = [ms.f1, ms.f2prime, ms.f3].map(|v| v <= tol);
    ClassSignature {
        label: ClassLabel::from_zero_pattern(zero_pattern),
        zero_pattern,
    }
}

/// Coefficients `(αγ, αδ, βγ, βδ)`, for which `ad = bc` holds.
pub fn pi1_product_coefficients(alpha: Complex64, beta: Complex64, gamma: Complex64, delta: Complex64) -> [Complex64; 4] {
    [alpha * gamma, alpha * delta, beta * gamma, beta * delta]
}

fn normalized_coefficients(coeffs: [Complex64; 4]) -> [Complex64; 4] {
    let norm = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    coeffs.map(|c| c / norm)
}

/// Π1 closed forms on the normalized state: `|F2| = |F4| = 0` and
/// `|F2′| = |F5| = 16|ad + bc|⁴`. Only meaningful when `ad = bc`.
pub fn pi1_closed_form(coeffs: [Complex64; 4], tol: f64) -> CheckReport {
    let mut report = CheckReport::new(tol);
    let Ok(state) = FourQubitState::standard(StandardState::Pi1, &coeffs) else {
        report.record("pi1:state", f64::INFINITY);
        return report;
    };
    let [a, b, c, d] = normalized_coefficients(coeffs);
    let closed = 16.0 * (a * d + b * c).norm().powi(4);
    let ms = monotone_set(&state);
    let real = |x: f64| Complex64::new(x, 0.0);
    report.compare("pi1:F2=0", real(ms.f2), real(0.0));
    report.compare("pi1:F4=0", real(ms.f4), real(0.0));
    report.compare("pi1:F2prime=16|ad+bc|^4", real(ms.f2prime), real(closed));
    report.compare("pi1:F5=16|ad+bc|^4", real(ms.f5), real(closed));
    report
}

/// Π2 closed forms on the normalized state: `|F2| = |F5| = 0` and
/// `|F2′| = |F4| = 256|abcd|²`. Established for real non-negative
/// coefficients.
pub fn pi2_closed_form(coeffs: [Complex64; 4], tol: f64) -> CheckReport {
    let mut report = CheckReport::new(tol);
    let Ok(state) = FourQubitState::standard(StandardState::Pi2, &coeffs) else {
        report.record("pi2:state", f64::INFINITY);
        return report;
    };
    let [a, b, c, d] = normalized_coefficients(coeffs);
    let closed = 256.0 * (a * b * c * d).norm().powi(2);
    let ms = monotone_set(&state);
    let real = |x: f64| Complex64::new(x, 0.0);
    report.compare("pi2:F2=0", real(ms.f2), real(0.0));
    report.compare("pi2:F5=0", real(ms.f5), real(0.0));
    report.compare("pi2:F2prime=256|abcd|^2", real(ms.f2prime), real(closed));
    report.compare("pi2:F4=256|abcd|^2", real(ms.f4), real(closed));
    report
}

/// Both cluster-class closed forms for one coefficient tuple.
pub fn cluster_closed_forms(coeffs: [Complex64; 4], tol: f64) -> CheckReport {
    let mut report = pi1_closed_form(coeffs, tol);
    report.checks.extend(pi2_closed_form(coeffs, tol).checks);
    report
}
