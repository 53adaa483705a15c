use num_complex::Complex64;

use super::InvariantSet;
use crate::contraction::{evaluate, PatternLibrary};
use crate::report::CheckReport;
use crate::state::FourQubitState;

/// Checks the linear and bilinear relations among the seven invariants:
///
/// * `L + M + N = 0`
/// * `HL = Dxz − Dxt`, `HM = Dxt − Dxy`, `HN = Dxy − Dxz`
/// * `H(M − L) = 3Dxt − (Dxz + Dxt + Dxy)`
pub fn check_identities(inv: &InvariantSet, tol: f64) -> CheckReport {
    let mut report = CheckReport::new(tol);
    report.compare("L+M+N=0", inv.l + inv.m, -inv.n);
    report.compare("HL=Dxz-Dxt", inv.h * inv.l, inv.dxz - inv.dxt);
    report.compare("HM=Dxt-Dxy", inv.h * inv.m, inv.dxt - inv.dxy);
    report.compare("HN=Dxy-Dxz", inv.h * inv.n, inv.dxy - inv.dxz);
    report.compare("H(M-L)=3Dxt-Dsum", inv.h * (inv.m - inv.l), inv.dxt * 3.0 - inv.d_sum());
    report
}

/// Compares every builtin invariant pattern with its determinant-route
/// value.
pub fn cross_check_tensor(state: &FourQubitState, tol: f64) -> CheckReport {
    cross_check_tensor_with(state, tol, &PatternLibrary::standard())
}

/// [`cross_check_tensor`] against an arbitrary pattern library.
pub fn cross_check_tensor_with(state: &FourQubitState, tol: f64, library: &PatternLibrary) -> CheckReport {
    let inv = InvariantSet::of(state);
    let four = |z: Complex64| z * 4.0;
    let expected = [
        ("H", inv.h),
        ("NmM", four(inv.n - inv.m)),
        ("MmL", four(inv.m - inv.l)),
        ("LmN", four(inv.l - inv.n)),
        ("L", inv.l),
        ("M", inv.m),
        ("N", inv.n),
        ("Dsum", four(inv.d_sum())),
        ("Dxt", inv.dxt),
    ];
    let mut report = CheckReport::new(tol);
    for (name, value) in expected {
        report.compare(name, evaluate(state, library.get(name)), value);
    }
    report
}
