use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::{labels, linear_index, FourQubitState};
use crate::{Error, Result};

/// A relabeling of the four slots.
///
/// `image[q]` is the slot (0-based) that the qubit in slot `q` moves to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QubitPermutation {
    image: [usize; 4],
}

impl QubitPermutation {
    pub const IDENTITY: Self = Self { image: [0, 1, 2, 3] };

    /// Builds a permutation from 0-based slot images.
    pub fn new(image: [usize; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &s in &image {
            if s >= 4 || seen[s] {
                return Err(Error::InvalidPermutation(format!("{image:?} is not a bijection")));
            }
            seen[s] = true;
        }
        Ok(Self { image })
    }

    /// Builds a permutation from 1-based slot labels, e.g. `[2, 1, 3, 4]`.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let image: [usize; 4] = labels
            .iter()
            .map(|&l| l.checked_sub(1).unwrap_or(usize::MAX))
            .collect::<Vec<_>>()
            .try_into()
            .map_err(|_| Error::InvalidPermutation(format!("expected 4 labels, got {}", labels.len())))?;
        Self::new(image)
    }

    /// Exchange of slots `a` and `b` (1-based).
    pub fn transposition(a: usize, b: usize) -> Result<Self> {
        if a == b || !(1..=4).contains(&a) || !(1..=4).contains(&b) {
            return Err(Error::InvalidPermutation(format!("bad transposition {a}<->{b}")));
        }
        let mut image = [0, 1, 2, 3];
        image.swap(a - 1, b - 1);
        Ok(Self { image })
    }

    pub fn image(&self) -> [usize; 4] {
        self.image
    }

    /// 1-based labels, the inverse of [`QubitPermutation::from_labels`].
    pub fn labels(&self) -> [usize; 4] {
        self.image.map(|s| s + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut image = [0; 4];
        for (q, &s) in self.image.iter().enumerate() {
            image[s] = q;
        }
        Self { image }
    }

    /// The permutation that applies `self` first and `next` afterwards.
    pub fn then(&self, next: &Self) -> Self {
        Self {
            image: self.image.map(|s| next.image[s]),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// All 24 permutations in lexicographic order of their images.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        if let Ok(p) = Self::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

impl FromStr for QubitPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPermutation(format!("`{s}`: {e}")))?;
        Self::from_labels(&labels)
    }
}

impl fmt::Display for QubitPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.labels();
        write!(f, "{a},{b},{c},{d}")
    }
}

/// A 2×2 complex matrix, row-major.
pub type SingleQubitOp = [[Complex64; 2]; 2];

/// Standard single-qubit gates.
pub mod gates {
    use super::SingleQubitOp;
    use num_complex::Complex64;

    const fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    pub const IDENTITY: SingleQubitOp = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    pub const PAULI_X: SingleQubitOp = [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
    pub const PAULI_Y: SingleQubitOp = [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]];
    pub const PAULI_Z: SingleQubitOp = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]];
    pub const HADAMARD: SingleQubitOp = [
        [c(std::f64::consts::FRAC_1_SQRT_2, 0.0), c(std::f64::consts::FRAC_1_SQRT_2, 0.0)],
        [c(std::f64::consts::FRAC_1_SQRT_2, 0.0), c(-std::f64::consts::FRAC_1_SQRT_2, 0.0)],
    ];

    /// Looks up a gate by name: `I`, `X`, `Y`, `Z` or `H`.
    pub fn by_name(name: &str) -> Option<SingleQubitOp> {
        match name {
            "I" => Some(IDENTITY),
            "X" => Some(PAULI_X),
            "Y" => Some(PAULI_Y),
            "Z" => Some(PAULI_Z),
            "H" => Some(HADAMARD),
            _ => None,
        }
    }

    pub fn diag(a: Complex64, b: Complex64) -> SingleQubitOp {
        [[a, c(0.0, 0.0)], [c(0.0, 0.0), b]]
    }

    pub fn mul(a: &SingleQubitOp, b: &SingleQubitOp) -> SingleQubitOp {
        let mut out = [[c(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    }

    pub fn det(a: &SingleQubitOp) -> Complex64 {
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }

    pub fn adjoint(a: &SingleQubitOp) -> SingleQubitOp {
        [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
    }

    /// Largest entrywise deviation of `a·a†` from the identity.
    pub fn unitarity_defect(a: &SingleQubitOp) -> f64 {
        let p = mul(a, &adjoint(a));
        let mut worst = 0.0f64;
        for (i, row) in p.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let id = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((x - c(id, 0.0)).norm());
            }
        }
        worst
    }
}

/// Whether a quartet is an arbitrary well-conditioned SLOCC element or a
/// local unitary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    General,
    Unitary,
}

impl OperatorKind {
    pub const UNITARY_TOLERANCE: f64 = 1e-12;
    pub const MIN_ABS_DET: f64 = 0.1;
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(Self::General),
            "unitary" => Ok(Self::Unitary),
            other => Err(Error::InvalidQuartet(format!("unknown kind `{other}`"))),
        }
    }
}

/// Four 2×2 operators, one acting on each slot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalOperatorQuartet {
    ops: [SingleQubitOp; 4],
    kind: OperatorKind,
}

impl LocalOperatorQuartet {
    /// Validates the kind's constraint: unitarity within 1e-12, or
    /// `|det| ≥ 0.1` on every slot for general quartets.
    pub fn new(ops: [SingleQubitOp; 4], kind: OperatorKind) -> Result<Self> {
        for (q, op) in ops.iter().enumerate() {
            if op.iter().flatten().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
                return Err(Error::InvalidQuartet(format!("slot {} has non-finite entries", q + 1)));
            }
            match kind {
                OperatorKind::Unitary => {
                    let defect = gates::unitarity_defect(op);
                    if defect > OperatorKind::UNITARY_TOLERANCE {
                        return Err(Error::InvalidQuartet(format!(
                            "slot {} is not unitary (defect {defect:e})",
                            q + 1
                        )));
                    }
                }
                OperatorKind::General => {
                    let d = gates::det(op).norm();
                    if d < OperatorKind::MIN_ABS_DET {
                        return Err(Error::InvalidQuartet(format!(
                            "slot {} has |det| = {d:e} < {}",
                            q + 1,
                            OperatorKind::MIN_ABS_DET
                        )));
                    }
                }
            }
        }
        Ok(Self { ops, kind })
    }

    pub fn identity() -> Self {
        Self {
            ops: [gates::IDENTITY; 4],
            kind: OperatorKind::Unitary,
        }
    }

    pub fn ops(&self) -> &[SingleQubitOp; 4] {
        &self.ops
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn det(&self, slot: usize) -> Complex64 {
        gates::det(&self.ops[slot])
    }

    /// `det G1 · det G2 · det G3 · det G4`.
    pub fn det_product(&self) -> Complex64 {
        (0..4).map(|q| self.det(q)).product()
    }

    /// The quartet equivalent to applying `self` and then `next`, i.e. the
    /// slotwise products `next_q · self_q`.
    pub fn then(&self, next: &Self) -> Self {
        let kind = match (self.kind, next.kind) {
            (OperatorKind::Unitary, OperatorKind::Unitary) => OperatorKind::Unitary,
            _ => OperatorKind::General,
        };
        Self {
            ops: std::array::from_fn(|q| gates::mul(&next.ops[q], &self.ops[q])),
            kind,
        }
    }
}

impl FourQubitState {
    /// Moves the qubit in slot `q` to slot `perm.image()[q]`.
    pub fn apply_permutation(&self, perm: &QubitPermutation) -> Self {
        let image = perm.image();
        let mut amps = [Complex64::new(0.0, 0.0); 16];
        for (r, &a) in self.amps().iter().enumerate() {
            let old = labels(r);
            let mut new = [0; 4];
            for q in 0..4 {
                new[image[q]] = old[q];
            }
            amps[linear_index(new[0], new[1], new[2], new[3])] = a;
        }
        Self { amps }
    }

    /// `A'_{ijkl} = Σ (G1)_{i i0} (G2)_{j j0} (G3)_{k k0} (G4)_{l l0} A_{i0 j0 k0 l0}`.
    ///
    /// Fails with [`Error::ZeroState`] when a singular operator annihilates
    /// the state.
    pub fn apply_local_ops(&self, quartet: &LocalOperatorQuartet) -> Result<Self> {
        let mut amps = *self.amps();
        for (slot, op) in quartet.ops().iter().enumerate() {
            let stride = 8 >> slot;
            for r in (0..16).filter(|r| r & stride == 0) {
                let (a0, a1) = (amps[r], amps[r | stride]);
                amps[r] = op[0][0] * a0 + op[0][1] * a1;
                amps[r | stride] = op[1][0] * a0 + op[1][1] * a1;
            }
        }
        FourQubitState::new(amps)
    }
}
