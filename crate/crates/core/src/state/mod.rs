//! Four-qubit pure states and the local operations acting on them.
//!
//! Amplitudes are stored in linear-index order `r = 8i + 4j + 2k + l`, where
//! `(i, j, k, l)` are the basis labels of slots 1 through 4.

mod io;
mod ops;
mod random;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::{Error, Result};

pub use ops::{gates, LocalOperatorQuartet, OperatorKind, QubitPermutation, SingleQubitOp};

/// Linear index of the basis ket `|ijkl⟩`.
#[inline]
pub const fn linear_index(i: usize, j: usize, k: usize, l: usize) -> usize {
    8 * i + 4 * j + 2 * k + l
}

/// Basis labels `(i, j, k, l)` of linear index `r`.
#[inline]
pub const fn labels(r: usize) -> [usize; 4] {
    [(r >> 3) & 1, (r >> 2) & 1, (r >> 1) & 1, r & 1]
}

/// A (not necessarily normalized) pure state of four qubits.
///
/// Construction rejects non-finite amplitudes and the zero vector, so every
/// value of this type has a strictly positive norm.
#[derive(Clone, Copy, PartialEq)]
pub struct FourQubitState {
    amps: [Complex64; 16],
}

impl FourQubitState {
    pub fn new(amps: [Complex64; 16]) -> Result<Self> {
        if let Some(r) = amps.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite(r));
        }
        let state = Self { amps };
        if state.norm_sqr() == 0.0 {
            return Err(Error::ZeroState);
        }
        Ok(state)
    }

    pub fn from_slice(amps: &[Complex64]) -> Result<Self> {
        let amps: [Complex64; 16] = amps
            .try_into()
            .map_err(|_| Error::WrongAmplitudeCount(amps.len()))?;
        Self::new(amps)
    }

    /// Builds a state from `(ket, amplitude)` pairs; kets are bit strings
    /// such as `"0110"`, slot 1 first.
    pub fn from_kets(kets: &[(&str, Complex64)]) -> Result<Self> {
        let mut amps = [Complex64::new(0.0, 0.0); 16];
        for &(ket, a) in kets {
            let r = usize::from_str_radix(ket, 2)
                .ok()
                .filter(|_| ket.len() == 4)
                .ok_or_else(|| Error::Malformed(format!("bad ket `{ket}`")))?;
            amps[r] += a;
        }
        Self::new(amps)
    }

    /// Tensor product of four single-qubit states.
    pub fn product(qubits: [[Complex64; 2]; 4]) -> Result<Self> {
        let mut amps = [Complex64::new(0.0, 0.0); 16];
        for (r, a) in amps.iter_mut().enumerate() {
            let [i, j, k, l] = labels(r);
            *a = qubits[0][i] * qubits[1][j] * qubits[2][k] * qubits[3][l];
        }
        Self::new(amps)
    }

    #[inline]
    pub fn amps(&self) -> &[Complex64; 16] {
        &self.amps
    }

    /// Amplitude `A_{ijkl}`.
    #[inline]
    pub fn amp(&self, i: usize, j: usize, k: usize, l: usize) -> Complex64 {
        self.amps[linear_index(i, j, k, l)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Returns the state divided by its norm.
    pub fn normalize(&self) -> Self {
        let n = self.norm_sqr().sqrt();
        Self {
            amps: self.amps.map(|a| a / n),
        }
    }

    pub fn scale(&self, factor: Complex64) -> Result<Self> {
        Self::new(self.amps.map(|a| a * factor))
    }

    pub fn standard(which: StandardState, params: &[Complex64]) -> Result<Self> {
        which.build(params)
    }
}

impl fmt::Debug for FourQubitState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_map();
        for (r, a) in self.amps.iter().enumerate() {
            if a.norm_sqr() != 0.0 {
                list.entry(&format_args!("{r:04b}"), a);
            }
        }
        list.finish()
    }
}

/// Named benchmark states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardState {
    /// GHZ state `(|0000⟩ + |1111⟩)/√2`.
    Phi1,
    /// `(√2|1111⟩ + |1000⟩ + |0100⟩ + |0010⟩ + |0001⟩)/√6`.
    Phi2,
    /// `½(|1111⟩ + |1100⟩ + |0010⟩ + |0001⟩)`.
    Phi3,
    /// `½(|1111⟩ + |1001⟩ + |0010⟩ + |0100⟩)`, slots 2 and 4 of `Phi3` swapped.
    Phi4,
    /// `½(|1111⟩ + |0101⟩ + |1000⟩ + |0010⟩)`, slots 1 and 4 of `Phi3` swapped.
    Phi5,
    /// `a|0000⟩ + b|0011⟩ + c|1100⟩ − d|1111⟩`.
    Pi1,
    /// `a|0000⟩ − b|0111⟩ − c|1010⟩ + d|1101⟩`.
    Pi2,
    /// `|0000⟩`.
    ProductBasis,
}

impl StandardState {
    pub const ALL: [StandardState; 8] = [
        Self::Phi1,
        Self::Phi2,
        Self::Phi3,
        Self::Phi4,
        Self::Phi5,
        Self::Pi1,
        Self::Pi2,
        Self::ProductBasis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Phi1 => "phi1",
            Self::Phi2 => "phi2",
            Self::Phi3 => "phi3",
            Self::Phi4 => "phi4",
            Self::Phi5 => "phi5",
            Self::Pi1 => "pi1",
            Self::Pi2 => "pi2",
            Self::ProductBasis => "product_basis",
        }
    }

    /// Number of coefficients the constructor expects.
    pub fn arity(self) -> usize {
        match self {
            Self::Pi1 | Self::Pi2 => 4,
            _ => 0,
        }
    }

    fn build(self, params: &[Complex64]) -> Result<FourQubitState> {
        if params.len() != self.arity() {
            return Err(Error::BadParams {
                name: self.name().to_string(),
                expected: self.arity(),
                got: params.len(),
            });
        }
        let c = |x: f64| Complex64::new(x, 0.0);
        let half = c(0.5);
        match self {
            Self::Phi1 => {
                let s = c(std::f64::consts::FRAC_1_SQRT_2);
                FourQubitState::from_kets(&[("0000", s), ("1111", s)])
            }
            Self::Phi2 => {
                let s = c(1.0 / 6f64.sqrt());
                FourQubitState::from_kets(&[
                    ("1111", s * 2f64.sqrt()),
                    ("1000", s),
                    ("0100", s),
                    ("0010", s),
                    ("0001", s),
                ])
            }
            Self::Phi3 => FourQubitState::from_kets(&[
                ("1111", half),
                ("1100", half),
                ("0010", half),
                ("0001", half),
            ]),
            Self::Phi4 => FourQubitState::from_kets(&[
                ("1111", half),
                ("1001", half),
                ("0010", half),
                ("0100", half),
            ]),
            Self::Phi5 => FourQubitState::from_kets(&[
                ("1111", half),
                ("0101", half),
                ("1000", half),
                ("0010", half),
            ]),
            Self::Pi1 => FourQubitState::from_kets(&[
                ("0000", params[0]),
                ("0011", params[1]),
                ("1100", params[2]),
                ("1111", -params[3]),
            ]),
            Self::Pi2 => FourQubitState::from_kets(&[
                ("0000", params[0]),
                ("0111", -params[1]),
                ("1010", -params[2]),
                ("1101", params[3]),
            ]),
            Self::ProductBasis => FourQubitState::from_kets(&[("0000", c(1.0))]),
        }
    }
}

impl FromStr for StandardState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::UnknownState(s.to_string()))
    }
}

impl fmt::Display for StandardState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
