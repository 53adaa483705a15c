//! The named contraction patterns, with every numeric prefactor carried in
//! the term weights so that pattern values equal the invariants directly.

use std::collections::BTreeMap;

use super::{PairingPattern, PairingTerm};
use crate::{Error, Result};

pub const BUILTIN_NAMES: [&str; 12] = [
    "H", "NmM", "MmL", "LmN", "L", "M", "N", "Dsum", "Dxt", "F1", "F2", "F3",
];

type Pairs = &'static [(usize, usize)];

fn term(weight: f64, [i, j, k, l]: [Pairs; 4]) -> PairingTerm {
    PairingTerm::new([i.to_vec(), j.to_vec(), k.to_vec(), l.to_vec()], weight)
        .expect("builtin terms are valid")
}

fn sum(terms: Vec<PairingTerm>) -> PairingPattern {
    PairingPattern::sum(terms).expect("builtin patterns are valid")
}

const P12_34: Pairs = &[(1, 2), (3, 4)];
const P13_24: Pairs = &[(1, 3), (2, 4)];
const P14_23: Pairs = &[(1, 4), (2, 3)];

/// `ε_{i1i2}ε_{i3i4}` times the given j, k, l matchings: the shape shared by
/// the degree-4 patterns.
fn quartic(weight: f64, jkl: [Pairs; 3]) -> PairingTerm {
    term(weight, [P12_34, jkl[0], jkl[1], jkl[2]])
}

// j, k, l matchings of the three degree-4 differences.
const N_MINUS_M: [Pairs; 3] = [P12_34, P13_24, P14_23];
const M_MINUS_L: [Pairs; 3] = [P13_24, P14_23, P12_34];
const L_MINUS_N: [Pairs; 3] = [P14_23, P12_34, P13_24];

fn dsum_term(weight: f64) -> PairingTerm {
    term(
        weight,
        [
            &[(1, 2), (3, 4), (5, 6)],
            &[(1, 3), (2, 4), (5, 6)],
            &[(1, 5), (2, 6), (3, 4)],
            &[(1, 2), (3, 5), (4, 6)],
        ],
    )
}

/// Pattern by name:
///
/// | name | degree | value |
/// |------|--------|-------|
/// | `H` | 2 | `H` |
/// | `NmM`, `MmL`, `LmN` | 4 | `4(N−M)`, `4(M−L)`, `4(L−N)` |
/// | `L`, `M`, `N` | 4 | `L`, `M`, `N` |
/// | `Dsum` | 6 | `4(Dxz + Dxt + Dxy)` |
/// | `Dxt` | 6 | `Dxt` |
/// | `F1`, `F2`, `F3` | 6, 8, 12 | the complex quantities whose moduli are `|F1|`, `|F2|`, `|F3|` |
pub fn builtin_pattern(name: &str) -> Result<PairingPattern> {
    let pattern = match name {
        "H" => sum(vec![term(0.5, [&[(1, 2)]; 4])]),
        "NmM" => sum(vec![quartic(1.0, N_MINUS_M)]),
        "MmL" => sum(vec![quartic(1.0, M_MINUS_L)]),
        "LmN" => sum(vec![quartic(1.0, L_MINUS_N)]),
        "L" => sum(vec![quartic(1.0 / 12.0, L_MINUS_N), quartic(-1.0 / 12.0, M_MINUS_L)]),
        "M" => sum(vec![quartic(1.0 / 12.0, M_MINUS_L), quartic(-1.0 / 12.0, N_MINUS_M)]),
        "N" => sum(vec![quartic(1.0 / 12.0, N_MINUS_M), quartic(-1.0 / 12.0, L_MINUS_N)]),
        "Dsum" => sum(vec![dsum_term(1.0)]),
        "Dxt" => sum(vec![
            dsum_term(1.0 / 12.0),
            term(
                1.0 / 24.0,
                [
                    &[(1, 2), (3, 4), (5, 6)],
                    &[(1, 2), (3, 5), (4, 6)],
                    &[(1, 2), (3, 6), (4, 5)],
                    &[(1, 2), (3, 4), (5, 6)],
                ],
            ),
        ]),
        "F1" => {
            let jkl: [Pairs; 3] = [
                &[(1, 5), (3, 4), (2, 6)],
                &[(1, 2), (3, 5), (4, 6)],
                &[(1, 2), (3, 4), (5, 6)],
            ];
            sum(vec![
                term(4.0, [&[(1, 3), (2, 4), (5, 6)], jkl[0], jkl[1], jkl[2]]),
                term(4.0, [&[(1, 4), (2, 3), (5, 6)], jkl[0], jkl[1], jkl[2]]),
            ])
        }
        "F2" => {
            let jkl: [Pairs; 3] = [
                &[(1, 5), (3, 4), (2, 6), (7, 8)],
                &[(1, 2), (3, 7), (5, 6), (4, 8)],
                &[(1, 2), (3, 4), (5, 7), (6, 8)],
            ];
            sum(vec![
                term(8.0, [&[(1, 3), (2, 4), (5, 6), (7, 8)], jkl[0], jkl[1], jkl[2]]),
                term(8.0, [&[(1, 4), (2, 3), (5, 6), (7, 8)], jkl[0], jkl[1], jkl[2]]),
            ])
        }
        "F3" => {
            let first = vec![
                term(4.0, [P13_24, P13_24, P12_34, P12_34]),
                term(4.0, [P14_23, P13_24, P12_34, P12_34]),
            ];
            let second = vec![
                term(1.0, [&[(5, 7), (6, 8)], &[(5, 6), (7, 8)], &[(5, 7), (6, 8)], &[(5, 6), (7, 8)]]),
                term(1.0, [&[(5, 8), (6, 7)], &[(5, 6), (7, 8)], &[(5, 7), (6, 8)], &[(5, 6), (7, 8)]]),
            ];
            // The k-slot of the last factor pairs copies 9..12 the same way
            // the second factor pairs 5..8.
            let third = vec![
                term(
                    1.0,
                    [&[(9, 10), (11, 12)], &[(9, 11), (10, 12)], &[(9, 11), (10, 12)], &[(9, 10), (11, 12)]],
                ),
                term(
                    1.0,
                    [&[(9, 10), (11, 12)], &[(9, 12), (10, 11)], &[(9, 11), (10, 12)], &[(9, 10), (11, 12)]],
                ),
            ];
            PairingPattern::product(vec![first, second, third]).expect("builtin patterns are valid")
        }
        other => return Err(Error::UnknownPattern(other.to_string())),
    };
    Ok(pattern)
}

/// A set of named patterns consulted by the tensor-route computations.
///
/// [`PatternLibrary::standard`] holds the builtins; replacing an entry lets
/// tests run the cross-checks against a deliberately corrupted pattern.
#[derive(Debug, Clone)]
pub struct PatternLibrary {
    patterns: BTreeMap<&'static str, PairingPattern>,
}

impl PatternLibrary {
    pub fn standard() -> Self {
        let patterns = BUILTIN_NAMES
            .iter()
            .map(|&n| (n, builtin_pattern(n).expect("builtin")))
            .collect();
        Self { patterns }
    }

    pub fn get(&self, name: &str) -> &PairingPattern {
        &self.patterns[name]
    }

    pub fn replace(&mut self, name: &'static str, pattern: PairingPattern) {
        self.patterns.insert(name, pattern);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &PairingPattern)> {
        self.patterns.iter().map(|(n, p)| (*n, p))
    }
}

impl Default for PatternLibrary {
    fn default() -> Self {
        Self::standard()
    }
}
