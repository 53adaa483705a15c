//! Reference evaluation by summing over raw index assignments.
//!
//! Every copy's linear index ranges over all sixteen values and every pair
//! contributes an explicit lookup in [`EPSILON`]. The only shortcut is that
//! a branch whose partial product is already zero is not descended.

use num_complex::Complex64;

use super::{PairingPattern, PairingTerm, EPSILON, MAX_ORACLE_DEGREE};
use crate::state::{labels, FourQubitState};
use crate::{Error, Result};

struct Oracle<'a> {
    amps: &'a [Complex64; 16],
    /// `closing[c]` lists `(slot, other copy, c is first in the pair)` for
    /// every pair whose later copy is `c`.
    closing: Vec<Vec<(usize, usize, bool)>>,
    chosen: Vec<usize>,
}

impl Oracle<'_> {
    fn sum(&mut self, copy: usize, prod: Complex64) -> Complex64 {
        if copy == self.chosen.len() {
            return prod;
        }
        let mut total = Complex64::new(0.0, 0.0);
        for r in 0..16 {
            self.chosen[copy] = r;
            let mine = labels(r);
            let mut factor = self.amps[r];
            for &(slot, other, first) in &self.closing[copy] {
                let theirs = labels(self.chosen[other])[slot];
                factor *= if first {
                    EPSILON[mine[slot]][theirs]
                } else {
                    EPSILON[theirs][mine[slot]]
                };
            }
            let next = prod * factor;
            if next.re != 0.0 || next.im != 0.0 {
                total += self.sum(copy + 1, next);
            }
        }
        total
    }
}

fn naive_term(amps: &[Complex64; 16], term: &PairingTerm) -> Complex64 {
    let mut copies: Vec<usize> = term.slots()[0].iter().flat_map(|&(p, q)| [p, q]).collect();
    copies.sort_unstable();
    let local = |c: usize| copies.binary_search(&c).expect("validated copy");
    let mut closing = vec![Vec::new(); copies.len()];
    for (slot, pairs) in term.slots().iter().enumerate() {
        for &(p, q) in pairs {
            let (p, q) = (local(p), local(q));
            if p > q {
                closing[p].push((slot, q, true));
            } else {
                closing[q].push((slot, p, false));
            }
        }
    }
    let mut oracle = Oracle {
        amps,
        closing,
        chosen: vec![0; copies.len()],
    };
    term.weight() * oracle.sum(0, Complex64::new(1.0, 0.0))
}

/// Same value as [`super::evaluate`], computed over all `2^{4d}` index
/// assignments. Rejects patterns of degree above 6.
pub fn evaluate_naive(state: &FourQubitState, pattern: &PairingPattern) -> Result<Complex64> {
    if pattern.degree() > MAX_ORACLE_DEGREE {
        return Err(Error::OracleGuard(pattern.degree()));
    }
    Ok(pattern
        .groups()
        .iter()
        .map(|terms| terms.iter().map(|t| naive_term(state.amps(), t)).sum::<Complex64>())
        .product())
}
