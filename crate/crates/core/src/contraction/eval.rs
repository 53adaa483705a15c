//! Evaluation by enumerating ε-pair orientations.
//!
//! Each pair `(p, q)` has exactly two nonzero assignments: copy `p` takes
//! bit 0 and `q` bit 1 (`ε_{01} = +1`), or the reverse (`ε_{10} = −1`). A
//! term of degree `d` has `2d` pairs, so `2^{2d}` orientations instead of
//! `2^{4d}` raw index assignments. Orientations are walked depth-first with
//! pairs ordered so that copies complete early; each completed copy
//! multiplies its amplitude into the running product and zero products
//! prune their subtree.

use num_complex::Complex64;

use super::{PairingPattern, PairingTerm};
use crate::state::FourQubitState;

struct Step {
    /// Bit weight of the slot in the linear index.
    bit: usize,
    p: usize,
    q: usize,
    /// Local copies whose four indices are fixed once this pair is set.
    completes: Vec<usize>,
}

struct Plan {
    steps: Vec<Step>,
    copies: usize,
}

impl Plan {
    fn new(term: &PairingTerm) -> Self {
        let mut labels: Vec<usize> = term.slots[0].iter().flat_map(|&(p, q)| [p, q]).collect();
        labels.sort_unstable();
        let local = |c: usize| labels.binary_search(&c).expect("validated copy");

        let mut steps: Vec<Step> = term
            .slots
            .iter()
            .enumerate()
            .flat_map(|(s, pairs)| {
                pairs.iter().map(move |&(p, q)| (s, p, q))
            })
            .map(|(s, p, q)| Step {
                bit: 8 >> s,
                p: local(p),
                q: local(q),
                completes: Vec::new(),
            })
            .collect();
        steps.sort_by_key(|st| (st.p.max(st.q), st.p.min(st.q), st.bit));

        let mut remaining = vec![4usize; labels.len()];
        for st in &mut steps {
            for c in [st.p, st.q] {
                remaining[c] -= 1;
                if remaining[c] == 0 {
                    st.completes.push(c);
                }
            }
        }
        Self {
            steps,
            copies: labels.len(),
        }
    }
}

struct Walker<'a> {
    plan: &'a Plan,
    amps: &'a [Complex64; 16],
    index: Vec<usize>,
}

impl Walker<'_> {
    fn walk(&mut self, depth: usize, prod: Complex64) -> Complex64 {
        let Some(step) = self.plan.steps.get(depth) else {
            return prod;
        };
        let mut total = Complex64::new(0.0, 0.0);
        // ε_{01} = +1: q carries the set bit; ε_{10} = −1: p carries it.
        for (holder, sign) in [(step.q, 1.0), (step.p, -1.0)] {
            self.index[holder] |= step.bit;
            let mut next = prod * sign;
            for &c in &step.completes {
                next *= self.amps[self.index[c]];
            }
            if next.re != 0.0 || next.im != 0.0 {
                total += self.walk(depth + 1, next);
            }
            self.index[holder] &= !step.bit;
        }
        total
    }
}

pub(crate) fn evaluate_term(amps: &[Complex64; 16], term: &PairingTerm) -> Complex64 {
    let plan = Plan::new(term);
    let mut walker = Walker {
        plan: &plan,
        amps,
        index: vec![0; plan.copies],
    };
    term.weight * walker.walk(0, Complex64::new(1.0, 0.0))
}

/// Value of `pattern` on `state`: the weighted sum over terms, with the
/// group sums multiplied for product patterns.
///
/// Costs `O(terms · 2^{2d})` per group in the worst case; degree-12 sums
/// are practical, and product patterns only pay for their largest group.
pub fn evaluate(state: &FourQubitState, pattern: &PairingPattern) -> Complex64 {
    pattern
        .groups()
        .iter()
        .map(|terms| terms.iter().map(|t| evaluate_term(state.amps(), t)).sum::<Complex64>())
        .product()
}
