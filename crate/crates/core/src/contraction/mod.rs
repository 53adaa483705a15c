//! Levi-Civita contractions over copies of the state tensor.
//!
//! A [`PairingTerm`] pairs up copies of the state separately in each of the
//! four slots; every pair `(p, q)` in slot `s` contributes a factor
//! `ε_{x_p x_q}` where `x_c` is the slot-`s` index of copy `c`. A
//! [`PairingPattern`] is a weighted sum of such terms, or a product of
//! several such sums over disjoint sets of copies.

mod builtin;
mod comb;
mod eval;
mod naive;

use std::collections::BTreeSet;
use std::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

pub use builtin::{builtin_pattern, PatternLibrary, BUILTIN_NAMES};
pub use comb::{comb_lhs, comb_rhs, verify_comb_identity};
pub use eval::evaluate;
pub use naive::evaluate_naive;

/// `ε = iσ_y`: `ε_{01} = +1`, `ε_{10} = −1`, zero on the diagonal.
pub const EPSILON: [[f64; 2]; 2] = [[0.0, 1.0], [-1.0, 0.0]];

pub const MAX_DEGREE: usize = 12;
pub const MAX_ORACLE_DEGREE: usize = 6;

/// One weighted product of ε factors; copies are labeled from 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PairingTerm {
    slots: [Vec<(usize, usize)>; 4],
    weight: Complex64,
}

impl PairingTerm {
    /// Every slot must be a perfect matching on the same set of copies.
    pub fn new(slots: [Vec<(usize, usize)>; 4], weight: impl Into<Complex64>) -> Result<Self> {
        let term = Self {
            slots,
            weight: weight.into(),
        };
        term.copies()?;
        Ok(term)
    }

    pub fn slots(&self) -> &[Vec<(usize, usize)>; 4] {
        &self.slots
    }

    pub fn weight(&self) -> Complex64 {
        self.weight
    }

    pub fn with_weight(&self, weight: impl Into<Complex64>) -> Self {
        Self {
            weight: weight.into(),
            ..self.clone()
        }
    }

    /// The same term with the `index`-th pair of `slot` written in reverse
    /// order, which negates its value.
    pub fn with_reversed_pair(&self, slot: usize, index: usize) -> Self {
        let mut out = self.clone();
        let (p, q) = out.slots[slot][index];
        out.slots[slot][index] = (q, p);
        out
    }

    pub fn degree(&self) -> usize {
        2 * self.slots[0].len()
    }

    /// The set of copies the term covers, after checking every slot matches
    /// it perfectly.
    fn copies(&self) -> Result<BTreeSet<usize>> {
        let mut reference: Option<BTreeSet<usize>> = None;
        for (s, pairs) in self.slots.iter().enumerate() {
            if pairs.is_empty() {
                return Err(Error::InvalidPattern(format!("slot {} has no pairs", s + 1)));
            }
            let mut seen = BTreeSet::new();
            for &(p, q) in pairs {
                if p == 0 || q == 0 {
                    return Err(Error::InvalidPattern("copy labels start at 1".into()));
                }
                if p == q {
                    return Err(Error::InvalidPattern(format!("slot {}: pair ({p},{q}) repeats a copy", s + 1)));
                }
                if !seen.insert(p) || !seen.insert(q) {
                    return Err(Error::InvalidPattern(format!(
                        "slot {}: a copy appears in two pairs",
                        s + 1
                    )));
                }
            }
            match &reference {
                None => reference = Some(seen),
                Some(r) if *r != seen => {
                    return Err(Error::InvalidPattern(format!(
                        "slot {} pairs a different set of copies than slot 1",
                        s + 1
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(reference.expect("four slots"))
    }
}

/// A weighted sum of pairing terms, or a product of such sums.
#[derive(Debug, Clone, PartialEq)]
pub struct PairingPattern {
    groups: Vec<Vec<PairingTerm>>,
    degree: usize,
}

impl PairingPattern {
    /// A plain sum; every term must pair copies `1..=d`.
    pub fn sum(terms: Vec<PairingTerm>) -> Result<Self> {
        Self::product(vec![terms])
    }

    /// A product of sums. Terms within a group cover the same copies, the
    /// groups' copy sets are disjoint, and together they cover `1..=d`.
    pub fn product(groups: Vec<Vec<PairingTerm>>) -> Result<Self> {
        if groups.is_empty() || groups.iter().any(Vec::is_empty) {
            return Err(Error::InvalidPattern("empty pattern or group".into()));
        }
        let mut all = BTreeSet::new();
        for (g, terms) in groups.iter().enumerate() {
            let copies = terms[0].copies()?;
            for t in &terms[1..] {
                if t.copies()? != copies {
                    return Err(Error::InvalidPattern(format!(
                        "group {}: terms cover different copies",
                        g + 1
                    )));
                }
            }
            for c in copies {
                if !all.insert(c) {
                    return Err(Error::InvalidPattern(format!("copy {c} appears in two groups")));
                }
            }
        }
        let degree = all.len();
        if degree > MAX_DEGREE {
            return Err(Error::DegreeOverflow(degree));
        }
        if all.iter().copied().ne(1..=degree) {
            return Err(Error::InvalidPattern(format!("copies must be labeled 1..={degree}")));
        }
        Ok(Self { groups, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn groups(&self) -> &[Vec<PairingTerm>] {
        &self.groups
    }

    pub fn is_product(&self) -> bool {
        self.groups.len() > 1
    }

    pub fn term_count(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// Multiplies out a product pattern into a single sum of full-degree
    /// terms.
    pub fn expand(&self) -> Self {
        let mut acc: Vec<PairingTerm> = vec![PairingTerm {
            slots: Default::default(),
            weight: Complex64::new(1.0, 0.0),
        }];
        for group in &self.groups {
            let mut next = Vec::with_capacity(acc.len() * group.len());
            for a in &acc {
                for t in group {
                    let mut slots = a.slots.clone();
                    for (s, pairs) in slots.iter_mut().enumerate() {
                        pairs.extend_from_slice(&t.slots[s]);
                    }
                    next.push(PairingTerm {
                        slots,
                        weight: a.weight * t.weight,
                    });
                }
            }
            acc = next;
        }
        Self {
            groups: vec![acc],
            degree: self.degree,
        }
    }

    /// Returns a copy with the weight of one term replaced.
    pub fn with_term_weight(&self, group: usize, term: usize, weight: impl Into<Complex64>) -> Self {
        let mut out = self.clone();
        out.groups[group][term] = out.groups[group][term].with_weight(weight);
        out
    }
}

fn fmt_weight(w: Complex64) -> String {
    if w.im == 0.0 {
        format!("{}", w.re)
    } else {
        let sign = if w.im < 0.0 { '-' } else { '+' };
        format!("{}{}{}i", w.re, sign, w.im.abs())
    }
}

/// One line per term: `slot1: (1,2)(3,4) | slot2: … | slot4: … weight=0.5`.
/// Product patterns get a `group N:` header before each group.
impl fmt::Display for PairingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, terms) in self.groups.iter().enumerate() {
            if self.is_product() {
                writeln!(f, "group {}:", g + 1)?;
            }
            for t in terms {
                let slots: Vec<String> = t
                    .slots
                    .iter()
                    .enumerate()
                    .map(|(s, pairs)| {
                        let body: String = pairs.iter().map(|(p, q)| format!("({p},{q})")).collect();
                        format!("slot{}: {body}", s + 1)
                    })
                    .collect();
                writeln!(f, "{} weight={}", slots.join(" | "), fmt_weight(t.weight))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h_term() -> PairingTerm {
        PairingTerm::new(std::array::from_fn(|_| vec![(1, 2)]), 0.5).unwrap()
    }

    #[test]
    fn rejects_invalid_terms() {
        let bad = |slots: [Vec<(usize, usize)>; 4]| PairingTerm::new(slots, 1.0).unwrap_err();
        assert!(matches!(
            bad([vec![(1, 1)], vec![(1, 2)], vec![(1, 2)], vec![(1, 2)]]),
            Error::InvalidPattern(_)
        ));
        assert!(matches!(
            bad([vec![(1, 2), (2, 3)], vec![(1, 2), (3, 4)], vec![(1, 2), (3, 4)], vec![(1, 2), (3, 4)]]),
            Error::InvalidPattern(_)
        ));
        assert!(matches!(
            bad([vec![(1, 2)], vec![(1, 3)], vec![(1, 2)], vec![(1, 2)]]),
            Error::InvalidPattern(_)
        ));
        assert!(matches!(
            bad([vec![], vec![(1, 2)], vec![(1, 2)], vec![(1, 2)]]),
            Error::InvalidPattern(_)
        ));
    }

    #[test]
    fn rejects_invalid_patterns() {
        let t34 = PairingTerm::new(std::array::from_fn(|_| vec![(3, 4)]), 1.0).unwrap();
        assert!(PairingPattern::sum(vec![t34.clone()]).is_err());
        assert!(PairingPattern::sum(vec![h_term(), t34.clone()]).is_err());
        assert!(PairingPattern::product(vec![vec![h_term()], vec![h_term()]]).is_err());
        assert!(PairingPattern::product(vec![vec![h_term()], vec![t34]]).is_ok());
        assert!(PairingPattern::sum(vec![]).is_err());

        let pairs: Vec<(usize, usize)> = (0..7).map(|k| (2 * k + 1, 2 * k + 2)).collect();
        let big = PairingTerm::new(std::array::from_fn(|_| pairs.clone()), 1.0).unwrap();
        assert_eq!(PairingPattern::sum(vec![big]), Err(Error::DegreeOverflow(14)));
    }

    #[test]
    fn render_format_is_stable() {
        let p = PairingPattern::sum(vec![h_term()]).unwrap();
        assert_eq!(
            p.to_string(),
            "slot1: (1,2) | slot2: (1,2) | slot3: (1,2) | slot4: (1,2) weight=0.5\n"
        );
        let f3 = builtin_pattern("F3").unwrap();
        let text = f3.to_string();
        assert!(text.starts_with(
            "group 1:\nslot1: (1,3)(2,4) | slot2: (1,3)(2,4) | slot3: (1,2)(3,4) | slot4: (1,2)(3,4) weight=4\n"
        ));
        assert!(text.contains(
            "group 3:\nslot1: (9,10)(11,12) | slot2: (9,11)(10,12) | slot3: (9,11)(10,12) | slot4: (9,10)(11,12) weight=1\n"
        ));
        assert_eq!(fmt_weight(Complex64::new(1.0, -2.0)), "1-2i");
    }

    #[test]
    fn expand_multiplies_out() {
        let f3 = builtin_pattern("F3").unwrap();
        let flat = f3.expand();
        assert_eq!(flat.groups().len(), 1);
        assert_eq!(flat.term_count(), 8);
        assert_eq!(flat.degree(), 12);
        assert!(flat.groups()[0].iter().all(|t| t.degree() == 12 && t.weight() == Complex64::new(4.0, 0.0)));
        assert_eq!(PairingPattern::sum(flat.groups()[0].clone()).unwrap(), flat);
    }
}
