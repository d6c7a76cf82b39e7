//! Harish-Chandra induction and restriction of unipotent representations
//! along the Levi `GL(a) x Sp(2n')` inside `Sp(2n)`, computed through
//! Pieri strips on the bipartition labels. The series index `delta` is
//! preserved by both functors.

use std::fmt;

use crate::error::{Error, Result};
use crate::symbols::{from_label, Symbol, UnipotentLabel};

/// A multiset of symbols, kept sorted. Outputs of single-step induction and
/// restriction are multiplicity-free; multisets are used so that iterated
/// inductions can be observed with their genuine multiplicities.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RepMultiset {
    entries: Vec<Symbol>,
}

impl RepMultiset {
    pub fn new(mut entries: Vec<Symbol>) -> Self {
        entries.sort();
        RepMultiset { entries }
    }

    pub fn empty() -> Self {
        RepMultiset::default()
    }

    pub fn singleton(s: Symbol) -> Self {
        RepMultiset { entries: vec![s] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.entries.binary_search(s).is_ok()
    }

    /// Distinct symbols, in order.
    pub fn support(&self) -> Vec<Symbol> {
        let mut out = self.entries.clone();
        out.dedup();
        out
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] != w[1])
    }

    pub fn merge(&self, other: &RepMultiset) -> RepMultiset {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        RepMultiset::new(entries)
    }
}

impl FromIterator<Symbol> for RepMultiset {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        RepMultiset::new(iter.into_iter().collect())
    }
}

impl fmt::Display for RepMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for RepMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Harish-Chandra induction of `1 boxtimes rho_s` from `GL(a) x Sp(2n')` to
/// `Sp(2(n'+a))`: all ways of adding `a` boxes to the bipartition label as a
/// pair of horizontal strips. Multiplicity-free.
pub fn induce(a: u32, s: &Symbol) -> RepMultiset {
    let label = s.to_label();
    label
        .bip
        .expansions(a)
        .into_iter()
        .map(|bip| from_label(&UnipotentLabel::new(label.delta, bip)))
        .collect()
}

/// The symplectic part of Harish-Chandra restriction from `Sp(2n)` to
/// `GL(a) x Sp(2(n-a))`: all ways of removing `a` boxes as a pair of
/// horizontal strips. May be empty (cuspidal symbols restrict to nothing).
pub fn restrict_sp(a: u32, s: &Symbol) -> Result<RepMultiset> {
    let rank = s.rank();
    if a > rank {
        return Err(Error::RankUnderflow { amount: a, rank });
    }
    let label = s.to_label();
    Ok(label
        .bip
        .contractions(a)
        .into_iter()
        .map(|bip| from_label(&UnipotentLabel::new(label.delta, bip)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::symbols::enumerate_symbols;

    fn sym(top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn label(delta: u32, first: &[u32], second: &[u32]) -> Symbol {
        from_label(&UnipotentLabel::new(
            delta,
            Bipartition::new(Partition::new(first.to_vec()), Partition::new(second.to_vec())),
        ))
    }

    #[test]
    fn induce_examples() {
        // Steinberg of Sp(2) induced one step up
        let got = induce(1, &sym(&[0, 1], &[1]));
        let expect: RepMultiset = [
            label(0, &[1], &[1]),
            label(0, &[], &[2]),
            label(0, &[], &[1, 1]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);
        assert!(got.iter().all(|s| s.rank() == 2));

        let s = sym(&[0, 2], &[1]);
        assert_eq!(induce(0, &s), RepMultiset::singleton(s));

        let got = induce(1, &sym(&[0, 1, 2], &[]));
        let expect: RepMultiset = [label(1, &[1], &[]), label(1, &[], &[1])]
            .into_iter()
            .collect();
        assert_eq!(got, expect);
        assert!(got.iter().all(|s| s.rank() == 3 && s.defect() == 3));
    }

    #[test]
    fn restrict_examples() {
        let got = restrict_sp(1, &sym(&[0, 2], &[1])).unwrap();
        let expect: RepMultiset = [label(0, &[], &[1]), label(0, &[1], &[])]
            .into_iter()
            .collect();
        assert_eq!(got, expect);

        // the cuspidal restricts to nothing
        assert!(restrict_sp(1, &sym(&[0, 1, 2], &[])).unwrap().is_empty());

        let s = sym(&[1, 2], &[0]);
        assert_eq!(restrict_sp(0, &s).unwrap(), RepMultiset::singleton(s));

        assert!(matches!(
            restrict_sp(3, &sym(&[2], &[])),
            Err(Error::RankUnderflow { amount: 3, rank: 2 })
        ));
    }

    #[test]
    fn single_step_outputs_are_multiplicity_free() {
        for theta in 1..=4u32 {
            for s in enumerate_symbols(theta) {
                for a in 0..=3u32 {
                    assert!(induce(a, &s).is_multiplicity_free());
                    assert!(restrict_sp(a.min(theta), &s).unwrap().is_multiplicity_free());
                }
            }
        }
    }

    #[test]
    fn frobenius_reciprocity_exhaustive() {
        // t in induce(a, s) iff s in restrict_sp(a, t), ranks up to 5
        for theta_small in 0..=4u32 {
            for a in 0..=3u32 {
                let theta_big = theta_small + a;
                if theta_big > 5 {
                    continue;
                }
                for s in enumerate_symbols(theta_small) {
                    let up = induce(a, &s);
                    for t in up.iter() {
                        assert!(
                            restrict_sp(a, t).unwrap().contains(&s),
                            "reciprocity fails: {s} -> {t}, a={a}"
                        );
                    }
                }
                for t in enumerate_symbols(theta_big) {
                    let down = restrict_sp(a, &t).unwrap();
                    for s in down.iter() {
                        assert!(
                            induce(a, s).contains(&t),
                            "reciprocity fails: {t} -> {s}, a={a}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transitivity_on_support() {
        // two-step induction hits the same support as one-step; the one-step
        // output stays multiplicity-free while the flattened two-step count
        // of a target equals its number of intermediate shapes
        for theta in 0..=3u32 {
            for s in enumerate_symbols(theta) {
                for a in 0..=2u32 {
                    for b in 0..=2u32 {
                        if theta + a + b > 5 {
                            continue;
                        }
                        let direct = induce(a + b, &s);
                        let mut flattened = Vec::new();
                        for mid in induce(b, &s).iter() {
                            flattened.extend(induce(a, mid).iter().cloned());
                        }
                        let two_step = RepMultiset::new(flattened);
                        assert_eq!(direct.support(), two_step.support());
                        assert!(direct.is_multiplicity_free());
                    }
                }
            }
        }
    }

    #[test]
    fn delta_is_preserved() {
        for theta in 1..=4u32 {
            for s in enumerate_symbols(theta) {
                for a in 0..=2u32 {
                    for t in induce(a, &s).iter() {
                        assert_eq!(t.delta(), s.delta());
                    }
                    for t in restrict_sp(a.min(theta), &s).unwrap().iter() {
                        assert_eq!(t.delta(), s.delta());
                    }
                }
            }
        }
    }
}
