//! Partitions, bipartitions, and the horizontal-strip calculus behind
//! Pieri's rule for type B/C.
//!
//! A horizontal strip is a set of boxes no two of which share a column.
//! Adding (removing) a strip of size `d` to a Young diagram is equivalent to
//! choosing new row lengths interleaving the old ones, which is how the
//! enumeration below works: no box-by-box simulation.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A partition: non-increasing positive parts. The empty sequence is the
/// unique partition of 0. Zero parts are dropped and parts re-sorted on
/// construction, so the paper's occasional zero-padded rows normalize away.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-indexed), 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `(m, 1^k)` shapes, the bipartition components of Coxeter cohomology.
    /// `m = 0` yields `(1^k)` and `k = 0` yields `(m)`.
    pub fn hook_shape(m: u32, k: u32) -> Self {
        let mut parts = vec![1u32; k as usize];
        if m > 0 {
            parts.insert(0, m);
        }
        Partition::new(parts)
    }

    /// The column `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    /// The row `(n)`, empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    /// All partitions obtained by adding a horizontal strip of `d` boxes.
    /// `d = 0` gives `{self}`.
    pub fn add_strip(&self, d: u32) -> BTreeSet<Partition> {
        // New rows satisfy new[j] in [old[j], old[j-1]] with one extra row
        // allowed at the bottom, and the added boxes sum to d.
        let mut out = BTreeSet::new();
        let mut acc = Vec::with_capacity(self.parts.len() + 1);
        self.add_strip_rec(0, d, &mut acc, &mut out);
        out
    }

    fn add_strip_rec(
        &self,
        row: usize,
        remaining: u32,
        acc: &mut Vec<u32>,
        out: &mut BTreeSet<Partition>,
    ) {
        if row == self.parts.len() + 1 {
            if remaining == 0 {
                out.insert(Partition::new(acc.clone()));
            }
            return;
        }
        let lo = self.part(row);
        let cap = if row == 0 { u32::MAX } else { self.parts[row - 1] };
        let hi = cap.min(lo.saturating_add(remaining));
        for v in lo..=hi {
            acc.push(v);
            self.add_strip_rec(row + 1, remaining - (v - lo), acc, out);
            acc.pop();
        }
    }

    /// All partitions obtained by removing a horizontal strip of `d` boxes;
    /// empty when impossible.
    pub fn remove_strip(&self, d: u32) -> BTreeSet<Partition> {
        let mut out = BTreeSet::new();
        let mut acc = Vec::with_capacity(self.parts.len());
        self.remove_strip_rec(0, d, &mut acc, &mut out);
        out
    }

    fn remove_strip_rec(
        &self,
        row: usize,
        remaining: u32,
        acc: &mut Vec<u32>,
        out: &mut BTreeSet<Partition>,
    ) {
        if row == self.parts.len() {
            if remaining == 0 {
                out.insert(Partition::new(acc.clone()));
            }
            return;
        }
        // new[j] in [old[j+1], old[j]], removing old[j] - new[j] boxes
        let hi = self.parts[row];
        let lo = self.part(row + 1).max(hi.saturating_sub(remaining));
        for v in lo..=hi {
            acc.push(v);
            self.remove_strip_rec(row + 1, remaining - (hi - v), acc, out);
            acc.pop();
        }
    }

    /// All partitions of `n`, lexicographically from `(n)` down to `(1^n)`.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for part in (1..=n.min(max)).rev() {
                prefix.push(part);
                go(n - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::new(Partition::empty(), Partition::empty())
    }

    pub fn size(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    /// All bipartitions reached by distributing `a` added boxes over the two
    /// diagrams as horizontal strips.
    pub fn expansions(&self, a: u32) -> BTreeSet<Bipartition> {
        let mut out = BTreeSet::new();
        for d in 0..=a {
            for f in self.first.add_strip(d) {
                for s in self.second.add_strip(a - d) {
                    out.insert(Bipartition::new(f.clone(), s));
                }
            }
        }
        out
    }

    /// All bipartitions reached by removing `a` boxes as horizontal strips;
    /// empty when impossible.
    pub fn contractions(&self, a: u32) -> BTreeSet<Bipartition> {
        let mut out = BTreeSet::new();
        for d in 0..=a {
            for f in self.first.remove_strip(d) {
                for s in self.second.remove_strip(a - d) {
                    out.insert(Bipartition::new(f.clone(), s));
                }
            }
        }
        out
    }

    /// All bipartitions of `n`.
    pub fn all(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in 0..=n {
            for first in Partition::all(k) {
                for second in Partition::all(n - k) {
                    out.push(Bipartition::new(first.clone(), second));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn set(ps: &[&[u32]]) -> BTreeSet<Partition> {
        ps.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn construction_normalizes() {
        assert_eq!(p(&[0, 3, 1, 0]).parts(), &[3, 1]);
        assert_eq!(p(&[1, 2]).parts(), &[2, 1]);
        assert!(p(&[0, 0]).is_empty());
    }

    #[test]
    fn add_strip_examples() {
        assert_eq!(p(&[3, 1]).add_strip(1), set(&[&[4, 1], &[3, 2], &[3, 1, 1]]));
        // both boxes in column 1 would be vertical: only the row survives
        assert_eq!(Partition::empty().add_strip(2), set(&[&[2]]));
        assert_eq!(p(&[1]).add_strip(1), set(&[&[2], &[1, 1]]));
        assert_eq!(p(&[2, 1]).add_strip(0), set(&[&[2, 1]]));
    }

    #[test]
    fn remove_strip_examples() {
        assert_eq!(p(&[2]).remove_strip(1), set(&[&[1]]));
        assert!(p(&[1, 1]).remove_strip(2).is_empty());
        // frozen from the inverse-image oracle exercised below
        assert_eq!(p(&[3, 1]).remove_strip(1), set(&[&[2, 1], &[3]]));
        assert_eq!(p(&[3, 1]).remove_strip(4), set(&[]));
        assert_eq!(p(&[3, 1]).remove_strip(3), set(&[&[1]]));
    }

    #[test]
    fn strip_duality_exhaustive() {
        // t' in add_strip(t, d) iff t in remove_strip(t', d), |t| <= 8, d <= 4
        for n in 0..=8u32 {
            for t in Partition::all(n) {
                for d in 0..=4u32 {
                    for bigger in t.add_strip(d) {
                        assert!(
                            bigger.remove_strip(d).contains(&t),
                            "missing inverse: {t} -> {bigger}, d={d}"
                        );
                    }
                    if n >= d {
                        for smaller in t.remove_strip(d) {
                            assert!(
                                smaller.add_strip(d).contains(&t),
                                "missing forward: {t} -> {smaller}, d={d}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn add_strip_sizes_and_counts() {
        for n in 0..=7u32 {
            for t in Partition::all(n) {
                for d in 0..=4u32 {
                    for r in t.add_strip(d) {
                        assert_eq!(r.size(), n + d);
                        assert!(r.parts().windows(2).all(|w| w[0] >= w[1]));
                    }
                }
                // adding one box: one choice per distinct part value, plus a new row
                let distinct: BTreeSet<u32> = t.parts().iter().copied().collect();
                assert_eq!(t.add_strip(1).len(), distinct.len() + 1);
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let b = Bipartition::new(Partition::empty(), p(&[1]));
        let got = b.expansions(1);
        let expect: BTreeSet<Bipartition> = [
            Bipartition::new(p(&[1]), p(&[1])),
            Bipartition::new(Partition::empty(), p(&[2])),
            Bipartition::new(Partition::empty(), p(&[1, 1])),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);

        let e = Bipartition::empty();
        assert_eq!(e.expansions(0), [Bipartition::empty()].into_iter().collect());
        let expect1: BTreeSet<Bipartition> = [
            Bipartition::new(p(&[1]), Partition::empty()),
            Bipartition::new(Partition::empty(), p(&[1])),
        ]
        .into_iter()
        .collect();
        assert_eq!(e.expansions(1), expect1);
    }

    #[test]
    fn contraction_examples() {
        let b = Bipartition::new(p(&[1]), p(&[1]));
        let expect: BTreeSet<Bipartition> = [
            Bipartition::new(Partition::empty(), p(&[1])),
            Bipartition::new(p(&[1]), Partition::empty()),
        ]
        .into_iter()
        .collect();
        assert_eq!(b.contractions(1), expect);

        assert!(Bipartition::empty().contractions(1).is_empty());
        assert_eq!(
            Bipartition::new(Partition::empty(), p(&[1])).contractions(1),
            [Bipartition::empty()].into_iter().collect()
        );
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=9).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        // bipartitions of n: sum p(k) p(n-k)
        assert_eq!(Bipartition::all(2).len(), 5);
        assert_eq!(Bipartition::all(3).len(), 10);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(
            Bipartition::new(p(&[3, 1]), p(&[2])).to_string(),
            "((3,1),(2))"
        );
    }

    #[test]
    fn hook_shapes() {
        assert_eq!(Partition::hook_shape(3, 2).parts(), &[3, 1, 1]);
        assert_eq!(Partition::hook_shape(0, 3).parts(), &[1, 1, 1]);
        assert_eq!(Partition::hook_shape(2, 0).parts(), &[2]);
        assert!(Partition::hook_shape(0, 0).is_empty());
    }
}
