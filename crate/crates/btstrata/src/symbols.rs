//! Lusztig symbols of odd defect: the labels of unipotent representations
//! of Sp(2n, F_q).
//!
//! A symbol is a pair of strictly increasing rows of non-negative integers,
//! considered modulo the shift `(X, Y) -> ({0} u (X+1), {0} u (Y+1))`.
//! [`Symbol`] stores the reduced representative (not both rows contain 0),
//! so equality and set membership are plain structural equality. Rank,
//! defect, hooks, cohooks and the hook-formula degree are shift-invariant;
//! they are implemented on raw rows so the invariance is testable on
//! non-reduced representatives.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};
use crate::qpoly::{QPoly, Rat};

/// A reduced symbol. `top` is the longer row; the defect
/// `#top - #bottom` is a positive odd integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSymbol")]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

#[derive(Deserialize)]
struct RawSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl TryFrom<RawSymbol> for Symbol {
    type Error = Error;
    fn try_from(raw: RawSymbol) -> Result<Symbol> {
        Symbol::new(raw.top, raw.bottom)
    }
}

/// The alternate labelling of a unipotent representation: the
/// cuspidal-support index `delta` together with a bipartition of
/// `rank - delta(delta+1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UnipotentLabel {
    pub delta: u32,
    pub bip: Bipartition,
}

impl UnipotentLabel {
    pub fn new(delta: u32, bip: Bipartition) -> Self {
        UnipotentLabel { delta, bip }
    }

    /// Rank of the group the labelled representation belongs to.
    pub fn rank(&self) -> u32 {
        self.delta * (self.delta + 1) + self.bip.size()
    }
}

impl fmt::Display for UnipotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rho[{},{},{}]", self.delta, self.bip.first, self.bip.second)
    }
}

impl fmt::Debug for UnipotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Symbol {
    /// Validates the rows and reduces modulo shift.
    ///
    /// Errors with [`Error::InvalidSymbol`] when a row is not strictly
    /// increasing or the defect is not a positive odd integer.
    pub fn new(mut top: Vec<u32>, mut bottom: Vec<u32>) -> Result<Symbol> {
        for (name, row) in [("top", &top), ("bottom", &bottom)] {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidSymbol(format!(
                    "{name} row {row:?} is not strictly increasing"
                )));
            }
        }
        let d = top.len() as i64 - bottom.len() as i64;
        if d < 1 || d % 2 == 0 {
            return Err(Error::InvalidSymbol(format!(
                "defect {d} is not a positive odd integer"
            )));
        }
        // reduce: strip a leading 0 from both rows and shift down
        while top.first() == Some(&0) && bottom.first() == Some(&0) {
            top.remove(0);
            bottom.remove(0);
            for x in top.iter_mut().chain(bottom.iter_mut()) {
                *x -= 1;
            }
        }
        Ok(Symbol { top, bottom })
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn rank(&self) -> u32 {
        rank_of_rows(&self.top, &self.bottom)
    }

    pub fn defect(&self) -> u32 {
        defect_of_rows(&self.top, &self.bottom)
    }

    /// The Harish-Chandra series index: `defect = 2*delta + 1`.
    pub fn delta(&self) -> u32 {
        (self.defect() - 1) / 2
    }

    /// Multiset of hook lengths, sorted increasingly.
    pub fn hooks(&self) -> Vec<u32> {
        hooks_of_rows(&self.top, &self.bottom)
    }

    /// Multiset of cohook lengths, sorted increasingly.
    pub fn cohooks(&self) -> Vec<u32> {
        cohooks_of_rows(&self.top, &self.bottom)
    }

    /// The generic degree of the labelled representation, by the hook
    /// formula. Exact; an inexact division signals a bug in the hook or
    /// cohook enumeration.
    pub fn degree(&self) -> Result<QPoly> {
        degree_of_rows(&self.top, &self.bottom)
    }

    /// The cuspidal core `S_delta = (0, 1, ..., 2*delta ; -)`.
    pub fn core(&self) -> Symbol {
        cuspidal_core(self.delta())
    }

    pub fn is_cuspidal(&self) -> bool {
        *self == self.core()
    }

    /// Subtracts the core row-wise (on shift-matched representatives) to
    /// produce the `(delta, bipartition)` label.
    pub fn to_label(&self) -> UnipotentLabel {
        let delta = self.delta();
        // Core representative with the same row lengths has i at position i
        // in both rows, so the subtraction is entry - index.
        let alpha: Vec<u32> = self.top.iter().enumerate().map(|(i, &x)| x - i as u32).collect();
        let beta: Vec<u32> = self.bottom.iter().enumerate().map(|(j, &y)| y - j as u32).collect();
        UnipotentLabel::new(delta, Bipartition::new(Partition::new(alpha), Partition::new(beta)))
    }
}

/// The cuspidal symbol `S_delta`, of rank `delta*(delta+1)` and defect
/// `2*delta + 1`.
pub fn cuspidal_core(delta: u32) -> Symbol {
    Symbol::new((0..=2 * delta).collect(), Vec::new()).expect("core is a valid symbol")
}

/// Rebuilds the reduced symbol from a `(delta, bipartition)` label.
pub fn from_label(label: &UnipotentLabel) -> Symbol {
    let width = 2 * label.delta + 1;
    let alen = label.bip.first.num_parts() as u32;
    let blen = label.bip.second.num_parts() as u32;
    let r = blen.max(alen.saturating_sub(width));
    let top = ascending_padded(&label.bip.first, r + width);
    let bottom = ascending_padded(&label.bip.second, r);
    Symbol::new(top, bottom).expect("label produces a valid symbol")
}

/// As [`from_label`], but validating against an expected rank.
pub fn label_to_symbol(label: &UnipotentLabel, theta: u32) -> Result<Symbol> {
    if label.rank() != theta {
        return Err(Error::InvalidLabel(format!(
            "label {label} has rank {}, expected {theta}",
            label.rank()
        )));
    }
    Ok(from_label(label))
}

/// Partition parts in increasing order, zero-padded at the front to length
/// `len`, plus the row offset `0, 1, 2, ...`.
fn ascending_padded(p: &Partition, len: u32) -> Vec<u32> {
    let n = p.num_parts();
    assert!(n <= len as usize, "padding length too small for partition");
    (0..len)
        .map(|i| {
            // ascending: the last parts come first reversed
            let from_end = (len - 1 - i) as usize;
            p.part(from_end) + i
        })
        .collect()
}

/// All reduced symbols of rank `theta` (any odd defect), enumerated by
/// series index `delta` and then by bipartition.
pub fn enumerate_symbols(theta: u32) -> Vec<Symbol> {
    let mut out = Vec::new();
    let mut delta = 0u32;
    while delta * (delta + 1) <= theta {
        for bip in Bipartition::all(theta - delta * (delta + 1)) {
            out.push(from_label(&UnipotentLabel::new(delta, bip)));
        }
        delta += 1;
    }
    out
}

/// One application of the shift operation, for invariance tests.
pub fn shift_rows(top: &[u32], bottom: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let bump = |row: &[u32]| -> Vec<u32> {
        std::iter::once(0).chain(row.iter().map(|&x| x + 1)).collect()
    };
    (bump(top), bump(bottom))
}

/// `rank = sum of all entries - floor((#S-1)^2 / 4)`, on the multiset union
/// of the rows.
pub fn rank_of_rows(top: &[u32], bottom: &[u32]) -> u32 {
    let total: u64 = top.iter().chain(bottom).map(|&x| x as u64).sum();
    let n = (top.len() + bottom.len()) as u64;
    let adj = (n.saturating_sub(1)).pow(2) / 4;
    u32::try_from(total - adj).expect("rank fits in u32")
}

pub fn defect_of_rows(top: &[u32], bottom: &[u32]) -> u32 {
    (top.len() - bottom.len()) as u32
}

pub fn hooks_of_rows(top: &[u32], bottom: &[u32]) -> Vec<u32> {
    let mut hooks = scan_row(top, top);
    hooks.extend(scan_row(bottom, bottom));
    hooks.sort_unstable();
    hooks
}

pub fn cohooks_of_rows(top: &[u32], bottom: &[u32]) -> Vec<u32> {
    let mut cohooks = scan_row(top, bottom);
    cohooks.extend(scan_row(bottom, top));
    cohooks.sort_unstable();
    cohooks
}

/// Lengths `k` with `z in row`, `z - k` missing from `other`.
fn scan_row(row: &[u32], other: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for &z in row {
        for k in 1..=z {
            if !other.contains(&(z - k)) {
                out.push(k);
            }
        }
    }
    out
}

/// `a(S)`: sum of `min` over unordered pairs of distinct positions in the
/// multiset union, minus `sum_i C(#S - 2i, 2)` (the binomial vanishing
/// below 2).
pub fn a_of_rows(top: &[u32], bottom: &[u32]) -> u32 {
    let mut values: Vec<u64> = top.iter().chain(bottom).map(|&x| x as u64).collect();
    values.sort_unstable();
    let n = values.len() as u64;
    // ascending order: entry i is the min in exactly (n - 1 - i) pairs
    let pair_sum: u64 = values
        .iter()
        .enumerate()
        .map(|(i, &v)| v * (n - 1 - i as u64))
        .sum();
    let mut binom_sum = 0u64;
    let mut m = n as i64 - 2;
    while m >= 2 {
        binom_sum += (m * (m - 1) / 2) as u64;
        m -= 2;
    }
    u32::try_from(pair_sum - binom_sum).expect("a(S) is non-negative at desk scale")
}

/// `b'(S) = floor((#S-1)/2) - #(X intersect Y)`.
pub fn b_prime_of_rows(top: &[u32], bottom: &[u32]) -> u32 {
    let n = (top.len() + bottom.len()) as u32;
    let common = top.iter().filter(|x| bottom.contains(x)).count() as u32;
    (n - 1) / 2 - common
}

/// Hook formula:
/// `q^a(S) * prod(q^{2i} - 1) / (2^{b'(S)} * prod(q^h - 1) * prod(q^c + 1))`.
pub fn degree_of_rows(top: &[u32], bottom: &[u32]) -> Result<QPoly> {
    let theta = rank_of_rows(top, bottom);
    let a = a_of_rows(top, bottom);
    let b_prime = b_prime_of_rows(top, bottom);

    let mut num = QPoly::q_pow(a as usize);
    for i in 1..=theta {
        num = &num * &QPoly::q_pow_minus_one(2 * i as usize);
    }
    let two_pow = Rat::from_integer(num_bigint::BigInt::from(1) << b_prime);
    let mut den = QPoly::constant(two_pow);
    for h in hooks_of_rows(top, bottom) {
        den = &den * &QPoly::q_pow_minus_one(h as usize);
    }
    for c in cohooks_of_rows(top, bottom) {
        den = &den * &QPoly::q_pow_plus_one(c as usize);
    }
    num.exact_div(&den)
}

impl fmt::Display for Symbol {
    /// Text form `top;bottom` with comma-separated entries, e.g. `0,2;1`;
    /// an empty row renders as nothing (`0,1,2;` for the defect-3 cuspidal).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| {
            row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(f, "{};{}", join(&self.top), join(&self.bottom))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        let mut sides = s.split(';');
        let (top, bottom) = match (sides.next(), sides.next(), sides.next()) {
            (Some(t), Some(b), None) => (t, b),
            _ => {
                return Err(Error::Parse(format!(
                    "symbol {s:?} must contain exactly one ';'"
                )))
            }
        };
        let parse_row = |row: &str| -> Result<Vec<u32>> {
            if row.trim().is_empty() {
                return Ok(Vec::new());
            }
            row.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad symbol entry {tok:?}: {e}")))
                })
                .collect()
        };
        Symbol::new(parse_row(top)?, parse_row(bottom)?)
    }
}
