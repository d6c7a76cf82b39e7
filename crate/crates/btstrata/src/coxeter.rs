//! The cohomology table of the Coxeter variety of Sp(2n, F_q), with
//! Frobenius eigenvalues, and the closed-form degree formulas for its
//! constituents.
//!
//! The table is generated from the closed-form symbols; the inductive
//! restriction identity that pins those symbols down survives as
//! [`verify_restriction_identity`].

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::harish_chandra::restrict_sp;
use crate::qpoly::QPoly;
use crate::symbols::Symbol;

/// A Frobenius eigenvalue of the form `sign * q^exp`; nothing else occurs
/// in this crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FrobEigenvalue {
    /// `+1` or `-1`.
    pub sign: i8,
    pub exp: u32,
}

impl FrobEigenvalue {
    pub fn plus(exp: u32) -> Self {
        FrobEigenvalue { sign: 1, exp }
    }

    pub fn minus(exp: u32) -> Self {
        FrobEigenvalue { sign: -1, exp }
    }

    /// Tate twist `(-k)`: multiplication by `q^k`.
    pub fn tate_twist(self, k: u32) -> Self {
        FrobEigenvalue { sign: self.sign, exp: self.exp + k }
    }
}

impl fmt::Display for FrobEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign >= 0 { "+" } else { "-" };
        write!(f, "{sign}q^{}", self.exp)
    }
}

impl fmt::Debug for FrobEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Compactly supported cohomology, graded by degree; each degree holds
/// pairwise distinct `(symbol, eigenvalue)` pairs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedCohomology {
    terms: BTreeMap<u32, Vec<(Symbol, FrobEigenvalue)>>,
}

impl GradedCohomology {
    fn insert(&mut self, degree: u32, symbol: Symbol, ev: FrobEigenvalue) {
        let slot = self.terms.entry(degree).or_default();
        slot.push((symbol, ev));
        slot.sort();
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    /// Entries in one degree; empty outside the supported range.
    pub fn at_degree(&self, degree: u32) -> &[(Symbol, FrobEigenvalue)] {
        self.terms.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &[(Symbol, FrobEigenvalue)])> {
        self.terms.iter().map(|(d, v)| (*d, v.as_slice()))
    }
}

/// The symbol `S^theta_i = (0, ..., theta-i-1, theta ; 1, ..., theta-i)`,
/// the `q^i`-eigenspace constituent. `S^theta_0` is the Steinberg symbol
/// and `S^theta_theta` the trivial one.
pub fn symbol_s(theta: u32, i: u32) -> Symbol {
    assert!(i <= theta, "symbol_s requires i <= theta");
    let top: Vec<u32> = (0..theta - i).chain([theta]).collect();
    let bottom: Vec<u32> = (1..=theta - i).collect();
    Symbol::new(top, bottom).expect("S-symbol is valid")
}

/// The symbol `T^theta_j = (0, ..., theta-j-1, theta ; 1, ..., theta-j-2)`,
/// the `-q^{j+1}`-eigenspace constituent (defect 3).
pub fn symbol_t(theta: u32, j: u32) -> Symbol {
    assert!(theta >= 2 && j <= theta - 2, "symbol_t requires j <= theta - 2");
    let top: Vec<u32> = (0..theta - j).chain([theta]).collect();
    let bottom: Vec<u32> = (1..=theta - j - 2).collect();
    Symbol::new(top, bottom).expect("T-symbol is valid")
}

/// The full cohomology table of the Coxeter variety for Sp(2*theta):
/// degree `theta + i` carries `S^theta_i` with eigenvalue `q^i` for
/// `0 <= i <= theta`, plus `T^theta_i` with eigenvalue `-q^{i+1}` for
/// `i <= theta - 2`. For `theta = 0` the variety is a point.
pub fn coxeter_cohomology(theta: u32) -> GradedCohomology {
    let mut coh = GradedCohomology::default();
    for i in 0..=theta {
        coh.insert(theta + i, symbol_s(theta, i), FrobEigenvalue::plus(i));
        if i + 2 <= theta {
            coh.insert(theta + i, symbol_t(theta, i), FrobEigenvalue::minus(i + 1));
        }
    }
    coh
}

/// Closed-form degree of `rho_{S^theta_i}`:
/// `q^{(theta-i)^2} prod_{s=1}^{theta-i} (q^{s+i}-1)/(q^s-1)
///  prod_{s=0}^{theta-i-1} (q^{s+i}+1)/(q^s+1)`.
pub fn lusztig_degree_s(theta: u32, i: u32) -> Result<QPoly> {
    assert!(i <= theta, "lusztig_degree_s requires i <= theta");
    let m = (theta - i) as usize;
    let mut num = QPoly::q_pow(m * m);
    let mut den = QPoly::one();
    for s in 1..=m {
        num = &num * &QPoly::q_pow_minus_one(s + i as usize);
        den = &den * &QPoly::q_pow_minus_one(s);
    }
    for s in 0..m {
        num = &num * &QPoly::q_pow_plus_one(s + i as usize);
        den = &den * &QPoly::q_pow_plus_one(s);
    }
    num.exact_div(&den)
}

/// Closed-form degree of `rho_{T^theta_j}`:
/// `q^{(theta-j-1)^2} (q^{theta-1}-1)(q^theta-1)/(2(q+1))
///  prod_{s=1}^{theta-j-2} (q^{s+j}-1)/(q^s-1)
///  prod_{s=2}^{theta-j-1} (q^{s+j}+1)/(q^s+1)`.
pub fn lusztig_degree_t(theta: u32, j: u32) -> Result<QPoly> {
    assert!(theta >= 2 && j <= theta - 2, "lusztig_degree_t requires j <= theta - 2");
    let m = (theta - j) as usize;
    let mut num = QPoly::q_pow((m - 1) * (m - 1));
    num = &num * &QPoly::q_pow_minus_one(theta as usize - 1);
    num = &num * &QPoly::q_pow_minus_one(theta as usize);
    let mut den = &QPoly::from_int(2) * &QPoly::q_pow_plus_one(1);
    for s in 1..=m - 2 {
        num = &num * &QPoly::q_pow_minus_one(s + j as usize);
        den = &den * &QPoly::q_pow_minus_one(s);
    }
    for s in 2..=m - 1 {
        num = &num * &QPoly::q_pow_plus_one(s + j as usize);
        den = &den * &QPoly::q_pow_plus_one(s);
    }
    num.exact_div(&den)
}

/// Checks the degreewise identity expressing the restriction of the
/// cohomology of the Coxeter variety for Sp(2*theta) through the one for
/// Sp(2*(theta-1)): restriction of degree `theta + i` equals the degree
/// `theta-1+i` table plus the degree `theta-1+(i-1)` table Tate-twisted by
/// `(-1)` (eigenvalue exponent shifted up by one).
pub fn verify_restriction_identity(theta: u32) -> Result<bool> {
    assert!(theta >= 2, "restriction identity needs theta >= 2");
    let big = coxeter_cohomology(theta);
    let small = coxeter_cohomology(theta - 1);
    for i in 0..=theta {
        let mut lhs: Vec<(Symbol, FrobEigenvalue)> = Vec::new();
        for (symbol, ev) in big.at_degree(theta + i) {
            for t in restrict_sp(1, symbol)?.iter() {
                lhs.push((t.clone(), *ev));
            }
        }
        lhs.sort();

        let mut rhs: Vec<(Symbol, FrobEigenvalue)> =
            small.at_degree(theta - 1 + i).to_vec();
        if i >= 1 {
            for (symbol, ev) in small.at_degree(theta + i - 2) {
                rhs.push((symbol.clone(), ev.tate_twist(1)));
            }
        }
        rhs.sort();

        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{Bipartition, Partition};
    use crate::symbols::enumerate_symbols;
    use std::collections::BTreeSet;

    fn sym(top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn table_theta_one() {
        let coh = coxeter_cohomology(1);
        assert_eq!(
            coh.at_degree(1),
            &[(sym(&[0, 1], &[1]), FrobEigenvalue::plus(0))]
        );
        assert_eq!(coh.at_degree(2), &[(sym(&[1], &[]), FrobEigenvalue::plus(1))]);
        assert!(coh.at_degree(0).is_empty());
        assert!(coh.at_degree(3).is_empty());
    }

    #[test]
    fn table_theta_two_has_cuspidal() {
        let coh = coxeter_cohomology(2);
        assert!(coh
            .at_degree(2)
            .contains(&(sym(&[0, 1, 2], &[]), FrobEigenvalue::minus(1))));
        // top degree is the trivial symbol with eigenvalue q^theta
        assert_eq!(coh.at_degree(4), &[(sym(&[2], &[]), FrobEigenvalue::plus(2))]);
    }

    #[test]
    fn top_degree_is_trivial() {
        for theta in 1..=6u32 {
            let coh = coxeter_cohomology(theta);
            assert_eq!(
                coh.at_degree(2 * theta),
                &[(sym(&[theta], &[]), FrobEigenvalue::plus(theta))]
            );
            assert!(coh.at_degree(theta.saturating_sub(1)).is_empty());
            assert!(coh.at_degree(2 * theta + 1).is_empty());
        }
    }

    #[test]
    fn point_for_theta_zero() {
        let coh = coxeter_cohomology(0);
        assert_eq!(coh.at_degree(0), &[(sym(&[0], &[]), FrobEigenvalue::plus(0))]);
    }

    #[test]
    fn symbols_are_pairwise_distinct() {
        for theta in 1..=8u32 {
            let mut seen = BTreeSet::new();
            for i in 0..=theta {
                assert!(seen.insert(symbol_s(theta, i)));
            }
            for j in 0..=theta.saturating_sub(2) {
                if j + 2 <= theta {
                    assert!(seen.insert(symbol_t(theta, j)));
                }
            }
        }
    }

    #[test]
    fn symbol_labels_are_hooks() {
        for theta in 1..=8u32 {
            for i in 0..=theta {
                let label = symbol_s(theta, i).to_label();
                assert_eq!(label.delta, 0);
                assert_eq!(
                    label.bip,
                    Bipartition::new(Partition::row(i), Partition::column(theta - i))
                );
            }
            for j in 0..theta.saturating_sub(1) {
                let label = symbol_t(theta, j).to_label();
                assert_eq!(label.delta, 1);
                assert_eq!(
                    label.bip,
                    Bipartition::new(Partition::row(j), Partition::column(theta - 2 - j))
                );
            }
        }
    }

    #[test]
    fn lusztig_degree_examples() {
        for theta in 0..=6u32 {
            assert_eq!(lusztig_degree_s(theta, theta).unwrap(), QPoly::one());
        }
        assert_eq!(lusztig_degree_s(1, 0).unwrap(), QPoly::q_pow(1));
        // q^4 (q^2-1)(q^3-1) / (2(q+1))
        let expect = (&(&QPoly::q_pow(4) * &QPoly::q_pow_minus_one(2)) * &QPoly::q_pow_minus_one(3))
            .exact_div(&(&QPoly::from_int(2) * &QPoly::q_pow_plus_one(1)))
            .unwrap();
        assert_eq!(lusztig_degree_t(3, 0).unwrap(), expect);
    }

    #[test]
    fn hook_formula_matches_lusztig_closed_form() {
        for theta in 0..=6u32 {
            for i in 0..=theta {
                assert_eq!(
                    symbol_s(theta, i).degree().unwrap(),
                    lusztig_degree_s(theta, i).unwrap(),
                    "S-degree mismatch at theta={theta}, i={i}"
                );
            }
            for j in 0..theta.saturating_sub(1) {
                assert_eq!(
                    symbol_t(theta, j).degree().unwrap(),
                    lusztig_degree_t(theta, j).unwrap(),
                    "T-degree mismatch at theta={theta}, j={j}"
                );
            }
        }
    }

    #[test]
    fn restriction_identity_holds() {
        for theta in 2..=6u32 {
            assert!(verify_restriction_identity(theta).unwrap(), "theta={theta}");
        }
    }

    #[test]
    fn table_symbols_live_at_the_right_rank() {
        for theta in 1..=6u32 {
            let census: BTreeSet<Symbol> = enumerate_symbols(theta).into_iter().collect();
            for (_, entries) in coxeter_cohomology(theta).iter() {
                for (s, _) in entries {
                    assert!(census.contains(s));
                }
            }
        }
    }
}
