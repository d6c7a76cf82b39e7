//! Brute-force ground truth: enumerate the Lagrangian subspaces of a
//! 2*theta-dimensional symplectic space over a small finite field, apply
//! the semilinear Frobenius `tau`, and count the points of the closed
//! stratum and of each locally closed stratum inside it.

use std::collections::{BTreeMap, BTreeSet};

use super::field::{Fe, FiniteField};
use super::matrix::Mat;
use crate::error::{Error, Result};

/// Work bound for the enumeration. The estimate is `order^(theta^2)`;
/// the default bound is 10^7 and `None` disables the guard entirely.
#[derive(Clone, Copy, Debug)]
pub struct ScaleGuard {
    pub max_work: Option<u64>,
}

impl ScaleGuard {
    pub const DEFAULT_MAX_WORK: u64 = 10_000_000;

    pub fn unlimited() -> Self {
        ScaleGuard { max_work: None }
    }

    pub fn with_max_work(max_work: u64) -> Self {
        ScaleGuard { max_work: Some(max_work) }
    }

    fn check(&self, theta: u32, order: usize) -> Result<()> {
        let Some(max) = self.max_work else {
            return Ok(());
        };
        if theta > 3 {
            return Err(Error::ScaleGuard(format!(
                "theta = {theta} exceeds the guarded bound 3; disable the guard to proceed"
            )));
        }
        let work = (order as u128).saturating_pow(theta * theta);
        if work > max as u128 {
            return Err(Error::ScaleGuard(format!(
                "estimated work {order}^{} = {work} exceeds the bound {max}",
                theta * theta
            )));
        }
        Ok(())
    }
}

impl Default for ScaleGuard {
    fn default() -> Self {
        ScaleGuard { max_work: Some(Self::DEFAULT_MAX_WORK) }
    }
}

/// The Gram matrix `(0 A ; -A 0)` with `A` the anti-diagonal identity:
/// entry `(i, 2 theta - 1 - i)` is `+1` for `i < theta` and `-1` after.
pub fn gram_matrix(theta: u32, f: &FiniteField) -> Mat {
    let n = 2 * theta as usize;
    let mut omega = Mat::zero(n, n);
    for i in 0..n {
        let v = if i < theta as usize { f.one() } else { f.neg(f.one()) };
        omega.set(i, n - 1 - i, v);
    }
    omega
}

/// Whether the rows of `m` span a Lagrangian: full rank `theta` and
/// `m Omega m^T = 0`.
pub fn is_lagrangian(m: &Mat, theta: u32, f: &FiniteField) -> bool {
    m.rows() == theta as usize
        && m.rank(f) == theta as usize
        && m.mul(&gram_matrix(theta, f), f).mul(&m.transpose(), f).is_zero()
}

/// All Lagrangian subspaces of the standard symplectic 2*theta-space over
/// the given field, as canonical echelon bases in a deterministic order.
///
/// Proceeds by extending isotropic flags: each d-dimensional isotropic
/// subspace is extended by a projective choice of vector in its perp, and
/// duplicates collapse on the canonical form. Total count is
/// `prod_{i=1}^{theta} (|k|^i + 1)`.
pub fn enumerate_lagrangians(
    theta: u32,
    f: &FiniteField,
    guard: &ScaleGuard,
) -> Result<Vec<Mat>> {
    guard.check(theta, f.order())?;
    let ambient = 2 * theta as usize;
    let omega = gram_matrix(theta, f);
    let mut level: BTreeSet<Mat> = BTreeSet::new();
    level.insert(Mat::zero(0, ambient));
    for _dim in 0..theta {
        let mut next = BTreeSet::new();
        for u in &level {
            let perp = if u.rows() == 0 {
                Mat::identity(ambient)
            } else {
                u.mul(&omega, f).kernel(f)
            };
            for v in projective_combinations(&perp, f) {
                let candidate = u.stack(&Mat::from_rows(vec![v], ambient)).rref(f);
                if candidate.rows() == u.rows() + 1 {
                    next.insert(candidate);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// All nonzero linear combinations of the rows of `basis` whose leading
/// coefficient is 1: one representative per direction in the row space.
fn projective_combinations(basis: &Mat, f: &FiniteField) -> Vec<Vec<Fe>> {
    let k = basis.rows();
    let cols = basis.cols();
    let mut out = Vec::new();
    let mut coeffs = vec![0 as Fe; k];
    for lead in 0..k {
        coeffs.iter_mut().for_each(|c| *c = 0);
        coeffs[lead] = 1;
        loop {
            let mut v = vec![0 as Fe; cols];
            for (i, &c) in coeffs.iter().enumerate().skip(lead) {
                if c == 0 {
                    continue;
                }
                for (slot, &b) in v.iter_mut().zip(basis.row(i)) {
                    *slot = f.add(*slot, f.mul(c, b));
                }
            }
            out.push(v);
            // advance the free positions lead+1.. as base-order digits
            let mut pos = k;
            loop {
                if pos == lead + 1 {
                    pos = 0;
                    break;
                }
                pos -= 1;
                if (coeffs[pos] as usize) + 1 < f.order() {
                    coeffs[pos] += 1;
                    break;
                }
                coeffs[pos] = 0;
            }
            if pos == 0 {
                break;
            }
        }
    }
    out
}

/// The semilinear Frobenius on subspaces: entrywise `x -> x^{q0}` with
/// `q0 = p^{e0}`, re-echelonized.
pub fn tau(m: &Mat, f: &FiniteField, e0: u32) -> Mat {
    m.map_entries(|x| f.power_q(x, e0)).rref(f)
}

/// Dimensions of the iterated intersections
/// `[dim(U n tU), dim(U n tU n t^2 U), ...]`, `depth` entries.
pub fn intersection_profile(u: &Mat, f: &FiniteField, e0: u32, depth: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(depth as usize);
    let mut w = u.rref(f);
    for _ in 0..depth {
        w = w.row_space_intersection(&tau(&w, f, e0), f);
        out.push(w.rows());
    }
    out
}

/// The stratum index of a Lagrangian `U`, or `None` when `U` lies outside
/// the closed stratum (`dim(U n tU) < theta - 1`).
///
/// The chain `W <- W n tW` must lose exactly one dimension per step until
/// it stabilizes at a tau-stable subspace of dimension `theta - theta'`;
/// any other pattern violates the stratification and is reported as an
/// error rather than silently bucketed.
pub fn stratum_index(u: &Mat, theta: u32, f: &FiniteField, e0: u32) -> Result<Option<u32>> {
    let mut w = u.rref(f);
    if w.rows() != theta as usize {
        return Err(Error::OracleInvariant(format!(
            "subspace has dimension {}, expected {theta}",
            w.rows()
        )));
    }
    let mut steps = 0u32;
    loop {
        let next = w.row_space_intersection(&tau(&w, f, e0), f);
        if next.rows() == w.rows() {
            if w.rows() != (theta - steps) as usize {
                return Err(Error::OracleInvariant(format!(
                    "chain stabilized at dimension {} after {steps} steps (theta = {theta})",
                    w.rows()
                )));
            }
            return Ok(Some(steps));
        }
        if steps == 0 && next.rows() + 2 <= w.rows() {
            // first intersection already drops by 2 or more: outside S_theta
            return Ok(None);
        }
        if next.rows() + 1 != w.rows() {
            return Err(Error::OracleInvariant(format!(
                "intersection chain dropped from {} to {} inside the closed stratum",
                w.rows(),
                next.rows()
            )));
        }
        w = next;
        steps += 1;
        if steps > theta {
            return Err(Error::OracleInvariant(
                "intersection chain failed to stabilize".into(),
            ));
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCounts {
    pub total: u64,
    pub per_stratum: BTreeMap<u32, u64>,
}

/// Counts the points of the closed stratum over `F_{(p^e0)^n}`, bucketed
/// by stratum index. Ground truth for the Lefschetz predictions.
pub fn oracle_counts(
    theta: u32,
    p: u64,
    e0: u32,
    n: u32,
    guard: &ScaleGuard,
) -> Result<OracleCounts> {
    let f = FiniteField::new(p, e0 * n)?;
    let lagrangians = enumerate_lagrangians(theta, &f, guard)?;
    let expected = expected_lagrangian_count(theta, f.order() as u64);
    if lagrangians.len() as u64 != expected {
        return Err(Error::OracleInvariant(format!(
            "enumerated {} Lagrangians, classical count is {expected}",
            lagrangians.len()
        )));
    }
    let mut per_stratum: BTreeMap<u32, u64> = (0..=theta).map(|t| (t, 0)).collect();
    let mut total = 0u64;
    for u in &lagrangians {
        if let Some(stratum) = stratum_index(u, theta, &f, e0)? {
            *per_stratum.get_mut(&stratum).expect("stratum in range") += 1;
            total += 1;
        }
    }
    Ok(OracleCounts { total, per_stratum })
}

/// `prod_{i=1}^{theta} (k^i + 1)`.
pub fn expected_lagrangian_count(theta: u32, k: u64) -> u64 {
    (1..=theta).map(|i| k.pow(i) + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, e: u32) -> FiniteField {
        FiniteField::new(p, e).unwrap()
    }

    #[test]
    fn enumeration_counts_match_classical_formula() {
        let cases: &[(u32, u64, u32)] = &[
            (1, 2, 1),
            (1, 3, 1),
            (1, 2, 2),
            (1, 5, 1),
            (1, 3, 2),
            (2, 2, 1),
            (2, 3, 1),
            (2, 2, 2),
            (2, 5, 1),
            (2, 3, 2),
            (3, 2, 1),
            (3, 3, 1),
            (3, 2, 2),
        ];
        for &(theta, p, e) in cases {
            let f = field(p, e);
            let guard = ScaleGuard::default();
            let got = enumerate_lagrangians(theta, &f, &guard).unwrap();
            let expect = expected_lagrangian_count(theta, f.order() as u64);
            assert_eq!(got.len() as u64, expect, "theta={theta}, order={}", f.order());
            for m in got.iter().take(50) {
                assert!(is_lagrangian(m, theta, &f));
            }
        }
        // spot values from the classical product
        assert_eq!(expected_lagrangian_count(1, 3), 4);
        assert_eq!(expected_lagrangian_count(2, 3), 40);
        assert_eq!(expected_lagrangian_count(2, 9), 820);
        assert_eq!(expected_lagrangian_count(3, 4), 5525);
    }

    #[test]
    fn scale_guard_blocks_large_enumerations() {
        let f = field(3, 2);
        assert!(matches!(
            enumerate_lagrangians(3, &f, &ScaleGuard::default()),
            Err(Error::ScaleGuard(_))
        ));
        assert!(matches!(
            enumerate_lagrangians(4, &f, &ScaleGuard::default()),
            Err(Error::ScaleGuard(_))
        ));
        // lifting the bound admits the work estimate check
        assert!(enumerate_lagrangians(2, &f, &ScaleGuard::with_max_work(10_000)).is_ok());
    }

    #[test]
    fn tau_fixes_rational_subspaces() {
        // over F_9 with q0 = 3: matrices with base-field entries are fixed
        let f = field(3, 2);
        let m = Mat::from_rows(vec![vec![1, 0, 0, 2], vec![0, 1, 1, 0]], 4).rref(&f);
        assert_eq!(tau(&m, &f, 1), m);
        // tau is an involution on subspaces over a quadratic extension
        let lagr = enumerate_lagrangians(1, &f, &ScaleGuard::default()).unwrap();
        for u in &lagr {
            assert_eq!(tau(&tau(u, &f, 1), &f, 1), *u);
            assert!(tau(u, &f, 1).rows() == u.rows());
        }
        // some line over F_9 is moved by tau (a non-rational one exists)
        assert!(lagr.iter().any(|u| tau(u, &f, 1) != *u));
    }

    #[test]
    fn profiles_are_galois_stable() {
        let f = field(2, 2);
        let guard = ScaleGuard::default();
        for u in enumerate_lagrangians(2, &f, &guard).unwrap() {
            let p1 = intersection_profile(&u, &f, 1, 3);
            let p2 = intersection_profile(&tau(&u, &f, 1), &f, 1, 3);
            assert_eq!(p1, p2);
        }
    }

    #[test]
    fn rational_points_land_in_stratum_zero() {
        // over the base field every subspace is fixed by tau
        let f = field(3, 1);
        let guard = ScaleGuard::default();
        for theta in 1..=2u32 {
            let lagr = enumerate_lagrangians(theta, &f, &guard).unwrap();
            for u in &lagr {
                assert_eq!(stratum_index(&u, theta, &f, 1).unwrap(), Some(0));
                let profile = intersection_profile(&u, &f, 1, theta + 1);
                assert!(profile.iter().all(|&d| d == theta as usize));
            }
        }
    }

    #[test]
    fn oracle_counts_p1_over_f3() {
        let counts = oracle_counts(1, 3, 1, 1, &ScaleGuard::default()).unwrap();
        assert_eq!(counts.total, 4);
        assert_eq!(counts.per_stratum[&0], 4);
        assert_eq!(counts.per_stratum[&1], 0);
    }

    #[test]
    fn oracle_counts_theta_two_over_f3() {
        let counts = oracle_counts(2, 3, 1, 1, &ScaleGuard::default()).unwrap();
        assert_eq!(counts.total, 40);
        assert_eq!(counts.per_stratum[&0], 40);
        assert_eq!(counts.per_stratum[&1], 0);
        assert_eq!(counts.per_stratum[&2], 0);
    }

    #[test]
    fn oracle_counts_p1_over_f9() {
        // S_1 = P^1: 82 points over F_9, of which 4 are rational
        let counts = oracle_counts(1, 3, 1, 2, &ScaleGuard::default()).unwrap();
        assert_eq!(counts.total, 82);
        assert_eq!(counts.per_stratum[&0], 4);
        assert_eq!(counts.per_stratum[&1], 78);
    }
}
