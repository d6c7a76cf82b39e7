//! Verification suites: every cross-check the library promises, packaged
//! as named pass/fail results so the CLI `verify` verb and the acceptance
//! tests share one implementation.
//!
//! All comparisons are exact (polynomial or integer equality); there are no
//! tolerances anywhere.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::coxeter::{
    lusztig_degree_s, lusztig_degree_t, symbol_s, symbol_t, verify_restriction_identity,
};
use crate::error::Error;
use crate::geometry::{oracle_counts, ScaleGuard};
use crate::harish_chandra::{induce, restrict_sp, RepMultiset};
use crate::partitions::{Bipartition, Partition};
use crate::qpoly::QPoly;
use crate::strata::{
    ab_split, cohomology_of_s, e1_closed_form, e1_term, lagrangian_count_poly, point_count_s,
    point_count_stratum,
};
use crate::symbols::{
    cohooks_of_rows, degree_of_rows, defect_of_rows, enumerate_symbols, from_label, hooks_of_rows,
    rank_of_rows, shift_rows, Symbol, UnipotentLabel,
};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn ok(name: &str, detail: impl Into<String>) -> Check {
        Check { name: name.to_string(), passed: true, detail: detail.into() }
    }

    fn fail(name: &str, detail: impl Into<String>) -> Check {
        Check { name: name.to_string(), passed: false, detail: detail.into() }
    }

    fn from_result(name: &str, result: Result<String, String>) -> Check {
        match result {
            Ok(detail) => Check::ok(name, detail),
            Err(detail) => Check::fail(name, detail),
        }
    }
}

/// The Lefschetz comparison cases `(theta, p, e, n)`: base field F_{p^e},
/// points counted over its degree-n extension.
pub const LEFSCHETZ_CASES: &[(u32, u64, u32, u32)] = &[
    (1, 2, 1, 1),
    (1, 2, 1, 2),
    (1, 3, 1, 2),
    (2, 2, 1, 1),
    (2, 2, 1, 2),
    (2, 3, 1, 1),
    (2, 3, 1, 2),
    (3, 2, 1, 1),
    (3, 2, 1, 2),
];

/// The six rank-2 symbols with their defects and bipartitions.
pub fn census() -> Check {
    let name = "census";
    let run = || -> Result<String, String> {
        let expect: Vec<(Symbol, u32, Bipartition)> = vec![
            (sym(&[2], &[]), 1, bip(&[2], &[])),
            (sym(&[0, 1], &[2]), 1, bip(&[], &[2])),
            (sym(&[0, 2], &[1]), 1, bip(&[1], &[1])),
            (sym(&[1, 2], &[0]), 1, bip(&[1, 1], &[])),
            (sym(&[0, 1, 2], &[1, 2]), 1, bip(&[], &[1, 1])),
            (sym(&[0, 1, 2], &[]), 3, bip(&[], &[])),
        ];
        let got = enumerate_symbols(2);
        if got.len() != 6 {
            return Err(format!("expected 6 symbols of rank 2, got {}", got.len()));
        }
        for (s, defect, bipartition) in &expect {
            if !got.contains(s) {
                return Err(format!("missing symbol {s}"));
            }
            if s.defect() != *defect {
                return Err(format!("symbol {s} has defect {}, expected {defect}", s.defect()));
            }
            let label = s.to_label();
            if label.bip != *bipartition {
                return Err(format!("symbol {s} has bipartition {}, expected {bipartition}", label.bip));
            }
        }
        Ok("6 rank-2 symbols with defects (1,1,1,1,1,3) and expected bipartitions".into())
    };
    Check::from_result(name, run())
}

/// Hook-formula degrees equal the closed-form degrees for every constituent
/// of the Coxeter cohomology up to `theta_max`, including the Steinberg
/// value `q^(theta^2)` and the cuspidal value `q(q-1)^2/2`.
pub fn degree_crosscheck(theta_max: u32) -> Check {
    let name = "degrees";
    let run = || -> Result<String, String> {
        for theta in 0..=theta_max {
            for i in 0..=theta {
                let hook = symbol_s(theta, i).degree().map_err(|e| e.to_string())?;
                let closed = lusztig_degree_s(theta, i).map_err(|e| e.to_string())?;
                if hook != closed {
                    return Err(format!("S({theta},{i}): hook {hook} != closed form {closed}"));
                }
            }
            for j in 0..theta.saturating_sub(1) {
                let hook = symbol_t(theta, j).degree().map_err(|e| e.to_string())?;
                let closed = lusztig_degree_t(theta, j).map_err(|e| e.to_string())?;
                if hook != closed {
                    return Err(format!("T({theta},{j}): hook {hook} != closed form {closed}"));
                }
            }
            let steinberg = symbol_s(theta, 0).degree().map_err(|e| e.to_string())?;
            if steinberg != QPoly::q_pow((theta * theta) as usize) {
                return Err(format!("Steinberg degree at theta={theta} is {steinberg}"));
            }
        }
        let cuspidal = sym(&[0, 1, 2], &[]).degree().map_err(|e| e.to_string())?;
        let expect = (&(&QPoly::q_pow(1) * &QPoly::q_pow_minus_one(1)) * &QPoly::q_pow_minus_one(1))
            .exact_div(&QPoly::from_int(2))
            .map_err(|e| e.to_string())?;
        if cuspidal != expect {
            return Err(format!("cuspidal degree is {cuspidal}, expected {expect}"));
        }
        Ok(format!("hook formula == closed form for all constituents, theta <= {theta_max}"))
    };
    Check::from_result(name, run())
}

/// The degreewise restriction identity between consecutive Coxeter tables.
pub fn restriction_identity(theta_max: u32) -> Check {
    let name = "restriction";
    let run = || -> Result<String, String> {
        for theta in 2..=theta_max {
            match verify_restriction_identity(theta) {
                Ok(true) => {}
                Ok(false) => return Err(format!("identity fails at theta={theta}")),
                Err(e) => return Err(e.to_string()),
            }
        }
        Ok(format!("restriction identity holds for 2 <= theta <= {theta_max}"))
    };
    Check::from_result(name, run())
}

/// The explicit first-page lists agree with the induction engine.
pub fn e1_agreement(theta_max: u32) -> Check {
    let name = "e1";
    let run = || -> Result<String, String> {
        for theta in 0..=theta_max {
            for theta_prime in 0..=theta {
                for i in 0..=theta_prime {
                    let engine = e1_term(theta, theta_prime, i);
                    let closed = e1_closed_form(theta, theta_prime, i);
                    if engine != closed {
                        return Err(format!(
                            "term ({theta_prime},{i}) at theta={theta}: engine A={} B={} vs closed A={} B={}",
                            engine.a, engine.b, closed.a, closed.b
                        ));
                    }
                }
            }
        }
        Ok(format!("closed form == induction engine on every term, theta <= {theta_max}"))
    };
    Check::from_result(name, run())
}

/// The ladder identities `A1(t',i) = A0(t'+1,i)` and `B1 = B0` shifted.
pub fn ladders(theta_max: u32) -> Check {
    let name = "ladders";
    let run = || -> Result<String, String> {
        for theta in 1..=theta_max {
            for theta_prime in 0..theta {
                for i in 0..=theta_prime {
                    let here = ab_split(theta, theta_prime, i);
                    let next = ab_split(theta, theta_prime + 1, i);
                    if here.a1 != next.a0 {
                        return Err(format!(
                            "A ladder breaks at ({theta_prime},{i}), theta={theta}"
                        ));
                    }
                    if i + 2 <= theta_prime && here.b1 != next.b0 {
                        return Err(format!(
                            "B ladder breaks at ({theta_prime},{i}), theta={theta}"
                        ));
                    }
                }
            }
            for i in 0..=theta {
                let top = ab_split(theta, theta, i);
                if !top.a1.is_empty() || !top.b1.is_empty() {
                    return Err(format!("epsilon=1 pieces at theta'={theta}, i={i} are nonzero"));
                }
            }
        }
        Ok(format!("ladder identities hold, theta <= {theta_max}"))
    };
    Check::from_result(name, run())
}

/// The even cohomology of the closed stratum matches the ladder kernels,
/// is Poincare symmetric, has trivial top and bottom, and carries the pure
/// eigenvalues `+-q^i` in degree `2i`.
pub fn main_theorem(theta_max: u32) -> Check {
    let name = "main-theorem";
    let run = || -> Result<String, String> {
        for theta in 0..=theta_max {
            let coh = cohomology_of_s(theta);
            for i in 0..=theta {
                let term = coh.at(i);
                let a0 = ab_split(theta, i, i).a0;
                if term.plus != a0 {
                    return Err(format!(
                        "H^{} plus part differs from A0({i},{i}) at theta={theta}",
                        2 * i
                    ));
                }
                let b0 = if i >= 1 && i + 1 <= theta {
                    ab_split(theta, i + 1, i - 1).b0
                } else {
                    RepMultiset::empty()
                };
                if term.minus != b0 {
                    return Err(format!(
                        "H^{} minus part differs from B0({},{}) at theta={theta}",
                        2 * i,
                        i + 1,
                        i.saturating_sub(1)
                    ));
                }
                // purity: the E1 eigenvalues feeding degree 2i are +q^i
                // (the A side at (i, i)) and -q^{(i-1)+1} = -q^i (the B side
                // at (i+1, i-1)); both exponents equal i
                if term.i != i {
                    return Err("even terms indexed out of order".into());
                }
            }
            for i in 0..=theta {
                let (a, b) = (coh.at(i), coh.at(theta - i));
                if a.plus != b.plus || a.minus != b.minus {
                    return Err(format!("Poincare symmetry fails at theta={theta}, i={i}"));
                }
            }
            let trivial = RepMultiset::singleton(sym(&[theta], &[]));
            if coh.at(0).plus != trivial || !coh.at(0).minus.is_empty() {
                return Err(format!("H^0 is not the trivial representation at theta={theta}"));
            }
            if coh.at(theta).plus != trivial || !coh.at(theta).minus.is_empty() {
                return Err(format!("top degree is not trivial at theta={theta}"));
            }
        }
        Ok(format!(
            "even cohomology == A0/B0 kernels, Poincare symmetric, pure, theta <= {theta_max}"
        ))
    };
    Check::from_result(name, run())
}

/// `point_count_s(theta, 1) = prod (q^i + 1)` as polynomials.
pub fn euler_characteristic(theta_max: u32) -> Check {
    let name = "euler";
    let run = || -> Result<String, String> {
        for theta in 0..=theta_max {
            let total = point_count_s(theta, 1).map_err(|e| e.to_string())?;
            let expect = lagrangian_count_poly(theta);
            if total != expect {
                return Err(format!("count over the base field at theta={theta}: {total} != {expect}"));
            }
        }
        Ok(format!("base-field count equals prod(q^i+1), theta <= {theta_max}"))
    };
    Check::from_result(name, run())
}

/// The headline cross-check: brute-force point counts equal the Lefschetz
/// polynomial predictions, total and per stratum.
pub fn lefschetz(cases: &[(u32, u64, u32, u32)], guard: &ScaleGuard) -> Check {
    let name = "lefschetz";
    let run = || -> Result<String, String> {
        for &(theta, p, e0, n) in cases {
            let q0 = BigInt::from(p.pow(e0));
            let q0_i64 = i64::try_from(p.pow(e0)).expect("base field order fits i64");
            let counts = oracle_counts(theta, p, e0, n, guard).map_err(|e| e.to_string())?;
            let predicted = point_count_s(theta, n)
                .map_err(|e| e.to_string())?
                .eval_at_integer(q0_i64)
                .ok_or_else(|| format!("non-integral total at theta={theta}, q={q0}, n={n}"))?;
            if predicted != BigInt::from(counts.total) {
                return Err(format!(
                    "total over F_({q0}^{n}) at theta={theta}: oracle {} vs Lefschetz {predicted}",
                    counts.total
                ));
            }
            for (stratum, &count) in &counts.per_stratum {
                let pred = point_count_stratum(theta, *stratum, n)
                    .map_err(|e| e.to_string())?
                    .eval_at_integer(q0_i64)
                    .ok_or_else(|| format!("non-integral stratum count at theta'={stratum}"))?;
                if pred != BigInt::from(count) {
                    return Err(format!(
                        "stratum {stratum} over F_({q0}^{n}) at theta={theta}: oracle {count} vs Lefschetz {pred}"
                    ));
                }
            }
        }
        Ok(format!("oracle == Lefschetz on {} cases, total and per stratum", cases.len()))
    };
    Check::from_result(name, run())
}

/// Rank, defect, hooks, cohooks and degree are invariant under 1-3 explicit
/// shifts, on randomized symbols.
pub fn shift_invariance(samples: u32) -> Check {
    let name = "shift-invariance";
    let run = || -> Result<String, String> {
        let mut rng = StdRng::seed_from_u64(0x5157_ab01);
        for k in 0..samples {
            let delta = rng.gen_range(0..=2u32);
            let random_partition = |rng: &mut StdRng| {
                let len = rng.gen_range(0..=4usize);
                Partition::new((0..len).map(|_| rng.gen_range(1..=5u32)).collect())
            };
            let label = UnipotentLabel::new(
                delta,
                Bipartition::new(random_partition(&mut rng), random_partition(&mut rng)),
            );
            let s = from_label(&label);
            let (mut top, mut bottom) = (s.top().to_vec(), s.bottom().to_vec());
            for _ in 0..rng.gen_range(1..=3u32) {
                let shifted = shift_rows(&top, &bottom);
                top = shifted.0;
                bottom = shifted.1;
            }
            if rank_of_rows(&top, &bottom) != s.rank()
                || defect_of_rows(&top, &bottom) != s.defect()
                || hooks_of_rows(&top, &bottom) != s.hooks()
                || cohooks_of_rows(&top, &bottom) != s.cohooks()
            {
                return Err(format!("shift changed an invariant of {s} (sample {k})"));
            }
            let shifted_degree = degree_of_rows(&top, &bottom).map_err(|e| e.to_string())?;
            let degree = s.degree().map_err(|e| e.to_string())?;
            if shifted_degree != degree {
                return Err(format!("shift changed the degree of {s} (sample {k})"));
            }
        }
        Ok(format!("{samples} randomized symbols, invariants stable under shift"))
    };
    Check::from_result(name, run())
}

/// Exhaustive duality of strip addition and removal.
pub fn strip_duality(max_size: u32, max_d: u32) -> Check {
    let name = "strip-duality";
    let run = || -> Result<String, String> {
        for n in 0..=max_size {
            for t in Partition::all(n) {
                for d in 0..=max_d {
                    for bigger in t.add_strip(d) {
                        if bigger.size() != n + d {
                            return Err(format!("{t} + strip {d} produced size {}", bigger.size()));
                        }
                        if !bigger.remove_strip(d).contains(&t) {
                            return Err(format!("duality fails: {t} -> {bigger}, d={d}"));
                        }
                    }
                    for smaller in t.remove_strip(d) {
                        if !smaller.add_strip(d).contains(&t) {
                            return Err(format!("duality fails: {t} -> {smaller}, d={d}"));
                        }
                    }
                }
            }
        }
        Ok(format!("add/remove strip duality, |t| <= {max_size}, d <= {max_d}"))
    };
    Check::from_result(name, run())
}

/// Exhaustive combinatorial Frobenius reciprocity between induction and
/// restriction.
pub fn reciprocity(theta_max: u32, a_max: u32) -> Check {
    let name = "reciprocity";
    let run = || -> Result<String, String> {
        for theta in 0..=theta_max {
            for a in 0..=a_max.min(theta) {
                let small = theta - a;
                for s in enumerate_symbols(small) {
                    for t in induce(a, &s).iter() {
                        let down = restrict_sp(a, t).map_err(|e| e.to_string())?;
                        if !down.contains(&s) {
                            return Err(format!("induce({a}, {s}) hit {t} but restriction misses"));
                        }
                    }
                }
                for t in enumerate_symbols(theta) {
                    let down = restrict_sp(a, &t).map_err(|e| e.to_string())?;
                    for s in down.iter() {
                        if !induce(a, s).contains(&t) {
                            return Err(format!("restrict({a}, {t}) hit {s} but induction misses"));
                        }
                    }
                }
            }
        }
        Ok(format!("induce/restrict reciprocity, theta <= {theta_max}, a <= {a_max}"))
    };
    Check::from_result(name, run())
}

/// Degrees specialize to positive integers at prime powers.
pub fn degree_integrality(theta_max: u32, prime_powers: &[i64]) -> Check {
    let name = "integrality";
    let run = || -> Result<String, String> {
        for theta in 1..=theta_max {
            for s in enumerate_symbols(theta) {
                let d = s.degree().map_err(|e| e.to_string())?;
                for &q0 in prime_powers {
                    match d.eval_at_integer(q0) {
                        Some(v) if v > BigInt::from(0) => {}
                        Some(v) => return Err(format!("degree of {s} at q={q0} is {v}")),
                        None => return Err(format!("degree of {s} at q={q0} is not an integer")),
                    }
                }
            }
        }
        Ok(format!(
            "degrees integral and positive at q in {prime_powers:?}, theta <= {theta_max}"
        ))
    };
    Check::from_result(name, run())
}

/// Known suite names, in execution order of `all`.
pub const SUITE_NAMES: &[&str] = &[
    "census",
    "degrees",
    "restriction",
    "e1",
    "ladders",
    "main-theorem",
    "euler",
    "lefschetz",
    "properties",
];

/// Runs a named suite. `theta_max` rescales the bounded checks; the
/// defaults are the pinned verification bounds.
pub fn run_suite(name: &str, theta_max: Option<u32>, guard: &ScaleGuard) -> Result<Vec<Check>, Error> {
    let tm = |default: u32| theta_max.unwrap_or(default);
    let checks = match name {
        "census" => vec![census()],
        "degrees" => vec![degree_crosscheck(tm(6))],
        "restriction" => vec![restriction_identity(tm(6))],
        "e1" => vec![e1_agreement(tm(5))],
        "ladders" => vec![ladders(tm(5))],
        "main-theorem" => vec![main_theorem(tm(6))],
        "euler" => vec![euler_characteristic(tm(4))],
        "lefschetz" => vec![lefschetz(LEFSCHETZ_CASES, guard)],
        "properties" => vec![
            shift_invariance(200),
            strip_duality(8, 4),
            reciprocity(tm(5), 3),
            degree_integrality(tm(5), &[2, 3, 4, 5, 7, 9]),
        ],
        "all" => {
            let mut all = Vec::new();
            for suite in SUITE_NAMES {
                all.extend(run_suite(suite, theta_max, guard)?);
            }
            all
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown suite {other:?}; expected one of {SUITE_NAMES:?} or \"all\""
            )))
        }
    };
    Ok(checks)
}

fn sym(top: &[u32], bottom: &[u32]) -> Symbol {
    Symbol::new(top.to_vec(), bottom.to_vec()).expect("valid symbol literal")
}

fn bip(first: &[u32], second: &[u32]) -> Bipartition {
    Bipartition::new(Partition::new(first.to_vec()), Partition::new(second.to_vec()))
}
