//! The stratification spectral sequence data for the closed stratum `S_theta`
//! in the Lagrangian Grassmannian: first-page terms, their eigenspace and
//! ladder splits, the even cohomology of `S_theta` itself, and the Lefschetz
//! point-count polynomials derived from it.
//!
//! Differentials are never modeled: the sequence degenerates at the second
//! page with split filtration, so the first page plus the `A0/B0` bookkeeping
//! determines the abutment. Point counts stay symbolic in `q`; the extension
//! degree `n` enters only through exponent multiplication and a global sign
//! on the negative eigenspaces.

use std::collections::BTreeMap;
use std::fmt;

use crate::coxeter::{coxeter_cohomology, FrobEigenvalue};
use crate::error::Result;
use crate::harish_chandra::{induce, RepMultiset};
use crate::partitions::{Bipartition, Partition};
use crate::qpoly::QPoly;
use crate::symbols::{from_label, Symbol, UnipotentLabel};

/// One first-page term `E_1^{theta', i}`, split into the `q^i` eigenspace
/// `A` and the `-q^{i+1}` eigenspace `B` (the latter empty unless
/// `i <= theta' - 2`).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct E1Term {
    pub a: RepMultiset,
    pub b: RepMultiset,
}

impl fmt::Debug for E1Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} B={}", self.a, self.b)
    }
}

/// The full first page: term `(theta', i)` for `0 <= i <= theta' <= theta`
/// contributes to total degree `theta' + i`.
#[derive(Clone)]
pub struct E1Page {
    theta: u32,
    terms: BTreeMap<(u32, u32), E1Term>,
}

impl E1Page {
    pub fn theta(&self) -> u32 {
        self.theta
    }

    pub fn term(&self, theta_prime: u32, i: u32) -> &E1Term {
        self.terms.get(&(theta_prime, i)).unwrap_or_else(|| {
            panic!("E1 term ({theta_prime}, {i}) outside 0 <= i <= theta' <= theta")
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &E1Term)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }
}

/// The first-page term computed through the induction engine: the degree
/// `theta' + i` cohomology of the Coxeter variety for `Sp(2 theta')`,
/// induced up by `theta - theta'`. The `theta' = 0` stratum is the finite
/// set of rational points; its induced term is the full principal-series
/// block of the permutation module on it.
pub fn e1_term(theta: u32, theta_prime: u32, i: u32) -> E1Term {
    assert!(i <= theta_prime && theta_prime <= theta, "term indices out of range");
    let coh = coxeter_cohomology(theta_prime);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (symbol, ev) in coh.at_degree(theta_prime + i) {
        let induced = induce(theta - theta_prime, symbol);
        match ev.sign {
            1 => a.extend(induced.iter().cloned()),
            _ => b.extend(induced.iter().cloned()),
        }
    }
    E1Term { a: RepMultiset::new(a), b: RepMultiset::new(b) }
}

/// The whole first page via [`e1_term`].
pub fn e1_page(theta: u32) -> E1Page {
    let mut terms = BTreeMap::new();
    for theta_prime in 0..=theta {
        for i in 0..=theta_prime {
            terms.insert((theta_prime, i), e1_term(theta, theta_prime, i));
        }
    }
    E1Page { theta, terms }
}

/// The same term from the explicit bipartition lists: `alpha` (resp.
/// `gamma`) of the shape `(i + d - s, s)`, `beta` (resp. `delta`) a hook
/// `(m, 1^k)` with two possible shapes per `d`. Overlapping options are
/// deduplicated globally, so each bipartition occurs once.
pub fn e1_closed_form(theta: u32, theta_prime: u32, i: u32) -> E1Term {
    assert!(i <= theta_prime && theta_prime <= theta, "term indices out of range");
    let free = theta - theta_prime;

    let collect = |tail: u32, short_by_two: bool| -> RepMultiset {
        // tail = number of single-box rows in the first hook option
        let mut bips = std::collections::BTreeSet::new();
        for d in 0..=free {
            let m = free - d;
            for s in 0..=d.min(i) {
                let head = Partition::new(vec![i + d - s, s]);
                let mut seconds = vec![Partition::hook_shape(m, tail)];
                if tail >= 1 {
                    seconds.push(Partition::hook_shape(m + 1, tail - 1));
                }
                for second in seconds {
                    bips.insert(Bipartition::new(head.clone(), second));
                }
            }
        }
        let delta = if short_by_two { 1 } else { 0 };
        bips.into_iter()
            .map(|bip| from_label(&UnipotentLabel::new(delta, bip)))
            .collect()
    };

    let a = collect(theta_prime - i, false);
    let b = if i + 2 <= theta_prime {
        collect(theta_prime - 2 - i, true)
    } else {
        RepMultiset::empty()
    };
    E1Term { a, b }
}

/// The ladder split of a first-page term: `A = A0 + A1` where `A_eps`
/// collects the constituents whose label's second partition has exactly
/// `theta' + eps - i` nonzero parts, and `B = B0 + B1` with
/// `theta' - 2 + eps - i` parts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AbSplit {
    pub a0: RepMultiset,
    pub a1: RepMultiset,
    pub b0: RepMultiset,
    pub b1: RepMultiset,
}

pub fn ab_split(theta: u32, theta_prime: u32, i: u32) -> AbSplit {
    split_term(&e1_term(theta, theta_prime, i), theta_prime, i)
}

pub fn split_term(term: &E1Term, theta_prime: u32, i: u32) -> AbSplit {
    let bucket = |ms: &RepMultiset, base: u32| -> (RepMultiset, RepMultiset) {
        let mut eps0 = Vec::new();
        let mut eps1 = Vec::new();
        for s in ms.iter() {
            let parts = s.to_label().bip.second.num_parts() as u32;
            if parts == base {
                eps0.push(s.clone());
            } else if parts == base + 1 {
                eps1.push(s.clone());
            } else {
                panic!("constituent {s} has {parts} second-partition parts, expected {base} or {}",
                       base + 1);
            }
        }
        (RepMultiset::new(eps0), RepMultiset::new(eps1))
    };
    let (a0, a1) = bucket(&term.a, theta_prime - i);
    let (b0, b1) = if i + 2 <= theta_prime {
        bucket(&term.b, theta_prime - 2 - i)
    } else {
        (RepMultiset::empty(), RepMultiset::empty())
    };
    AbSplit { a0, a1, b0, b1 }
}

/// The even cohomology of the closed stratum `S_theta`: in degree `2i`,
/// the `q^i` eigenspace `plus` and the `-q^i` eigenspace `minus`. Odd
/// degrees vanish and are not represented.
#[derive(Clone, PartialEq, Eq)]
pub struct CohomologyOfS {
    theta: u32,
    even: Vec<EvenTerm>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvenTerm {
    /// Half the cohomological degree.
    pub i: u32,
    pub plus: RepMultiset,
    pub minus: RepMultiset,
}

impl CohomologyOfS {
    pub fn theta(&self) -> u32 {
        self.theta
    }

    /// Terms for `i = 0, ..., theta` in order.
    pub fn even_terms(&self) -> &[EvenTerm] {
        &self.even
    }

    pub fn at(&self, i: u32) -> &EvenTerm {
        &self.even[i as usize]
    }

    pub fn plus_eigenvalue(i: u32) -> FrobEigenvalue {
        FrobEigenvalue::plus(i)
    }

    pub fn minus_eigenvalue(i: u32) -> FrobEigenvalue {
        FrobEigenvalue::minus(i)
    }
}

/// The cohomology of `S_theta`: `H^{2i}` is the sum of the symbols
/// `(s, theta+1-s ; 0)` for `0 <= s <= min(i, theta-i)` with eigenvalue
/// `q^i`, and `(0, s+1, theta-s ; -)` for `0 <= s <= min(i-1, theta-1-i)`
/// with eigenvalue `-q^i`.
pub fn cohomology_of_s(theta: u32) -> CohomologyOfS {
    let mut even = Vec::with_capacity(theta as usize + 1);
    for i in 0..=theta {
        let mut plus = Vec::new();
        for s in 0..=i.min(theta - i) {
            plus.push(
                Symbol::new(vec![s, theta + 1 - s], vec![0]).expect("plus symbol is valid"),
            );
        }
        let mut minus = Vec::new();
        if i >= 1 && theta >= i + 1 {
            for s in 0..=(i - 1).min(theta - 1 - i) {
                minus.push(
                    Symbol::new(vec![0, s + 1, theta - s], vec![]).expect("minus symbol is valid"),
                );
            }
        }
        even.push(EvenTerm {
            i,
            plus: RepMultiset::new(plus),
            minus: RepMultiset::new(minus),
        });
    }
    CohomologyOfS { theta, even }
}

/// Sum of hook-formula degrees over a multiset of symbols.
pub fn total_degree(ms: &RepMultiset) -> Result<QPoly> {
    let mut sum = QPoly::zero();
    for s in ms.iter() {
        sum = &sum + &s.degree()?;
    }
    Ok(sum)
}

/// Number of points of `S_theta` over `F_{q^n}`, as a polynomial in `q`:
/// the Frobenius of the degree-`n` extension acts by `(+-q^i)^n` on the
/// degree-`2i` eigenspaces, and odd cohomology contributes nothing.
pub fn point_count_s(theta: u32, n: u32) -> Result<QPoly> {
    assert!(n >= 1, "extension degree must be at least 1");
    let coh = cohomology_of_s(theta);
    let minus_sign = n % 2 == 1;
    let mut count = QPoly::zero();
    for term in coh.even_terms() {
        let weight = QPoly::q_pow((term.i * n) as usize);
        count = &count + &(&total_degree(&term.plus)? * &weight);
        let minus_part = &total_degree(&term.minus)? * &weight;
        count = if minus_sign { &count - &minus_part } else { &count + &minus_part };
    }
    Ok(count)
}

/// Number of points of the open stratum indexed by `theta'` over
/// `F_{q^n}`: the alternating Lefschetz sum over its compactly supported
/// cohomology, `sum_i (-1)^{theta'+i} [q^{in} dim A + (-1)^n q^{(i+1)n} dim B]`.
pub fn point_count_stratum(theta: u32, theta_prime: u32, n: u32) -> Result<QPoly> {
    assert!(n >= 1, "extension degree must be at least 1");
    assert!(theta_prime <= theta, "stratum index exceeds theta");
    let minus_sign = n % 2 == 1;
    let mut count = QPoly::zero();
    for i in 0..=theta_prime {
        let term = e1_term(theta, theta_prime, i);
        let mut contrib = &total_degree(&term.a)? * &QPoly::q_pow((i * n) as usize);
        let b_part = &total_degree(&term.b)? * &QPoly::q_pow(((i + 1) * n) as usize);
        contrib = if minus_sign { &contrib - &b_part } else { &contrib + &b_part };
        if (theta_prime + i) % 2 == 1 {
            contrib = -&contrib;
        }
        count = &count + &contrib;
    }
    Ok(count)
}

/// The classical count of rational Lagrangians, `prod_{i=1}^{theta} (q^i + 1)`.
pub fn lagrangian_count_poly(theta: u32) -> QPoly {
    let mut out = QPoly::one();
    for i in 1..=theta {
        out = &out * &QPoly::q_pow_plus_one(i as usize);
    }
    out
}
