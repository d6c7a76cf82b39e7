//! Table-based exact arithmetic for the small finite fields F_{p^e},
//! p in {2, 3, 5, 7} and p^e <= 81.
//!
//! An element is its index in 0..p^e: the index encodes the coefficient
//! vector of the residue-class polynomial through base-p digits,
//! `n = c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Extensions are quotients by
//! the fixed irreducible monic polynomials in [`MODULI`], so encodings are
//! reproducible across runs and machines.

use crate::error::{Error, Result};

/// An element index; fields here never exceed 81 elements.
pub type Fe = u8;

/// Lower coefficients of the monic irreducible `x^e + m[e-1] x^{e-1} + ... + m[0]`
/// defining each supported extension. Degree-1 entries are the prime fields.
const MODULI: &[(u64, u32, &[u64])] = &[
    (2, 1, &[]),
    (2, 2, &[1, 1]),          // x^2 + x + 1
    (2, 3, &[1, 1, 0]),       // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0]),    // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0]), // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 0, 0, 0]), // x^6 + x + 1
    (3, 1, &[]),
    (3, 2, &[1, 0]),       // x^2 + 1
    (3, 3, &[2, 2, 0]),    // x^3 + 2x + 2
    (3, 4, &[2, 1, 0, 0]), // x^4 + x + 2
    (5, 1, &[]),
    (5, 2, &[2, 0]), // x^2 + 2
    (7, 1, &[]),
    (7, 2, &[1, 0]), // x^2 + 1
];

/// A finite field with fully tabulated arithmetic.
pub struct FiniteField {
    p: u64,
    e: u32,
    order: usize,
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
    frob: Vec<Fe>,
}

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<FiniteField> {
        let modulus = MODULI
            .iter()
            .find(|&&(mp, me, _)| mp == p && me == e)
            .map(|&(_, _, m)| m)
            .ok_or(Error::UnsupportedField { p, e })?;
        let order = (p as usize).pow(e);

        let digits = |mut n: usize| -> Vec<u64> {
            let mut d = vec![0u64; e as usize];
            for slot in d.iter_mut() {
                *slot = (n as u64) % p;
                n /= p as usize;
            }
            d
        };
        let index = |d: &[u64]| -> Fe {
            let mut n = 0u64;
            for &c in d.iter().rev() {
                n = n * p + c;
            }
            n as Fe
        };
        let mul_digits = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let mut prod = vec![0u64; 2 * e as usize - 1];
            for (i, &ca) in a.iter().enumerate() {
                for (j, &cb) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ca * cb) % p;
                }
            }
            // reduce by x^e = -modulus_lower
            for k in (e as usize..prod.len()).rev() {
                let c = prod[k];
                if c != 0 {
                    prod[k] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        let idx = k - e as usize + i;
                        prod[idx] = (prod[idx] + (p - m % p) * c) % p;
                    }
                }
            }
            prod.truncate(e as usize);
            prod
        };

        let mut add = vec![0; order * order];
        let mut mul = vec![0; order * order];
        let mut neg = vec![0; order];
        for a in 0..order {
            let da = digits(a);
            let dn: Vec<u64> = da.iter().map(|&c| (p - c) % p).collect();
            neg[a] = index(&dn);
            for b in 0..order {
                let db = digits(b);
                let ds: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * order + b] = index(&ds);
                mul[a * order + b] = index(&mul_digits(&da, &db));
            }
        }
        let mut inv = vec![0; order];
        for a in 1..order {
            let b = (1..order)
                .find(|&b| mul[a * order + b] == 1)
                .unwrap_or_else(|| panic!("modulus for F_{p}^{e} is not irreducible"));
            inv[a] = b as Fe;
        }
        let mut frob = vec![0; order];
        for a in 0..order {
            let mut acc: Fe = 1;
            for _ in 0..p {
                acc = mul[acc as usize * order + a];
            }
            frob[a] = acc;
        }
        Ok(FiniteField { p, e, order, add, mul, neg, inv, frob })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Fe {
        0
    }

    pub fn one(&self) -> Fe {
        1
    }

    /// The prime-field element `c mod p`.
    pub fn from_prime(&self, c: u64) -> Fe {
        (c % self.p) as Fe
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add[a as usize * self.order + b as usize]
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg[b as usize])
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a as usize]
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.mul[a as usize * self.order + b as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: Fe) -> Fe {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// The absolute Frobenius `x -> x^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.frob[a as usize]
    }

    /// The relative Frobenius `x -> x^{p^{e0}}` of a subfield of index
    /// `e / e0`.
    pub fn power_q(&self, a: Fe, e0: u32) -> Fe {
        let mut out = a;
        for _ in 0..e0 {
            out = self.frobenius(out);
        }
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.order as Fe
    }
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F_{{{}^{}}}", self.p, self.e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn supported() -> Vec<(u64, u32)> {
        MODULI.iter().map(|&(p, e, _)| (p, e)).collect()
    }

    #[test]
    fn field_axioms_on_all_elements() {
        for (p, e) in supported() {
            let f = FiniteField::new(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_automorphism() {
        for (p, e) in supported() {
            let f = FiniteField::new(p, e).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn relative_frobenius_fixes_exactly_the_subfield() {
        for (p, e) in supported() {
            let f = FiniteField::new(p, e).unwrap();
            for e0 in 1..=e {
                if e % e0 != 0 {
                    continue;
                }
                let fixed = f.elements().filter(|&a| f.power_q(a, e0) == a).count();
                assert_eq!(
                    fixed,
                    (p as usize).pow(e0),
                    "fixed field of x -> x^(p^{e0}) in F_{p}^{e}"
                );
            }
        }
    }

    #[test]
    fn full_frobenius_is_identity() {
        for (p, e) in supported() {
            let f = FiniteField::new(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.power_q(a, e), a);
            }
        }
    }

    #[test]
    fn unsupported_fields_are_rejected() {
        assert!(matches!(
            FiniteField::new(11, 1),
            Err(Error::UnsupportedField { p: 11, e: 1 })
        ));
        assert!(matches!(
            FiniteField::new(3, 5),
            Err(Error::UnsupportedField { .. })
        ));
    }
}
