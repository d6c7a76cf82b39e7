//! Exact univariate polynomials in the indeterminate `q` with rational
//! coefficients.
//!
//! Every character degree and point count in this crate lives here; nothing
//! is ever evaluated in floating point. Quotients are performed by
//! [`QPoly::exact_div`] exactly at the places where polynomiality is
//! guaranteed, so a transcription bug in a hook or cohook enumeration
//! surfaces as a loud [`Error::NonExactDivision`] instead of a silently
//! wrong rational function.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exact rational scalar used for all coefficients.
pub type Rat = BigRational;

/// A polynomial in `q`, stored densely: `coeffs[k]` is the coefficient of
/// `q^k`. Canonical form has no trailing zero coefficients; the zero
/// polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    /// Builds a polynomial from coefficients (index = exponent), stripping
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        QPoly::new(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::constant(Rat::from_integer(BigInt::from(n)))
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        QPoly { coeffs }
    }

    /// The polynomial `q^k - 1`.
    pub fn q_pow_minus_one(k: usize) -> Self {
        &QPoly::q_pow(k) - &QPoly::one()
    }

    /// The polynomial `q^k + 1`.
    pub fn q_pow_plus_one(k: usize) -> Self {
        &QPoly::q_pow(k) + &QPoly::one()
    }

    /// Coefficients in canonical form (no trailing zeros).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The coefficient of `q^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `q -> q^k`. Used by the Lefschetz bookkeeping where the
    /// Frobenius over an extension of degree `n` acts by `(+-q^i)^n`.
    pub fn substitute_power(&self, k: usize) -> QPoly {
        assert!(k >= 1, "substitute_power requires k >= 1");
        let mut coeffs = vec![Rat::zero(); self.coeffs.len().saturating_mul(k)];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k] = c.clone();
            }
        }
        QPoly::new(coeffs)
    }

    /// Exact division: returns `r` with `r * den == self`, or
    /// [`Error::NonExactDivision`] when a remainder is left.
    ///
    /// Panics on a zero divisor; callers divide only by products of
    /// `q^k +- 1` and nonzero constants.
    pub fn exact_div(&self, den: &QPoly) -> Result<QPoly> {
        assert!(!den.is_zero(), "exact_div by the zero polynomial");
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dn = den.coeffs.len() - 1;
        let lead = &den.coeffs[dn];
        let mut rem = self.coeffs.clone();
        if rem.len() < den.coeffs.len() {
            return Err(Error::NonExactDivision(format!("{self} / {den}")));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn] / lead;
            if !c.is_zero() {
                for (j, d) in den.coeffs.iter().enumerate() {
                    let t = &c * d;
                    rem[k + j] = &rem[k + j] - t;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision(format!("{self} / {den}")));
        }
        Ok(QPoly::new(quot))
    }

    /// Exact evaluation at an integer.
    pub fn eval_at(&self, q0: i64) -> Rat {
        let q = Rat::from_integer(BigInt::from(q0));
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &q + c;
        }
        acc
    }

    /// Evaluation that must land on an integer; `None` otherwise.
    pub fn eval_at_integer(&self, q0: i64) -> Option<BigInt> {
        let v = self.eval_at(q0);
        v.is_integer().then(|| v.to_integer())
    }
}

fn add_impl(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut coeffs = Vec::with_capacity(n);
    for k in 0..n {
        coeffs.push(a.coeff(k) + b.coeff(k));
    }
    QPoly::new(coeffs)
}

fn mul_impl(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let mut coeffs = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            coeffs[i + j] = &coeffs[i + j] + ca * cb;
        }
    }
    QPoly::new(coeffs)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $impl_fn(self, rhs)
            }
        }
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $impl_fn(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Mul, mul, mul_impl);

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        add_impl(self, &(-rhs))
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl fmt::Display for QPoly {
    /// Fixed rendering `c_k*q^k + ... + c_0` with exact rational
    /// coefficients, highest exponent first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if first {
                write_term(f, c, k)?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
                write_term(f, &-c, k)?;
            } else {
                write!(f, " + ")?;
                write_term(f, c, k)?;
            }
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &Rat, k: usize) -> fmt::Result {
    match k {
        0 => write!(f, "{c}"),
        1 => write!(f, "{c}*q"),
        _ => write!(f, "{c}*q^{k}"),
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(coeffs: &[i64]) -> QPoly {
        QPoly::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn add_examples() {
        // (q+1) + (q-1) = 2q
        assert_eq!(poly(&[1, 1]) + poly(&[-1, 1]), poly(&[0, 2]));
        // p + 0 = p
        let p = poly(&[3, 0, 7]);
        assert_eq!(&p + &QPoly::zero(), p);
        // (q^2-1) + 1 = q^2
        assert_eq!(poly(&[-1, 0, 1]) + QPoly::one(), QPoly::q_pow(2));
    }

    #[test]
    fn mul_examples() {
        // (q-1)(q+1) = q^2-1
        assert_eq!(poly(&[-1, 1]) * poly(&[1, 1]), poly(&[-1, 0, 1]));
        // p * 1 = p
        let p = poly(&[2, 5, 0, 1]);
        assert_eq!(&p * &QPoly::one(), p);
        // (q^2+1)(q+1) = q^3+q^2+q+1
        assert_eq!(poly(&[1, 0, 1]) * poly(&[1, 1]), poly(&[1, 1, 1, 1]));
    }

    #[test]
    fn exact_div_examples() {
        // (q^4-1)/(q^2-1) = q^2+1
        assert_eq!(
            poly(&[-1, 0, 0, 0, 1]).exact_div(&poly(&[-1, 0, 1])).unwrap(),
            poly(&[1, 0, 1])
        );
        // (q^2-1)/(q-1) = q+1
        assert_eq!(
            poly(&[-1, 0, 1]).exact_div(&poly(&[-1, 1])).unwrap(),
            poly(&[1, 1])
        );
        // (q^2+1)/(q-1) leaves a remainder
        assert!(matches!(
            poly(&[1, 0, 1]).exact_div(&poly(&[-1, 1])),
            Err(Error::NonExactDivision(_))
        ));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(&[1, 0, 1]).eval_at(3), rat(10, 1));
        assert_eq!(QPoly::zero().eval_at(5), rat(0, 1));
        // q(q^2+1)/2 at q=3 is 15: the degree of the symbol (1,2;0) at q=3.
        let p = QPoly::new(vec![rat(0, 1), rat(1, 2), rat(0, 1), rat(1, 2)]);
        assert_eq!(p.eval_at(3), rat(15, 1));
        assert_eq!(p.eval_at_integer(3), Some(BigInt::from(15)));
    }

    #[test]
    fn substitute_power_scales_exponents() {
        let p = poly(&[1, 2, 0, 3]);
        let s = p.substitute_power(2);
        assert_eq!(s.coeff(0), rat(1, 1));
        assert_eq!(s.coeff(2), rat(2, 1));
        assert_eq!(s.coeff(6), rat(3, 1));
        assert_eq!(s.degree(), Some(6));
    }

    #[test]
    fn display_fixed_form() {
        let p = QPoly::new(vec![rat(0, 1), rat(1, 2), rat(-1, 1), rat(1, 2)]);
        assert_eq!(p.to_string(), "1/2*q^3 - 1*q^2 + 1/2*q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_int(-3).to_string(), "-3");
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 0..6)
            .prop_map(|cs| QPoly::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn exact_div_round_trip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn canonical_form_is_stable(a in arb_poly()) {
            // add(p, 0) is bit-identical to the canonicalized p
            let sum = &a + &QPoly::zero();
            prop_assert_eq!(sum.coeffs(), a.coeffs());
        }

        #[test]
        fn eval_is_ring_hom(a in arb_poly(), b in arb_poly(), q0 in -4i64..=4) {
            prop_assert_eq!((&a + &b).eval_at(q0), a.eval_at(q0) + b.eval_at(q0));
            prop_assert_eq!((&a * &b).eval_at(q0), a.eval_at(q0) * b.eval_at(q0));
        }
    }
}
