//! Exact-arithmetic computation of the unipotent representation
//! combinatorics of finite symplectic groups, and of the cohomology of
//! closed Bruhat-Tits strata in Lagrangian Grassmannians.
//!
//! The crate has two halves that check each other:
//!
//! - the combinatorial half ([`symbols`], [`harish_chandra`], [`coxeter`],
//!   [`strata`]) computes Lusztig symbols, hook-formula degrees,
//!   Harish-Chandra induction/restriction by Pieri strips, the cohomology
//!   tables of Coxeter varieties and of the closed stratum with Frobenius
//!   eigenvalues, and turns them into point-count polynomials through the
//!   Lefschetz trace formula;
//! - the geometric half ([`geometry`]) enumerates Lagrangian subspaces over
//!   small finite fields by brute force and counts the points of the closed
//!   stratum and of each stratum inside it directly.
//!
//! Everything is exact: polynomials in `q` with rational coefficients
//! ([`qpoly`]), table-based finite fields, integer counts. The [`checks`]
//! module packages every cross-check as a named pass/fail suite.

pub mod checks;
pub mod coxeter;
pub mod error;
pub mod geometry;
pub mod harish_chandra;
pub mod partitions;
pub mod qpoly;
pub mod strata;
pub mod symbols;

pub use error::{Error, Result};
