//! Finite-geometry ground truth: small finite fields, exact linear algebra,
//! Lagrangian enumeration, and the stratum-bucketed point counter used to
//! cross-check the Lefschetz predictions.

pub mod field;
pub mod lagrangian;
pub mod matrix;

pub use field::{Fe, FiniteField};
pub use lagrangian::{
    enumerate_lagrangians, expected_lagrangian_count, gram_matrix, intersection_profile,
    is_lagrangian, oracle_counts, stratum_index, tau, OracleCounts, ScaleGuard,
};
pub use matrix::Mat;
