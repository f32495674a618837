//! Bounds on the parameters of sum-rank-metric codes.
//!
//! The crate computes exact sum-rank sphere and ball volumes, evaluates the
//! Singleton, sphere-packing and Gilbert–Varshamov bounds in exact, simplified
//! and asymptotic form, bounds the probability that a random systematic code is
//! maximum sum-rank distance (MSRD), and checks all of it against brute-force
//! enumeration and seeded Monte-Carlo simulation over explicitly constructed
//! finite fields.

pub mod bounds;
pub mod cli;
pub mod codes;
pub mod combinatorics;
pub mod error;
pub mod fields;
pub mod genericity;
mod numeric;
pub mod volumes;

pub use error::{Error, Result};
pub use numeric::{log2_big, logq_big, pow_big, ratio_to_f64};
