//! Computational additive combinatorics over finite semigroups.
//!
//! Semigroups are Cayley tables on `[0, n)` with `n <= 64`, and subsets are
//! 64-bit masks, so sumsets and the exhaustive sweeps built on them stay cheap.

pub mod algebra;
pub mod cd_constants;
pub mod cli;
pub mod davenport;
pub mod localization;
pub mod set_calculus;
pub mod theorem_suite;

pub use algebra::{ElementSet, ExtendedNat, FiniteSemigroup, SemigroupSpec};
