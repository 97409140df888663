//! Exact and asymptotic counting of permutations by excedance word.
//!
//! A permutation `p` of `{1, ..., n}` has an excedance at position `i < n`
//! when `p(i) > i`.  Recording `b` for each excedance position and `a`
//! otherwise yields a word of length `n - 1` over `{a, b}`, and the number of
//! permutations producing a given word depends only on which positions exceed.
//! This crate provides:
//!
//! - permutation statistics and word extraction ([`perm`]),
//! - exact counts per word, by brute force for small `n` and by Stirling
//!   number formulas for block words `b^r a^s` ([`count`]),
//! - an independent generating-function route to the same block counts
//!   ([`series`]),
//! - the bijections that explain these formulas ([`bijection`]),
//! - saddle-point estimates for the block counts together with the
//!   diagonal growth constant ([`asym`]),
//! - bundled property checks over all of the above ([`verify`]).
//!
//! Counts are exact `BigUint`s throughout; estimates live on the log scale
//! and are only converted to mantissa/exponent form for display.  All tables
//! are explicit values owned by the caller; there is no global state.

pub mod asym;
pub mod bijection;
pub mod count;
mod error;
pub mod perm;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigUint;
