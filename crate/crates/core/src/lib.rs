//! Exact enumeration of l-hypermaps.
//!
//! The counts `M^[l]_{g,k}(b_1, …, b_k)` are computed from an `l × l` matrix
//! of formal Laurent series in `λ` whose cyclic trace products generate the
//! k-point functions, and checked against a brute-force enumeration of
//! permutation triples.

pub mod cli;
pub mod curve;
pub mod engine;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
