//! Exact homological calculator for finitely presented connected graded
//! algebras `A = T(V)/<R>` with relations in finitely many degrees.
//!
//! The crate computes, over the rationals or a prime field:
//!
//! * minimal graded free resolutions of the trivial module and the induced
//!   bigraded Betti tables,
//! * the generalized Koszul-type complexes attached to the relation degrees
//!   (one-sided and bimodule versions) together with exactness reports,
//! * the subspace-lattice criteria that characterize the Koszul-type
//!   property when relations live in exactly two degrees, including the
//!   exact monomial certificate,
//! * Ext dimensions through the dualized reduced bar complex, cup products,
//!   generation in cohomological degrees one and two, and Hochschild
//!   (co)homology dimension tables.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod algebra;
pub mod cohomology;
pub mod koszul;
pub mod lattice;
pub mod linalg;
pub mod presentation;
pub mod resolution;
pub mod tensor;
pub mod verdict;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("truncation too deep: ambient dimension {required} at tensor degree {degree} exceeds cap {cap}")]
    CapExceeded {
        required: u128,
        degree: usize,
        cap: usize,
    },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("{0} is not contained in {1}")]
    NotContained(String, String),
    #[error("internal invariant violation: {0}")]
    Invariant(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
