//! Exact field arithmetic and canonical-form linear algebra.
//!
//! Everything downstream (tensor subspaces, resolutions, lattices) is built
//! on the [`Subspace`] type, whose basis is always kept in reduced row
//! echelon form so that equal subspaces have identical representations.

pub mod field;
pub mod matrix;
pub mod sparse;
pub mod subspace;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub(crate) use matrix::Eliminator;
pub use matrix::{kernel_of_columns, rank_of_columns, Matrix};
pub use sparse::SparseVec;
pub use subspace::Subspace;
