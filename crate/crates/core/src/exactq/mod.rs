//! Exact scalars, matrices and elimination.

pub mod elim;
pub mod matrix;
pub mod numfield;
pub mod scalar;
pub mod subspace;

pub use elim::{
    inverse, nullspace, nullspace_dense, nullspace_sparse, rank, rref, rref_sparse, rref_via_sparse, Coordinates,
    Reducer, Rref, SolutionSpace, SparseRow,
};
pub use matrix::{combine, Matrix, QMatrix};
pub use numfield::{NfElem, NumberField};
pub use scalar::{fmt_q, parse_q, q, qf, Scalar, Q};
