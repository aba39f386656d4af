//! Exact linear algebra over a configurable field.

pub mod field;
pub mod sparse;
pub mod subspace;
pub mod word;

pub use field::{FieldConfig, Scalar};
pub use sparse::{Echelon, Rref, SparseMatrix, SparseVec};
pub use subspace::{TensorElement, TensorSubspace};

/// Reduced row echelon form of a matrix, with its rank and pivot columns.
pub fn rref(m: &SparseMatrix) -> (Rref, usize, Vec<usize>) {
    let r = m.rref();
    let rank = r.rank();
    let pivots = r.pivots.clone();
    (r, rank, pivots)
}

/// Echelonized basis of the null space of `m`.
pub fn kernel(m: &SparseMatrix) -> Rref {
    Rref::from_rows(m.field, m.ncols, m.kernel())
}
