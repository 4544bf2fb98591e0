//! Exact linear algebra: dense matrices, echelon bases, sparse structure
//! tensors and polynomials.

mod echelon;
mod matrix;
mod poly;
mod tensor;

pub use echelon::EchelonBasis;
pub use matrix::Matrix;
pub use poly::{Factorization, PartialFactorization, Polynomial};
pub use tensor::{tensor_index, tensor_unindex, SparseTensor3};

use crate::field::{Field, Scalar};

/// Basis of the intersection of null spaces of a sequence of blocks, computed
/// incrementally: each block is restricted to the current solution space
/// before elimination. Returns a matrix whose columns span the solutions.
pub fn common_kernel<I>(field: &Field, unknowns: usize, blocks: I) -> Matrix
where
    I: IntoIterator<Item = Matrix>,
{
    let mut basis = Matrix::identity(field, unknowns);
    for block in blocks {
        if basis.cols() == 0 {
            break;
        }
        let restricted = block.mul(&basis);
        if restricted.is_zero() {
            continue;
        }
        basis = basis.mul(&restricted.kernel_basis());
    }
    basis
}

/// Puts the columns of `m` into a canonical form: the reduced echelon basis
/// of their span, as columns.
pub fn canonical_column_basis(m: &Matrix) -> Matrix {
    let (r, piv) = m.transpose().rref();
    let rows: Vec<Vec<Scalar>> = (0..piv.len()).map(|i| r.row(i).to_vec()).collect();
    Matrix::from_columns(m.field(), m.rows(), &rows)
}
