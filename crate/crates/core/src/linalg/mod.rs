//! Exact dense linear algebra over ℚ and GF(p).
//!
//! Everything here is exact: ranks, kernels and images are computed by
//! Gauss–Jordan elimination with canonical reduced entries, and subspaces
//! are stored by their unique reduced row-echelon basis so that equality
//! of spans is equality of representations.

mod elim;
mod matrix;
mod subspace;
mod tensor;

pub use matrix::{vector, Matrix};
pub use subspace::{SpanBuilder, Subspace};
pub use tensor::{kron, kron_all, swap, tensor_permute};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::par::Execution;
use elim::Rows;

/// Reduced row-echelon form with zero rows removed, plus the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    rref_with(m, Execution::default())
}

pub fn rref_with(m: &Matrix, exec: Execution) -> (Matrix, Vec<usize>) {
    let mut rows = Rows::from_matrix(m);
    let pivots = rows.eliminate(m.cols(), true, exec);
    (rows.into_matrix(m.field(), m.cols()), pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rank_with(m, Execution::default())
}

pub fn rank_with(m: &Matrix, exec: Execution) -> usize {
    // Eliminate along the shorter side.
    let work = if m.rows() > m.cols() { m.transpose() } else { m.clone() };
    let mut rows = Rows::from_matrix(&work);
    rows.eliminate(work.cols(), false, exec).len()
}

/// Null space `{v : m·v = 0}` in canonical form.
pub fn kernel(m: &Matrix) -> Subspace {
    kernel_with(m, Execution::default())
}

pub fn kernel_with(m: &Matrix, exec: Execution) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let (r, pivots) = rref_with(m, exec);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::with_capacity(n - pivots.len());
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vector::zeros(field, n);
        v[f] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -&r[(i, f)];
        }
        vectors.push(v);
    }
    let basis = Matrix::from_rows(field, n, &vectors).expect("consistent kernel rows");
    Subspace::from_spanning_rows_with(&basis, exec)
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_spanning_rows(&m.transpose())
}

/// Some `x` with `m·x = rhs`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if rhs.len() != m.rows() {
        return Err(Error::dims("solve", m.rows(), rhs.len()));
    }
    let field = m.field();
    let aug = m.hstack(&Matrix::column(field, rhs))?;
    let (r, pivots) = rref(&aug);
    let n = m.cols();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vector::zeros(field, n);
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, n)].clone();
    }
    Ok(Some(x))
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(m: &Matrix) -> Result<Option<Matrix>> {
    if !m.is_square() {
        return Err(Error::dims("inverse", "square", format!("{:?}", m.shape())));
    }
    let n = m.rows();
    let aug = m.hstack(&Matrix::identity(m.field(), n))?;
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    let idx: Vec<usize> = (n..2 * n).collect();
    Ok(Some(r.select_cols(&idx)))
}
