//! Tensor products of maps and permutations of tensor factors.
//!
//! Flat index convention, used everywhere in the crate: the basis vector
//! `(i, j)` of `X ⊗ Y` sits at `i · dim(Y) + j`, and likewise for more
//! factors (last factor fastest).

use crate::error::{Error, Result};
use crate::field::Field;

use super::Matrix;

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field() != b.field() {
        return Err(Error::fields(a.field(), b.field()));
    }
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = Matrix::zeros(a.field(), ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * br + k, j * bc + l)] = x * y;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `ms[0] ⊗ ms[1] ⊗ …`; the empty product is the 1×1 identity.
pub fn kron_all(field: Field, ms: &[&Matrix]) -> Result<Matrix> {
    ms.iter().try_fold(Matrix::identity(field, 1), |acc, m| kron(&acc, m))
}

/// Permutation matrix reordering tensor factors.
///
/// The input space has factor dimensions `dims`; output factor `k` is
/// input factor `perm[k]`, so a basis tensor with indices `(i_0, …)` is
/// sent to the one with indices `(i_{perm[0]}, i_{perm[1]}, …)`.
/// `tensor_permute(f, &[n, n], &[1, 0])` is the swap `T` on `A ⊗ A`.
pub fn tensor_permute(field: Field, dims: &[usize], perm: &[usize]) -> Result<Matrix> {
    if perm.len() != dims.len() {
        return Err(Error::InvalidPermutation(perm.to_vec()));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::InvalidPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Matrix::zeros(field, total, total);
    let mut idx = vec![0usize; dims.len()];
    for flat in 0..total {
        let mut rem = flat;
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut target = 0;
        for (k, &p) in perm.iter().enumerate() {
            target = target * out_dims[k] + idx[p];
        }
        m[(target, flat)] = field.one();
    }
    Ok(m)
}

/// The swap `X ⊗ Y → Y ⊗ X`.
pub fn swap(field: Field, dx: usize, dy: usize) -> Matrix {
    tensor_permute(field, &[dx, dy], &[1, 0]).expect("valid permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    const Q: Field = Field::Rational;

    #[test]
    fn kron_examples() {
        assert!(kron(&Matrix::identity(Q, 2), &Matrix::identity(Q, 3)).unwrap().is_identity());
        let a = Matrix::from_ints(Q, &[&[3]]);
        let b = Matrix::from_ints(Q, &[&[-5]]);
        assert_eq!(kron(&a, &b).unwrap(), Matrix::from_ints(Q, &[&[-15]]));
        // (flip ⊗ id) e_(0,1) = e_(1,1): flat 1 ↦ flat 3.
        let flip = Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]);
        let k = kron(&flip, &Matrix::identity(Q, 2)).unwrap();
        assert_eq!(k.mul_vec(&vector::unit(Q, 4, 1)).unwrap(), vector::unit(Q, 4, 3));
    }

    #[test]
    fn permutation_examples() {
        assert!(tensor_permute(Q, &[2, 3, 2], &[0, 1, 2]).unwrap().is_identity());
        let t = swap(Q, 3, 3);
        assert!(t.mul(&t).unwrap().is_identity());
        // (a,b,c,d) = (1,0,1,1) at flat 11 goes to (a,d,c,b) = (1,1,1,0) at flat 14.
        let p = tensor_permute(Q, &[2, 2, 2, 2], &[0, 3, 2, 1]).unwrap();
        assert_eq!(p.mul_vec(&vector::unit(Q, 16, 11)).unwrap(), vector::unit(Q, 16, 14));
        assert!(tensor_permute(Q, &[2, 2], &[0, 0]).is_err());
        assert!(tensor_permute(Q, &[2, 2], &[0]).is_err());
    }

    #[test]
    fn swap_moves_factors() {
        // e_(1,2) in X⊗Y (dims 2,3) is flat 5; in Y⊗X it is (2,1), flat 5.
        // e_(0,2) is flat 2; swapped (2,0) is flat 4.
        let s = swap(Q, 2, 3);
        assert_eq!(s.mul_vec(&vector::unit(Q, 6, 2)).unwrap(), vector::unit(Q, 6, 4));
    }
}
