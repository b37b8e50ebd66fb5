//! Frobenius structures: counit, bilinear form, dual basis and coproduct.
//!
//! Given a functional `ε` on `A`, the form `η(a, b) = ε(ab)` has Gram
//! matrix `G[i][j] = ε(e_i e_j)`. When `G` is invertible the dual basis
//! `e_i^#` with `η(e_i^#, e_j) = δ_ij` is read off the rows of `G⁻¹`, and
//! the coproduct is `δ(a) = (a ⊗ 1)·δ(1)` with the Casimir element
//! `δ(1) = Σ_j e_j ⊗ e_j^#`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraPresentation, Builtin};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, kron, swap, vector, Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct FrobeniusData {
    algebra: AlgebraPresentation,
    counit: Vec<Scalar>,
    gram: Matrix,
    dual_basis: Vec<Vec<Scalar>>,
    delta_one: Vec<Scalar>,
    coproduct: Matrix,
    is_symmetric: bool,
}

impl FrobeniusData {
    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `gram[i][j] = ε(e_i e_j)`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `e_i^#` in coordinates.
    pub fn dual_basis(&self) -> &[Vec<Scalar>] {
        &self.dual_basis
    }

    /// `δ(1_A)` as a vector of `A ⊗ A`.
    pub fn delta_one(&self) -> &[Scalar] {
        &self.delta_one
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric
    }

    /// The `n² × n` matrix of `δ`.
    pub fn coproduct_matrix(&self) -> &Matrix {
        &self.coproduct
    }

    /// The `1 × n` matrix of `ε`.
    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field(), self.dim(), std::slice::from_ref(&self.counit)).expect("counit has length n")
    }

    /// `T ∘ δ(1_A)`.
    pub fn swapped_delta_one(&self) -> Vec<Scalar> {
        let n = self.dim();
        swap(self.field(), n, n).mul_vec(&self.delta_one).expect("length n²")
    }

    pub fn eta(&self, a: &[Scalar], b: &[Scalar]) -> Result<Scalar> {
        let ab = self.algebra.multiply(a, b)?;
        Ok(vector::dot(&self.counit, &ab))
    }
}

/// Builds the Frobenius data of `ε`, failing with [`Error::DegenerateForm`]
/// when the form `ε(ab)` is degenerate.
pub fn frobenius_from_counit(alg: &AlgebraPresentation, counit: &[Scalar]) -> Result<FrobeniusData> {
    let n = alg.dim();
    let field = alg.field();
    if counit.len() != n {
        return Err(Error::dims("counit", n, counit.len()));
    }
    if let Some(s) = counit.iter().find(|s| s.field() != field) {
        return Err(Error::fields(field, s.field()));
    }
    let gram = gram_matrix(alg, counit);
    let inv = linalg::inverse(&gram)?.ok_or_else(|| Error::DegenerateForm {
        rank: linalg::rank(&gram),
        dim: n,
    })?;
    let dual_basis = inv.row_vectors();
    let mut delta_one = vector::zeros(field, n * n);
    for j in 0..n {
        for k in 0..n {
            delta_one[j * n + k] = inv[(j, k)].clone();
        }
    }
    let id = Matrix::identity(field, n);
    let mut columns = Vec::with_capacity(n);
    for a in 0..n {
        let la = alg.left_regular(&alg.basis_vector(a))?;
        columns.push(kron(&la, &id)?.mul_vec(&delta_one)?);
    }
    let coproduct = Matrix::from_rows(field, n * n, &columns)?.transpose();
    let is_symmetric = gram == gram.transpose();
    let fd = FrobeniusData {
        algebra: alg.clone(),
        counit: counit.to_vec(),
        gram,
        dual_basis,
        delta_one,
        coproduct,
        is_symmetric,
    };
    verify_frobenius_data(&fd)?;
    Ok(fd)
}

fn gram_matrix(alg: &AlgebraPresentation, counit: &[Scalar]) -> Matrix {
    let n = alg.dim();
    Matrix::from_fn(alg.field(), n, n, |i, j| {
        alg.basis_product(i, j)
            .iter()
            .fold(alg.field().zero(), |acc, (k, c)| &acc + &(c * &counit[*k]))
    })
}

fn fail(what: &str) -> Error {
    Error::VerificationFailed(what.to_string())
}

/// Re-checks every structural law of constructed Frobenius data.
pub fn verify_frobenius_data(fd: &FrobeniusData) -> Result<()> {
    let alg = &fd.algebra;
    let n = alg.dim();
    let field = alg.field();
    for i in 0..n {
        for j in 0..n {
            let pairing = fd.eta(&fd.dual_basis[i], &alg.basis_vector(j))?;
            let expect = if i == j { field.one() } else { field.zero() };
            if pairing != expect {
                return Err(fail("dual basis pairing"));
            }
        }
    }
    let (left, right) = counit_composites(fd)?;
    if !left.is_identity() || !right.is_identity() {
        return Err(fail("counit law"));
    }
    let id = Matrix::identity(field, n);
    for a in 0..n {
        let e = alg.basis_vector(a);
        let l = kron(&alg.left_regular(&e)?, &id)?.mul_vec(&fd.delta_one)?;
        let r = kron(&id, &alg.right_regular(&e)?)?.mul_vec(&fd.delta_one)?;
        if l != r {
            return Err(fail("Casimir property of δ(1)"));
        }
    }
    if !is_coassociative(fd)? {
        return Err(fail("coassociativity"));
    }
    if fd.is_symmetric != (fd.swapped_delta_one() == fd.delta_one) {
        return Err(fail("symmetry of the form vs symmetry of δ(1)"));
    }
    Ok(())
}

/// `((ε⊗id)∘δ, (id⊗ε)∘δ)`; both equal the identity for a counital coproduct.
pub fn counit_composites(fd: &FrobeniusData) -> Result<(Matrix, Matrix)> {
    let id = Matrix::identity(fd.field(), fd.dim());
    let eps = fd.counit_matrix();
    let left = kron(&eps, &id)?.mul(&fd.coproduct)?;
    let right = kron(&id, &eps)?.mul(&fd.coproduct)?;
    Ok((left, right))
}

/// Whether `(δ⊗id)∘δ = (id⊗δ)∘δ` as `n³ × n` matrices.
pub fn is_coassociative(fd: &FrobeniusData) -> Result<bool> {
    let id = Matrix::identity(fd.field(), fd.dim());
    let d = &fd.coproduct;
    let lhs = kron(d, &id)?.mul(d)?;
    let rhs = kron(&id, d)?.mul(d)?;
    Ok(lhs == rhs)
}

/// Whether `δ(a x b) = (a⊗b)·δ(x)` for all basis elements, i.e. `δ` is a
/// map of left `A^e`-modules.
pub fn is_bimodule_map(fd: &FrobeniusData) -> Result<bool> {
    let alg = &fd.algebra;
    let left = alg.left_regular_basis();
    let right = alg.right_regular_basis();
    for l in &left {
        for r in &right {
            let lhs = fd.coproduct.mul(&l.mul(r)?)?;
            let rhs = kron(l, r)?.mul(&fd.coproduct)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Σ_j f_j ⊗ e_j` for the right dual basis `η(e_i, f_j) = δ_ij`; agrees with
/// `δ(1)` built from the left dual basis.
pub fn delta_one_from_right_dual(fd: &FrobeniusData) -> Result<Vec<Scalar>> {
    let n = fd.dim();
    let f = linalg::inverse(&fd.gram.transpose())?.ok_or_else(|| fail("transpose of Gram matrix singular"))?;
    let mut out = vector::zeros(fd.field(), n * n);
    for j in 0..n {
        for k in 0..n {
            // f_j = Σ_k F[j][k] e_k contributes F[j][k] e_k ⊗ e_j
            out[k * n + j] = &out[k * n + j] + &f[(j, k)];
        }
    }
    Ok(out)
}

/// `δ(a)`, computed as `(a⊗1)·δ(1)` and checked against `(1⊗a)·δ(1)`.
pub fn coproduct(fd: &FrobeniusData, a: &[Scalar]) -> Result<Vec<Scalar>> {
    let alg = &fd.algebra;
    let id = Matrix::identity(fd.field(), fd.dim());
    let left = kron(&alg.left_regular(a)?, &id)?.mul_vec(&fd.delta_one)?;
    let right = kron(&id, &alg.right_regular(a)?)?.mul_vec(&fd.delta_one)?;
    if left != right {
        return Err(fail("(a⊗1)·δ(1) ≠ (1⊗a)·δ(1)"));
    }
    Ok(left)
}

/// The image `δ(A) ⊆ A ⊗ A`.
pub fn delta_image(fd: &FrobeniusData) -> Subspace {
    linalg::image(&fd.coproduct)
}

/// How [`find_frobenius`] looks for a nondegenerate functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStrategy {
    /// The catalog's canonical functional.
    BuiltinDefault(Builtin),
    /// Seeded integer vectors with coefficients in `[-3, 3]`.
    Randomized { seed: u64, max_tries: u64 },
    /// Every functional over GF(p), in lexicographic order.
    Exhaustive { max_candidates: u64 },
}

/// Searches for a Frobenius functional.
///
/// Over ℚ a failed search is reported as inconclusive; over GF(p) an
/// exhaustive search that enumerates every functional is definitive.
pub fn find_frobenius(alg: &AlgebraPresentation, strategy: &SearchStrategy) -> Result<FrobeniusData> {
    let n = alg.dim();
    let field = alg.field();
    match strategy {
        SearchStrategy::BuiltinDefault(b) => frobenius_from_counit(alg, &b.default_counit(field)),
        SearchStrategy::Randomized { seed, max_tries } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            for _ in 0..*max_tries {
                let eps: Vec<Scalar> = (0..n).map(|_| field.from_i64(rng.random_range(-3..=3))).collect();
                if let Some(fd) = try_counit(alg, &eps)? {
                    return Ok(fd);
                }
            }
            Err(Error::NotFound {
                tried: *max_tries,
                definitive: false,
            })
        }
        SearchStrategy::Exhaustive { max_candidates } => {
            let Field::Prime(p) = field else {
                return Err(Error::InvalidParameter("exhaustive search needs a finite field".into()));
            };
            let total = (p as u64).checked_pow(n as u32);
            let budget = total.map_or(*max_candidates, |t| t.min(*max_candidates));
            let mut digits = vec![0u32; n];
            for _ in 0..budget {
                let eps: Vec<Scalar> = digits.iter().map(|&d| field.from_i64(d as i64)).collect();
                if let Some(fd) = try_counit(alg, &eps)? {
                    return Ok(fd);
                }
                // Increment, last coordinate fastest.
                for d in digits.iter_mut().rev() {
                    *d += 1;
                    if *d < p {
                        break;
                    }
                    *d = 0;
                }
            }
            Err(Error::NotFound {
                tried: budget,
                definitive: total == Some(budget),
            })
        }
    }
}

fn try_counit(alg: &AlgebraPresentation, eps: &[Scalar]) -> Result<Option<FrobeniusData>> {
    if linalg::rank(&gram_matrix(alg, eps)) < alg.dim() {
        return Ok(None);
    }
    frobenius_from_counit(alg, eps).map(Some)
}

/// Default discovery: the catalog functional when there is one, falling
/// back to exhaustive search over small prime fields and to a seeded
/// random search otherwise.
pub fn discover_frobenius(alg: &AlgebraPresentation, builtin: Option<Builtin>, seed: u64) -> Result<FrobeniusData> {
    if let Some(b) = builtin {
        match find_frobenius(alg, &SearchStrategy::BuiltinDefault(b)) {
            Err(Error::DegenerateForm { .. }) => {}
            other => return other,
        }
    }
    if let Field::Prime(p) = alg.field() {
        if (p as f64).powi(alg.dim() as i32) <= 1e6 {
            return find_frobenius(alg, &SearchStrategy::Exhaustive { max_candidates: 1_000_000 });
        }
    }
    find_frobenius(alg, &SearchStrategy::Randomized { seed, max_tries: 200 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin;

    const Q: Field = Field::Rational;

    fn default_fd(name: &str, param: Option<usize>, field: Field) -> FrobeniusData {
        let b = Builtin::parse(name, param).unwrap();
        let alg = b.build(field).unwrap();
        find_frobenius(&alg, &SearchStrategy::BuiltinDefault(b)).unwrap()
    }

    #[test]
    fn exterior_delta_one() {
        let fd = default_fd("exterior2", None, Q);
        // 1⊗xy + xy⊗1 - x⊗y + y⊗x at flats 3, 12, 6, 9
        let mut expect = vector::zeros(Q, 16);
        expect[3] = Q.one();
        expect[12] = Q.one();
        expect[6] = Q.from_i64(-1);
        expect[9] = Q.one();
        assert_eq!(fd.delta_one(), expect.as_slice());
        assert!(!fd.is_symmetric());
        assert_eq!(fd.algebra().format_tensor(fd.delta_one(), 2), "1⊗xy - x⊗y + y⊗x + xy⊗1");
    }

    #[test]
    fn exterior_coproduct_values() {
        let fd = default_fd("exterior2", None, Q);
        let alg = fd.algebra().clone();
        assert_eq!(coproduct(&fd, alg.unit()).unwrap(), fd.delta_one());
        let dx = coproduct(&fd, &alg.basis_vector(1)).unwrap();
        assert_eq!(alg.format_tensor(&dx, 2), "x⊗xy + xy⊗x");
        let dxy = coproduct(&fd, &alg.basis_vector(3)).unwrap();
        assert_eq!(alg.format_tensor(&dxy, 2), "xy⊗xy");
    }

    #[test]
    fn trace_form_is_symmetric() {
        assert!(default_fd("matrix", Some(2), Q).is_symmetric());
    }

    #[test]
    fn cyclic_group_casimir() {
        let fd = default_fd("group_cyclic", Some(3), Q);
        assert_eq!(fd.algebra().format_tensor(fd.delta_one(), 2), "1⊗1 + g⊗g^2 + g^2⊗g");
    }

    #[test]
    fn dual_numbers_delta_image() {
        let fd = default_fd("trunc_poly", Some(2), Q);
        let alg = fd.algebra().clone();
        assert_eq!(alg.format_tensor(fd.delta_one(), 2), "1⊗x + x⊗1");
        let dx = coproduct(&fd, &alg.basis_vector(1)).unwrap();
        assert_eq!(alg.format_tensor(&dx, 2), "x⊗x");
        assert_eq!(delta_image(&fd).dim(), 2);
    }

    #[test]
    fn degenerate_functional() {
        let alg = builtin("exterior2", None, Q).unwrap();
        let err = frobenius_from_counit(&alg, &vector::unit(Q, 4, 0)).unwrap_err();
        assert!(matches!(err, Error::DegenerateForm { rank: 1, dim: 4 }));
    }

    #[test]
    fn exhaustive_finds_top_coefficient() {
        let f2 = Field::Prime(2);
        let alg = builtin("trunc_poly", Some(3), f2).unwrap();
        let fd = find_frobenius(&alg, &SearchStrategy::Exhaustive { max_candidates: 1 << 20 }).unwrap();
        assert!(!fd.counit()[2].is_zero());
    }

    fn square_zero(field: Field) -> AlgebraPresentation {
        // K[x,y]/(x², xy, y²), basis 1, x, y
        let one = field.one();
        let st = vec![
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (0, 2, 2, one.clone()),
            (1, 0, 1, one.clone()),
            (2, 0, 2, one.clone()),
        ];
        AlgebraPresentation::new(field, vec!["1".into(), "x".into(), "y".into()], &st, vector::unit(field, 3, 0)).unwrap()
    }

    #[test]
    fn non_frobenius_is_definitive_over_gf2() {
        let alg = square_zero(Field::Prime(2));
        let err = find_frobenius(&alg, &SearchStrategy::Exhaustive { max_candidates: 1 << 20 }).unwrap_err();
        assert!(matches!(err, Error::NotFound { tried: 8, definitive: true }));
    }

    #[test]
    fn non_frobenius_is_inconclusive_over_q() {
        let alg = square_zero(Q);
        let err = find_frobenius(&alg, &SearchStrategy::Randomized { seed: 0, max_tries: 50 }).unwrap_err();
        assert!(matches!(err, Error::NotFound { definitive: false, .. }));
        assert!(find_frobenius(&alg, &SearchStrategy::Exhaustive { max_candidates: 10 }).is_err());
    }

    #[test]
    fn randomized_search_is_deterministic() {
        let alg = builtin("matrix", Some(2), Q).unwrap();
        let s = SearchStrategy::Randomized { seed: 7, max_tries: 100 };
        let a = find_frobenius(&alg, &s).unwrap();
        let b = find_frobenius(&alg, &s).unwrap();
        assert_eq!(a.counit(), b.counit());
    }
}
