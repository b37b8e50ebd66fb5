use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::par::Execution;

use super::{kernel, rref_with, Matrix};

/// A linear subspace of `field^ambient`, stored as its reduced row-echelon basis.
///
/// The basis is the unique canonical representative of the span, so two
/// subspaces are equal exactly when their stored bases are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_spanning_rows(m: &Matrix) -> Self {
        Self::from_spanning_rows_with(m, Execution::default())
    }

    pub fn from_spanning_rows_with(m: &Matrix, exec: Execution) -> Self {
        let (basis, pivots) = rref_with(m, exec);
        Subspace { basis, pivots }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        Ok(Self::from_spanning_rows(&Matrix::from_rows(field, ambient, vectors)?))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as rows, in reduced row-echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::dims("subspace", self.ambient_dim(), v.len()));
        }
        if let Some(s) = v.iter().find(|s| s.field() != self.field()) {
            return Err(Error::fields(self.field(), s.field()));
        }
        Ok(())
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::fields(self.field(), other.field()));
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::dims("subspace", self.ambient_dim(), other.ambient_dim()));
        }
        Ok(())
    }

    /// `v` minus its projection along the pivot coordinates; zero iff `v` lies in the span.
    pub fn residual(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_vector(v)?;
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (o, b) in r.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *o = &*o - &(&f * b);
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.residual(v)?.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    ///
    /// In reduced row-echelon form these are just the pivot entries of `v`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn equal(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        Ok(self == other)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_same(other)?;
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(Subspace::from_spanning_rows(&self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let field = self.field();
        let k1 = self.dim();
        // Solve Σ α_i u_i - Σ β_j w_j = 0, keep Σ α_i u_i.
        let stacked = self.basis.transpose().hstack(&other.basis.transpose().scale(&-field.one()))?;
        let null = kernel(&stacked);
        let alphas: Vec<usize> = (0..k1).collect();
        let coeffs = null.basis().select_cols(&alphas);
        Ok(Subspace::from_spanning_rows(&coeffs.mul(&self.basis)?))
    }

    /// The subspace spanned by `m·b` for the basis vectors `b`.
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim() {
            return Err(Error::dims("map", self.ambient_dim(), m.cols()));
        }
        let images = m.mul(&self.basis.transpose())?;
        Ok(Subspace::from_spanning_rows(&images.transpose()))
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant(&self, m: &Matrix) -> Result<bool> {
        let images = m.mul(&self.basis.transpose())?;
        for j in 0..images.cols() {
            if !self.contains(&images.col(j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix of `m` restricted to this subspace (which must be invariant),
    /// in the stored basis: column `j` holds the coordinates of `m·b_j`.
    pub fn restrict(&self, m: &Matrix) -> Result<Matrix> {
        self.restrict_to(m, self)
    }

    /// Matrix of `m` viewed as a map from this subspace into `target`.
    pub fn restrict_to(&self, m: &Matrix, target: &Subspace) -> Result<Matrix> {
        let images = m.mul(&self.basis.transpose())?;
        let mut cols = Vec::with_capacity(self.dim());
        for j in 0..images.cols() {
            let img = images.col(j);
            let c = target.coordinates(&img)?.ok_or_else(|| {
                Error::VerificationFailed("map does not land in the target subspace".into())
            })?;
            cols.push(c);
        }
        Ok(Matrix::from_rows(self.field(), target.dim(), &cols)?.transpose())
    }
}

/// Incrementally grown span, used for closure computations.
///
/// Each inserted vector is reduced against the earlier ones in insertion
/// order, so row `k` vanishes at the pivots of rows `0..k` and a single
/// forward sweep decides membership.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: Field, ambient: usize) -> Self {
        SpanBuilder {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (o, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *o = &*o - &(&f * b);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn finish(&self) -> Subspace {
        let m = Matrix::from_rows(self.field, self.ambient, &self.rows).expect("consistent rows");
        Subspace::from_spanning_rows(&m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector;

    const Q: Field = Field::Rational;

    fn span(vs: &[&[i64]]) -> Subspace {
        let rows: Vec<_> = vs.iter().map(|v| vector::from_ints(Q, v)).collect();
        Subspace::span(Q, vs[0].len(), &rows).unwrap()
    }

    #[test]
    fn equality_is_canonical() {
        assert_eq!(span(&[&[1, 0], &[0, 1]]), span(&[&[1, 1], &[1, -1]]));
        assert_eq!(span(&[&[1, 2]]), span(&[&[2, 4]]));
        assert_ne!(span(&[&[1, 2]]), span(&[&[2, 1]]));
    }

    #[test]
    fn zero_subspace_contains_only_zero() {
        let z = Subspace::zero(Q, 3);
        assert!(z.contains(&vector::zeros(Q, 3)).unwrap());
        assert!(!z.contains(&vector::unit(Q, 3, 1)).unwrap());
    }

    #[test]
    fn sum_and_intersection() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(Q, 3));
        assert_eq!(a.intersect(&b).unwrap(), span(&[&[0, 1, 0]]));
        assert_eq!(a.intersect(&Subspace::zero(Q, 3)).unwrap().dim(), 0);
        assert!(a.intersect(&Subspace::zero(Q, 2)).is_err());
    }

    #[test]
    fn coordinates_use_pivots() {
        let s = span(&[&[1, 0, 2], &[0, 1, 3]]);
        let v = vector::from_ints(Q, &[2, -1, 1]);
        assert_eq!(s.coordinates(&v).unwrap(), Some(vector::from_ints(Q, &[2, -1])));
        assert_eq!(s.coordinates(&vector::unit(Q, 3, 2)).unwrap(), None);
    }
}
