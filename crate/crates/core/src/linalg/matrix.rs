use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::par::{self, Execution};

/// Dense row-major matrix over a single [`Field`].
///
/// Vectors are columns: a matrix with `cols` columns maps a coordinate
/// vector of length `cols` to one of length `rows`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub(crate) fn from_parts(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix::from_parts(field, rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "entry from a different field");
                data.push(s);
            }
        }
        Matrix::from_parts(field, rows, cols, data)
    }

    /// Builds a matrix from row vectors, which must share a length and field.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::dims("from_rows", cols, row.len()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::fields(field, s.field()));
                }
                data.push(s.clone());
            }
        }
        Ok(Matrix::from_parts(field, rows.len(), cols, data))
    }

    /// Integer entries, one slice per row.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    /// The `n × 1` matrix holding `v`.
    pub fn column(field: Field, v: &[Scalar]) -> Self {
        Matrix::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::fields(self.field, other.field));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.mul_with(rhs, Execution::default())
    }

    pub fn mul_with(&self, rhs: &Matrix, exec: Execution) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::dims("mul", format!("{} rows", self.cols), rhs.rows));
        }
        let field = self.field;
        let n = rhs.cols;
        let rows_idx: Vec<usize> = (0..self.rows).collect();
        let work = self.rows * self.cols * n;
        let mode = if work < 1 << 15 { Execution::Sequential } else { exec };
        let computed = par::map(mode, &rows_idx, |&i| {
            let mut acc = vec![field.zero(); n];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in rhs.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        acc[j] = &acc[j] + &(a * b);
                    }
                }
            }
            acc
        });
        Ok(Matrix::from_parts(field, self.rows, n, computed.into_iter().flatten().collect()))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::dims("mul_vec", self.cols, v.len()));
        }
        if let Some(s) = v.iter().find(|s| s.field() != self.field) {
            return Err(Error::fields(self.field, s.field()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, rhs: &Matrix, op: &'static str, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.shape() != rhs.shape() {
            return Err(Error::dims(op, format!("{:?}", self.shape()), format!("{:?}", rhs.shape())));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix::from_parts(self.field, self.rows, self.cols, data))
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        assert_eq!(s.field(), self.field, "scalar from a different field");
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix::from_parts(self.field, self.rows, self.cols, data)
    }

    /// `Σ coeffs[k] · mats[k]`; all matrices share `shape`.
    pub fn linear_combination(field: Field, shape: (usize, usize), coeffs: &[Scalar], mats: &[Matrix]) -> Result<Matrix> {
        if coeffs.len() != mats.len() {
            return Err(Error::dims("linear_combination", mats.len(), coeffs.len()));
        }
        let mut out = Matrix::zeros(field, shape.0, shape.1);
        for (c, m) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            if m.shape() != shape {
                return Err(Error::dims("linear_combination", format!("{shape:?}"), format!("{:?}", m.shape())));
            }
            out.same_field(m)?;
            for (o, a) in out.data.iter_mut().zip(&m.data) {
                if !a.is_zero() {
                    *o = &*o + &(c * a);
                }
            }
        }
        Ok(out)
    }

    /// Places `rhs` to the right of `self`.
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.rows != rhs.rows {
            return Err(Error::dims("hstack", self.rows, rhs.rows));
        }
        let cols = self.cols + rhs.cols;
        Ok(Matrix::from_fn(self.field, self.rows, cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Places `rhs` below `self`.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.cols {
            return Err(Error::dims("vstack", self.cols, rhs.cols));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Matrix::from_parts(self.field, self.rows + rhs.rows, self.cols, data))
    }

    /// Stacks several matrices vertically; `cols` fixes the width when the list is empty.
    pub fn vstack_all(field: Field, cols: usize, parts: &[Matrix]) -> Result<Matrix> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.field != field {
                return Err(Error::fields(field, p.field));
            }
            if p.cols != cols {
                return Err(Error::dims("vstack", cols, p.cols));
            }
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Ok(Matrix::from_parts(field, rows, cols, data))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Coordinate-vector helpers.
pub mod vector {
    use crate::field::{Field, Scalar};

    pub fn zeros(field: Field, n: usize) -> Vec<Scalar> {
        vec![field.zero(); n]
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zeros(field, n);
        v[i] = field.one();
        v
    }

    pub fn from_ints(field: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(s: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| s * x).collect()
    }

    /// `acc += s * a`
    pub fn axpy(acc: &mut [Scalar], s: &Scalar, a: &[Scalar]) {
        assert_eq!(acc.len(), a.len());
        if s.is_zero() {
            return;
        }
        for (o, x) in acc.iter_mut().zip(a) {
            if !x.is_zero() {
                *o = &*o + &(s * x);
            }
        }
    }

    pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        assert_eq!(a.len(), b.len());
        let field = a.first().map_or(Field::Rational, Scalar::field);
        a.iter().zip(b).fold(field.zero(), |acc, (x, y)| &acc + &(x * y))
    }
}
