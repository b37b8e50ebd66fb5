//! Gauss–Jordan elimination kernel.
//!
//! Matrices are unpacked into typed row buffers (`u64` residues for GF(p),
//! [`Rational`] for ℚ) so the hot loop avoids the field dispatch of
//! [`Scalar`]. Row updates for one pivot are independent and are spread
//! over the rayon pool when the work is large enough.

use crate::field::{mod_inv, Field, Rational, Scalar};
use crate::par::{self, Execution};

use super::Matrix;

/// Below this many scalar updates per pivot the rows are processed inline.
const PARALLEL_THRESHOLD: usize = 1 << 13;

pub(crate) trait Arith: Sync {
    type E: Clone + Send + Sync;

    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    /// `a -= f * b`
    fn sub_mul(&self, a: &mut Self::E, f: &Self::E, b: &Self::E);
}

pub(crate) struct ModP(pub u64);

impl Arith for ModP {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        mod_inv(*a, self.0)
    }
    fn sub_mul(&self, a: &mut u64, f: &u64, b: &u64) {
        let prod = f * b % self.0;
        *a = (*a + self.0 - prod) % self.0;
    }
}

pub(crate) struct Rat;

impl Arith for Rat {
    type E = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip().expect("pivot is nonzero")
    }
    fn sub_mul(&self, a: &mut Rational, f: &Rational, b: &Rational) {
        *a = &*a - &(f * b);
    }
}

/// Row-reduces `rows` in place and returns the pivot columns.
///
/// Zero rows are dropped. With `reduce_above` the result is the reduced
/// row-echelon form; otherwise only entries below each pivot are cleared,
/// which is all a rank computation needs.
pub(crate) fn eliminate<A: Arith>(
    ar: &A,
    rows: &mut Vec<Vec<A::E>>,
    ncols: usize,
    reduce_above: bool,
    exec: Execution,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !ar.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, found);

        let inv = ar.inv(&rows[r][col]);
        let mut pivot = Vec::new();
        {
            let prow = &mut rows[r];
            for (c, entry) in prow.iter_mut().enumerate().skip(col + 1) {
                if !ar.is_zero(entry) {
                    *entry = ar.mul(&inv, entry);
                    pivot.push((c, entry.clone()));
                }
            }
            prow[col] = ar.mul(&inv, &prow[col]);
        }

        let (head, rest) = rows.split_at_mut(r);
        let tail = &mut rest[1..];
        let span = if reduce_above { head.len() + tail.len() } else { tail.len() };
        let mode = if span * (pivot.len() + 1) < PARALLEL_THRESHOLD {
            Execution::Sequential
        } else {
            exec
        };
        let update = |row: &mut Vec<A::E>| {
            if ar.is_zero(&row[col]) {
                return;
            }
            let f = std::mem::replace(&mut row[col], ar.zero());
            for (c, v) in &pivot {
                ar.sub_mul(&mut row[*c], &f, v);
            }
        };
        par::for_each_mut(mode, tail, update);
        if reduce_above {
            par::for_each_mut(mode, head, update);
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) enum Rows {
    Q(Vec<Vec<Rational>>),
    P(u64, Vec<Vec<u64>>),
}

impl Rows {
    pub(crate) fn from_matrix(m: &Matrix) -> Self {
        let rows = m.rows();
        let cols = m.cols();
        match m.field() {
            Field::Rational => Rows::Q(
                (0..rows)
                    .map(|i| {
                        (0..cols)
                            .map(|j| m[(i, j)].as_rational().expect("rational entry").clone())
                            .collect()
                    })
                    .collect(),
            ),
            Field::Prime(p) => Rows::P(
                p as u64,
                (0..rows)
                    .map(|i| {
                        (0..cols)
                            .map(|j| match m[(i, j)] {
                                Scalar::Fp { value, .. } => value as u64,
                                Scalar::Q(_) => unreachable!("field invariant"),
                            })
                            .collect()
                    })
                    .collect(),
            ),
        }
    }

    pub(crate) fn eliminate(&mut self, ncols: usize, reduce_above: bool, exec: Execution) -> Vec<usize> {
        match self {
            Rows::Q(rows) => eliminate(&Rat, rows, ncols, reduce_above, exec),
            Rows::P(p, rows) => eliminate(&ModP(*p), rows, ncols, reduce_above, exec),
        }
    }

    pub(crate) fn into_matrix(self, field: Field, ncols: usize) -> Matrix {
        match self {
            Rows::Q(rows) => {
                let n = rows.len();
                let data = rows.into_iter().flatten().map(Scalar::Q).collect();
                Matrix::from_parts(field, n, ncols, data)
            }
            Rows::P(p, rows) => {
                let n = rows.len();
                let data = rows
                    .into_iter()
                    .flatten()
                    .map(|v| Scalar::Fp {
                        value: v as u32,
                        modulus: p as u32,
                    })
                    .collect();
                Matrix::from_parts(field, n, ncols, data)
            }
        }
    }
}
