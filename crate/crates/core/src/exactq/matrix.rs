use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::scalar::{fmt_q, parse_q, q, Scalar, Q};
use crate::error::ExactError;

/// Dense row-major matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type QMatrix = Matrix<Q>;

impl<F: Scalar> Matrix<F> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ExactError::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    pub fn filled(rows: usize, cols: usize, value: F) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::vanishes)
    }

    /// True when every entry can share an elimination with every other.
    pub fn homogeneous(&self) -> bool {
        match self.data.first() {
            None => true,
            Some(first) => self.data.iter().all(|x| first.same_kind(x)),
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, Q::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged integer matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = q(x);
            }
        }
        m
    }

    pub fn diagonal(d: &[Q]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    /// Column vector from entries.
    pub fn column_vector(v: &[Q]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// The `e_i ⊗ e_j^T` matrix unit.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Q::one();
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    /// `[A, B] = AB - BA`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&QMatrix]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c);
        let (mut oi, mut oj) = (0, 0);
        for b in blocks {
            out.set_block(oi, oj, b);
            oi += b.rows;
            oj += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, i0: usize, j0: usize, b: &QMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(i0 + i, j0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, i0: usize, j0: usize, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(i0 + i, j0 + j)].clone();
            }
        }
        out
    }

    /// Bilinear form `x^T self y`.
    pub fn form(&self, x: &[Q], y: &[Q]) -> Q {
        let my = self.mul_vec(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(fmt_q).collect())
            .collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self, ExactError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(parsed)
    }

    /// Flattened row-major entries as one vector.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, v: &[Q]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: v.to_vec(),
        }
    }
}

/// Linear combination `Σ c_i M_i` of same-shape matrices.
pub fn combine(coeffs: &[Q], mats: &[QMatrix]) -> QMatrix {
    assert_eq!(coeffs.len(), mats.len());
    assert!(!mats.is_empty(), "combine needs at least one matrix");
    let mut out = QMatrix::zeros(mats[0].rows(), mats[0].cols());
    for (c, m) in coeffs.iter().zip(mats) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.data.iter_mut().zip(&m.data) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_and_blocks() {
        let a = QMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let i = QMatrix::identity(2);
        let k = a.kron(&i);
        assert_eq!(k[(0, 2)], q(2));
        assert_eq!(k[(3, 1)], q(3));
        let d = QMatrix::block_diag(&[&a, &i]);
        assert_eq!(d.rows(), 4);
        assert_eq!(d.block(0, 0, 2, 2), a);
        assert_eq!(d.block(2, 2, 2, 2), i);
    }

    #[test]
    fn bracket_of_so3_units() {
        let e12 = QMatrix::unit(3, 0, 1).sub(&QMatrix::unit(3, 1, 0));
        let e23 = QMatrix::unit(3, 1, 2).sub(&QMatrix::unit(3, 2, 1));
        let e13 = QMatrix::unit(3, 0, 2).sub(&QMatrix::unit(3, 2, 0));
        assert_eq!(e12.bracket(&e23), e13);
        assert!(e12.is_antisymmetric());
    }
}
