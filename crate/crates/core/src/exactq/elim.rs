//! Row reduction and nullspaces.
//!
//! The reduced row-echelon form of a matrix is unique, so the dense and
//! sparse paths below return bit-identical results; the pivot rule only
//! changes how much work is done on the way.

use num_traits::{One, Zero};

use super::matrix::{Matrix, QMatrix};
use super::scalar::{Scalar, Q};
use crate::error::ExactError;

/// Result of a row reduction.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F> Rref<F> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Dense Gauss-Jordan: columns left to right, first nonzero row at or
/// below the current pivot row, pivots normalized to one.
pub fn rref<F: Scalar>(m: &Matrix<F>) -> Result<Rref<F>, ExactError> {
    if !m.homogeneous() {
        return Err(ExactError::InvalidScalar);
    }
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].vanishes()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].inv();
        for j in c..cols {
            let v = a[(r, j)].mul(&inv);
            a[(r, j)] = v;
        }
        let pivot_row: Vec<F> = a.row(r).to_vec();
        for i in 0..rows {
            if i == r || a[(i, c)].vanishes() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if !pivot_row[j].vanishes() {
                    let v = a[(i, j)].sub(&f.mul(&pivot_row[j]));
                    a[(i, j)] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(Rref { matrix: a, pivots })
}

pub type SparseRow = Vec<(usize, Q)>;

/// `a - f * b` on sorted sparse rows.
fn axpy(a: &[(usize, Q)], f: &Q, b: &[(usize, Q)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    let inv = row[0].1.recip();
    if inv.is_one() {
        return;
    }
    for e in row.iter_mut() {
        e.1 = &e.1 * &inv;
    }
}

/// Sparse reduced row-echelon form over ℚ. Returns the nonzero RREF rows
/// (sparse, sorted) and their pivot columns.
pub fn rref_sparse(rows: Vec<SparseRow>) -> (Vec<SparseRow>, Vec<usize>) {
    use std::collections::BTreeMap;
    let mut buckets: BTreeMap<usize, Vec<SparseRow>> = BTreeMap::new();
    for mut r in rows {
        r.retain(|(_, v)| !v.is_zero());
        if r.is_empty() {
            continue;
        }
        r.sort_by_key(|e| e.0);
        buckets.entry(r[0].0).or_default().push(r);
    }
    let mut echelon: Vec<SparseRow> = Vec::new();
    while let Some((col, mut group)) = buckets.pop_first() {
        // Shortest row as pivot keeps fill-in low.
        let k = (0..group.len()).min_by_key(|&i| group[i].len()).unwrap();
        let mut pivot = group.swap_remove(k);
        normalize(&mut pivot);
        for r in group {
            let f = r[0].1.clone();
            let reduced = axpy(&r, &f, &pivot);
            if let Some(first) = reduced.first() {
                buckets.entry(first.0).or_default().push(reduced);
            }
        }
        debug_assert_eq!(pivot[0].0, col);
        echelon.push(pivot);
    }
    // Back substitution, bottom up.
    for k in (0..echelon.len()).rev() {
        let pc = echelon[k][0].0;
        let (upper, lower) = echelon.split_at_mut(k);
        let pivot = &lower[0];
        for row in upper.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pc, |e| e.0) {
                let f = row[pos].1.clone();
                *row = axpy(row, &f, pivot);
            }
        }
    }
    let pivots = echelon.iter().map(|r| r[0].0).collect();
    (echelon, pivots)
}

/// Sparse rows of a dense rational matrix.
pub fn to_sparse(m: &QMatrix) -> Vec<SparseRow> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
        .collect()
}

/// Dense RREF assembled from the sparse path (zero rows at the bottom).
pub fn rref_via_sparse(m: &QMatrix) -> Rref<Q> {
    let (rows, pivots) = rref_sparse(to_sparse(m));
    let mut out = QMatrix::zeros(m.rows(), m.cols());
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r {
            out[(i, *j)] = v.clone();
        }
    }
    Rref { matrix: out, pivots }
}

/// Basis of a nullspace together with the bookkeeping of the system that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<Q>>,
    pub pivot_columns: Vec<usize>,
    pub equations: usize,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SolutionSpace {
            ambient_dim,
            basis: Vec::new(),
            pivot_columns: Vec::new(),
            equations: 0,
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, &unit_vectors(ambient_dim))
    }

    /// Canonical span: the nonzero rows of the RREF of the stacked vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Q>]) -> Self {
        let rows: Vec<SparseRow> = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient_dim, "vector length differs from ambient");
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        let (rows, pivots) = rref_sparse(rows);
        let basis = rows.iter().map(|r| densify(ambient_dim, r)).collect();
        SolutionSpace {
            ambient_dim,
            basis,
            pivot_columns: pivots,
            equations: 0,
        }
    }

    pub fn reducer(&self) -> Reducer {
        Reducer::new(self.ambient_dim, &self.basis)
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reducer().contains(v)
    }

    pub fn basis_matrix(&self) -> QMatrix {
        QMatrix::from_columns(self.ambient_dim, &self.basis)
    }
}

pub fn unit_vectors(n: usize) -> Vec<Vec<Q>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Q::zero(); n];
            v[i] = Q::one();
            v
        })
        .collect()
}

pub fn densify(n: usize, row: &[(usize, Q)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for (j, x) in row {
        v[*j] = x.clone();
    }
    v
}

/// Canonical nullspace basis from sparse RREF rows: free variables in
/// increasing column order, each set to one in turn.
fn nullspace_from_rref(cols: usize, rows: &[SparseRow], pivots: &[usize], equations: usize) -> SolutionSpace {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&j| !is_pivot[j]).collect();
    let mut slot = vec![usize::MAX; cols];
    for (k, &f) in free.iter().enumerate() {
        slot[f] = k;
    }
    let mut basis: Vec<Vec<Q>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            v
        })
        .collect();
    for (r, &p) in rows.iter().zip(pivots) {
        for (j, x) in r.iter().skip(1) {
            let k = slot[*j];
            debug_assert!(k != usize::MAX);
            basis[k][p] = -x.clone();
        }
    }
    SolutionSpace {
        ambient_dim: cols,
        basis,
        pivot_columns: pivots.to_vec(),
        equations,
    }
}

/// Nullspace of a dense rational matrix.
pub fn nullspace(m: &QMatrix) -> SolutionSpace {
    nullspace_sparse(m.cols(), m.rows(), to_sparse(m))
}

/// Nullspace of a dense rational matrix computed with the dense RREF.
pub fn nullspace_dense(m: &QMatrix) -> SolutionSpace {
    let r = rref(m).expect("rational matrices are homogeneous");
    let rows: Vec<SparseRow> = (0..r.rank())
        .map(|i| {
            r.matrix
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
        .collect();
    nullspace_from_rref(m.cols(), &rows, &r.pivots, m.rows())
}

/// Nullspace of a sparse system with `cols` unknowns.
pub fn nullspace_sparse(cols: usize, equations: usize, rows: Vec<SparseRow>) -> SolutionSpace {
    let (rows, pivots) = rref_sparse(rows);
    nullspace_from_rref(cols, &rows, &pivots, equations)
}

/// Reduces vectors against an RREF basis; membership and coordinates.
#[derive(Clone, Debug)]
pub struct Reducer {
    n: usize,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
}

impl Reducer {
    pub fn new(n: usize, vectors: &[Vec<Q>]) -> Self {
        let rows = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect()
            })
            .collect();
        let (rows, pivots) = rref_sparse(rows);
        Reducer { n, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Residual of `v` after removing its component along the span.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in r {
                v[*j] -= &f * x;
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns false if it was already inside.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let r = self.reduce(v);
        if r.iter().all(Zero::is_zero) {
            return false;
        }
        let mut rows = std::mem::take(&mut self.rows);
        rows.push(
            r.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| (j, x.clone()))
                .collect(),
        );
        let (rows, pivots) = rref_sparse(rows);
        self.rows = rows;
        self.pivots = pivots;
        true
    }

    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|r| densify(self.n, r)).collect()
    }
}

/// Coordinates of vectors with respect to a fixed linearly independent list.
#[derive(Clone, Debug)]
pub struct Coordinates {
    n: usize,
    k: usize,
    /// RREF rows of `[B | I]`, split into the B part and the transform part.
    rows: Vec<(SparseRow, Vec<Q>)>,
    pivots: Vec<usize>,
}

impl Coordinates {
    pub fn new(n: usize, vectors: &[Vec<Q>]) -> Result<Self, ExactError> {
        let k = vectors.len();
        let aug: Vec<SparseRow> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                assert_eq!(v.len(), n);
                let mut r: SparseRow = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, x.clone()))
                    .collect();
                r.push((n + i, Q::one()));
                r
            })
            .collect();
        let (rows, pivots) = rref_sparse(aug);
        if pivots.iter().any(|&p| p >= n) || rows.len() != k {
            return Err(ExactError::NotInSpan);
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                let (b, t): (SparseRow, SparseRow) = r.into_iter().partition(|(j, _)| *j < n);
                let mut tv = vec![Q::zero(); k];
                for (j, x) in t {
                    tv[j - n] = x;
                }
                (b, tv)
            })
            .collect();
        Ok(Coordinates { n, k, rows, pivots })
    }

    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    /// Solve `Σ x_α b_α = v`; errors if `v` is outside the span.
    pub fn coords(&self, v: &[Q]) -> Result<Vec<Q>, ExactError> {
        assert_eq!(v.len(), self.n);
        let mut res = v.to_vec();
        let mut x = vec![Q::zero(); self.k];
        for ((b, t), &p) in self.rows.iter().zip(&self.pivots) {
            let c = res[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, y) in b {
                res[*j] -= &c * y;
            }
            for (xa, ta) in x.iter_mut().zip(t) {
                if !ta.is_zero() {
                    *xa += &c * ta;
                }
            }
        }
        if res.iter().any(|r| !r.is_zero()) {
            return Err(ExactError::NotInSpan);
        }
        Ok(x)
    }
}

/// Rank of a dense rational matrix.
pub fn rank(m: &QMatrix) -> usize {
    rref_sparse(to_sparse(m)).1.len()
}

/// Exact inverse of a square rational matrix.
pub fn inverse(m: &QMatrix) -> Result<QMatrix, ExactError> {
    assert!(m.is_square());
    let n = m.rows();
    let cols: Vec<Vec<Q>> = (0..n).map(|j| m.column(j)).collect();
    let c = Coordinates::new(n, &cols).map_err(|_| ExactError::DivisionByZero)?;
    let mut out = QMatrix::zeros(n, n);
    for (j, e) in unit_vectors(n).iter().enumerate() {
        let x = c.coords(e).map_err(|_| ExactError::DivisionByZero)?;
        for (i, v) in x.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::scalar::{q, qf};

    #[test]
    fn rref_identity_and_zero() {
        let i = QMatrix::identity(2);
        let r = rref(&i).unwrap();
        assert_eq!(r.matrix, i);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank(), 2);

        let z = QMatrix::zeros(3, 4);
        let r = rref(&z).unwrap();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let r = rref(&m).unwrap();
        assert_eq!(r.matrix, QMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank(), 1);
        assert_eq!(rref_via_sparse(&m), r);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&QMatrix::identity(3)).dim(), 0);
        let z = nullspace(&QMatrix::zeros(2, 5));
        assert_eq!(z.basis, unit_vectors(5));
        let m = QMatrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = nullspace(&m);
        assert_eq!(ns.basis, vec![vec![q(-1), q(1), q(0)]]);
        assert_eq!(ns, nullspace_dense(&m));
    }

    #[test]
    fn coordinates_solve() {
        let b = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let c = Coordinates::new(3, &b).unwrap();
        assert_eq!(c.coords(&[q(2), q(5), q(3)]).unwrap(), vec![q(2), q(3)]);
        assert!(c.coords(&[q(1), q(0), q(0)]).is_err());
        let dep = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(Coordinates::new(2, &dep).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), QMatrix::identity(2));
        assert_eq!(inv[(0, 0)], q(4));
        let s = QMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(inverse(&s).is_err());
        let h = QMatrix::diagonal(&[qf(1, 2), q(3)]);
        assert_eq!(inverse(&h).unwrap(), QMatrix::diagonal(&[q(2), qf(1, 3)]));
    }
}
