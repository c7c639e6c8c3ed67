use num_traits::Zero;

use crate::exactq::{nullspace_sparse, QMatrix, SolutionSpace, SparseRow, Q};
use crate::repkit::OrthRep;

use super::Verdict;

/// Basis of P(h). Unknown `P_{αi}` sits at index `α·n + i`.
#[derive(Clone, Debug)]
pub struct WeakCurvatureBasis {
    pub rep: OrthRep,
    pub space: SolutionSpace,
}

impl WeakCurvatureBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Generator coordinates of P(e_i).
    pub fn value(&self, p: &[Q], i: usize) -> Vec<Q> {
        let n = self.rep.n();
        (0..self.rep.dim()).map(|a| p[a * n + i].clone()).collect()
    }

    pub fn contains(&self, p: &[Q]) -> bool {
        self.space.contains(p)
    }
}

fn twisted(h: &OrthRep) -> Vec<QMatrix> {
    h.generators().iter().map(|c| h.gram().mul(c)).collect()
}

/// One row per triple i<j<k with coefficient (G·C^α)_{jk} on `P_{αi}`, cyclically.
pub fn build_weak_bianchi_rows(h: &OrthRep) -> Vec<SparseRow> {
    let n = h.n();
    let gc = twisted(h);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row: SparseRow = Vec::new();
                for (a, m) in gc.iter().enumerate() {
                    for (idx, c) in [(i, &m[(j, k)]), (j, &m[(k, i)]), (k, &m[(i, j)])] {
                        if !c.is_zero() {
                            row.push((a * n + idx, c.clone()));
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    rows
}

pub fn build_weak_bianchi_matrix(h: &OrthRep) -> QMatrix {
    let n = h.n();
    let rows = build_weak_bianchi_rows(h);
    let mut m = QMatrix::zeros(rows.len(), n * h.dim());
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            m[(r, *c)] = v.clone();
        }
    }
    m
}

pub fn weak_curvature_space(h: &OrthRep) -> WeakCurvatureBasis {
    let mut rows = build_weak_bianchi_rows(h);
    let eqs = rows.len();
    rows.retain(|r| !r.is_empty());
    let space = nullspace_sparse(h.n() * h.dim(), eqs, rows);
    WeakCurvatureBasis { rep: h.clone(), space }
}

/// Checks the cyclic identity on every ordered triple of basis vectors.
pub fn weak_residual_zero(h: &OrthRep, p: &[Q]) -> bool {
    let n = h.n();
    let vals: Vec<QMatrix> = (0..n)
        .map(|i| {
            let x: Vec<Q> = (0..h.dim()).map(|a| p[a * n + i].clone()).collect();
            h.gram().mul(&h.element(&x))
        })
        .collect();
    // η(P(e_i)e_j, e_k) = -(G·P(e_i))_{jk}
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = &vals[i][(j, k)] + &vals[j][(k, i)] + &vals[k][(i, j)];
                if !s.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// L(P(h)) in generator coordinates.
pub fn l_of_p(b: &WeakCurvatureBasis) -> SolutionSpace {
    let n = b.rep.n();
    let vecs: Vec<Vec<Q>> = b
        .space
        .basis
        .iter()
        .flat_map(|p| (0..n).map(move |i| b.value(p, i)))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    SolutionSpace::span(b.rep.dim(), &vecs)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WeakBergerReport {
    pub dim_h: usize,
    pub dim_p: usize,
    pub dim_lp: usize,
    pub verdict: Verdict,
}

pub fn weak_berger_check(h: &OrthRep) -> (WeakBergerReport, WeakCurvatureBasis, SolutionSpace) {
    let b = weak_curvature_space(h);
    let lp = l_of_p(&b);
    let verdict = if h.dim() == 0 {
        Verdict::Vacuous
    } else {
        Verdict::from_bool(lp.dim() == h.dim())
    };
    let report = WeakBergerReport {
        dim_h: h.dim(),
        dim_p: b.dim(),
        dim_lp: lp.dim(),
        verdict,
    };
    (report, b, lp)
}
