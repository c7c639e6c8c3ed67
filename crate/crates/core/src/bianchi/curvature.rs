use num_traits::Zero;

use crate::exactq::{nullspace_sparse, QMatrix, SolutionSpace, SparseRow, Q};
use crate::repkit::OrthRep;

use super::Verdict;

/// Pairs (a, b), a < b, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    crate::repkit::stabilizer::so_pairs(n)
}

/// Lexicographic index of the pair (a, b), a < b.
pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Basis of R(g). Unknown `R_{α,(a<b)}` sits at index `α·C(n,2) + pair`.
#[derive(Clone, Debug)]
pub struct CurvatureBasis {
    pub rep: OrthRep,
    pub space: SolutionSpace,
}

impl CurvatureBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, r: &[Q]) -> bool {
        self.space.contains(r)
    }
}

/// Generator coordinates of R(e_a ∧ e_b) for any a, b.
pub fn value(rep: &OrthRep, r: &[Q], a: usize, b: usize) -> Vec<Q> {
    let n = rep.n();
    let m = n * n.saturating_sub(1) / 2;
    let nn = rep.dim();
    if a == b {
        return vec![Q::zero(); nn];
    }
    let (lo, hi, neg) = if a < b { (a, b, false) } else { (b, a, true) };
    let p = pair_index(n, lo, hi);
    (0..nn)
        .map(|al| {
            if neg {
                -r[al * m + p].clone()
            } else {
                r[al * m + p].clone()
            }
        })
        .collect()
}

/// Component rows of R(u∧v)w + R(v∧w)u + R(w∧u)v = 0 over triples i<j<k.
pub fn build_curvature_rows(g: &OrthRep) -> Vec<SparseRow> {
    let n = g.n();
    let m = n * n.saturating_sub(1) / 2;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (pij, pjk, pik) = (pair_index(n, i, j), pair_index(n, j, k), pair_index(n, i, k));
                for r in 0..n {
                    let mut row: SparseRow = Vec::new();
                    for (al, c) in g.generators().iter().enumerate() {
                        let mut terms = [
                            (al * m + pij, c[(r, k)].clone()),
                            (al * m + pjk, c[(r, i)].clone()),
                            (al * m + pik, -c[(r, j)].clone()),
                        ];
                        terms.sort_by_key(|t| t.0);
                        for (idx, v) in terms {
                            if !v.is_zero() {
                                row.push((idx, v));
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows
}

pub fn build_curvature_matrix(g: &OrthRep) -> QMatrix {
    let n = g.n();
    let rows = build_curvature_rows(g);
    let mut m = QMatrix::zeros(rows.len(), g.dim() * n * n.saturating_sub(1) / 2);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            m[(r, *c)] = v.clone();
        }
    }
    m
}

pub fn curvature_space(g: &OrthRep) -> CurvatureBasis {
    let n = g.n();
    let mut rows = build_curvature_rows(g);
    let eqs = rows.len();
    rows.retain(|r| !r.is_empty());
    let space = nullspace_sparse(g.dim() * n * n.saturating_sub(1) / 2, eqs, rows);
    CurvatureBasis { rep: g.clone(), space }
}

fn operator(g: &OrthRep, r: &[Q], a: usize, b: usize) -> QMatrix {
    g.element(&value(g, r, a, b))
}

/// First Bianchi identity on every ordered triple of basis vectors.
pub fn curvature_residual_zero(g: &OrthRep, r: &[Q]) -> bool {
    let n = g.n();
    let ops: Vec<Vec<QMatrix>> = (0..n).map(|a| (0..n).map(|b| operator(g, r, a, b)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for row in 0..n {
                    let s = &ops[i][j][(row, k)] + &ops[j][k][(row, i)] + &ops[k][i][(row, j)];
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// η(R(u∧v)z, w) = η(R(z∧w)u, v) on every basis 4-tuple.
pub fn pair_symmetry_holds(g: &OrthRep, r: &[Q]) -> bool {
    let n = g.n();
    // Entry (z, w) of -(G·R(u∧v)) is η(R(u∧v)z, w).
    let ops: Vec<Vec<QMatrix>> = (0..n)
        .map(|a| (0..n).map(|b| g.gram().mul(&operator(g, r, a, b))).collect())
        .collect();
    for u in 0..n {
        for v in 0..n {
            for z in 0..n {
                for w in 0..n {
                    if ops[u][v][(w, z)] != ops[z][w][(v, u)] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// L(R(g)) in generator coordinates.
pub fn l_of_r(b: &CurvatureBasis) -> SolutionSpace {
    let n = b.rep.n();
    let pr = pairs(n);
    let vecs: Vec<Vec<Q>> = b
        .space
        .basis
        .iter()
        .flat_map(|r| pr.iter().map(move |&(x, y)| value(&b.rep, r, x, y)))
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    SolutionSpace::span(b.rep.dim(), &vecs)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BergerReport {
    pub dim_g: usize,
    pub dim_r: usize,
    pub dim_lr: usize,
    pub verdict: Verdict,
}

pub fn berger_check(g: &OrthRep) -> (BergerReport, CurvatureBasis, SolutionSpace) {
    let b = curvature_space(g);
    let lr = l_of_r(&b);
    let verdict = if g.dim() == 0 {
        Verdict::Vacuous
    } else {
        Verdict::from_bool(lr.dim() == g.dim())
    };
    (
        BergerReport {
            dim_g: g.dim(),
            dim_r: b.dim(),
            dim_lr: lr.dim(),
            verdict,
        },
        b,
        lr,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_lexicographic() {
        for n in 2..7 {
            for (k, (a, b)) in pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, a, b), k);
            }
        }
    }
}
