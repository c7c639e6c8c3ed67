use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::json;

use crate::error::RepError;
use crate::exactq::{nullspace_sparse, q, QMatrix, SparseRow, Q};

use super::rep::OrthRep;

/// Exact tensor with declared variance, acted on by so(n) through derivations.
#[derive(Clone, Debug, PartialEq)]
pub enum Tensor {
    /// (1,1)-tensor; A annihilates it iff [A, J] = 0.
    Endomorphism(QMatrix),
    /// Alternating k-form stored on strictly increasing index tuples.
    Form {
        degree: usize,
        coeffs: BTreeMap<Vec<usize>, Q>,
    },
}

impl Tensor {
    /// Builds a k-form from arbitrary index tuples, antisymmetrizing signs.
    pub fn form(degree: usize, terms: &[(Vec<usize>, Q)]) -> Tensor {
        let mut coeffs: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        for (idx, c) in terms {
            assert_eq!(idx.len(), degree);
            if let Some((sorted, sign)) = sort_with_sign(idx) {
                let e = coeffs.entry(sorted).or_insert_with(Q::zero);
                *e += if sign { c.clone() } else { -c.clone() };
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Tensor::Form { degree, coeffs }
    }
}

/// Sorts a tuple, returning (sorted, even?) or None on a repeated index.
fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut even = true;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                even = !even;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, even))
}

fn form_eval(coeffs: &BTreeMap<Vec<usize>, Q>, idx: &[usize]) -> Q {
    match sort_with_sign(idx) {
        None => Q::zero(),
        Some((s, even)) => match coeffs.get(&s) {
            None => Q::zero(),
            Some(c) if even => c.clone(),
            Some(c) => -c.clone(),
        },
    }
}

fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Pairs (a, b), a < b, in lexicographic order; the so(n) basis index.
pub fn so_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            v.push((a, b));
        }
    }
    v
}

pub fn elementary_skew(n: usize, a: usize, b: usize) -> QMatrix {
    QMatrix::unit(n, a, b).sub(&QMatrix::unit(n, b, a))
}

/// {A ∈ so(n) : A·T = 0 for every listed tensor}, with the canonical
/// nullspace basis as generators.
pub fn stabilizer_subalgebra(n: usize, tensors: &[Tensor]) -> Result<OrthRep, RepError> {
    let pairs = so_pairs(n);
    let mut rows: Vec<SparseRow> = Vec::new();
    for t in tensors {
        match t {
            Tensor::Endomorphism(j) => {
                if j.rows() != n || j.cols() != n {
                    return Err(RepError::InvalidInput("endomorphism has the wrong shape".into()));
                }
                let cols: Vec<Vec<Q>> = pairs
                    .iter()
                    .map(|&(a, b)| elementary_skew(n, a, b).bracket(j).flatten())
                    .collect();
                for r in 0..n * n {
                    let row: SparseRow = cols
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c[r].is_zero())
                        .map(|(al, c)| (al, c[r].clone()))
                        .collect();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
            Tensor::Form { degree, coeffs } => {
                if coeffs.keys().flatten().any(|&i| i >= n) {
                    return Err(RepError::InvalidInput("form index out of range".into()));
                }
                for idx in increasing_tuples(n, *degree) {
                    let mut row: SparseRow = Vec::new();
                    for (al, &(a, b)) in pairs.iter().enumerate() {
                        // E e_b = e_a, E e_a = -e_b
                        let mut c = Q::zero();
                        for t in 0..idx.len() {
                            if idx[t] == b {
                                let mut s = idx.clone();
                                s[t] = a;
                                c -= form_eval(coeffs, &s);
                            } else if idx[t] == a {
                                let mut s = idx.clone();
                                s[t] = b;
                                c += form_eval(coeffs, &s);
                            }
                        }
                        if !c.is_zero() {
                            row.push((al, c));
                        }
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let eqs = rows.len();
    let space = nullspace_sparse(pairs.len(), eqs, rows);
    let basis: Vec<QMatrix> = pairs.iter().map(|&(a, b)| elementary_skew(n, a, b)).collect();
    let gens = space
        .basis
        .iter()
        .map(|x| {
            let mut m = QMatrix::zeros(n, n);
            for (c, e) in x.iter().zip(&basis) {
                if !c.is_zero() {
                    m = m.add(&e.scale(c));
                }
            }
            m
        })
        .collect();
    OrthRep::new(
        format!("stab_{n}"),
        QMatrix::identity(n),
        gens,
        json!({ "builder": "stabilizer", "n": n, "tensors": tensors.len() }),
    )
}

/// Complex structure `[[0,-I],[I,0]]` on ℝ^{2m} in (x, y) layout.
pub fn complex_structure(m: usize) -> QMatrix {
    let mut j = QMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        j[(i, m + i)] = q(-1);
        j[(m + i, i)] = q(1);
    }
    j
}

/// Real part of `(dx_1 + i dy_1) ∧ … ∧ (dx_m + i dy_m)`.
pub fn complex_volume_re(m: usize) -> Tensor {
    let mut terms = Vec::new();
    for mask in 0u32..(1 << m) {
        let ny = mask.count_ones();
        if ny % 2 != 0 {
            continue;
        }
        let idx: Vec<usize> = (0..m).map(|j| if mask >> j & 1 == 1 { m + j } else { j }).collect();
        let sign = if (ny / 2) % 2 == 0 { q(1) } else { q(-1) };
        terms.push((idx, sign));
    }
    Tensor::form(m, &terms)
}

/// Quaternionic structure on ℝ^{4m} = ℂ^{2m}: the real matrix of
/// `z ↦ M·conj(z)` with M pairing coordinates (2a, 2a+1).
pub fn quaternionic_structure(m: usize) -> QMatrix {
    let d = 2 * m;
    let mut mm = QMatrix::zeros(d, d);
    for a in 0..m {
        mm[(2 * a, 2 * a + 1)] = q(-1);
        mm[(2 * a + 1, 2 * a)] = q(1);
    }
    let mut j = QMatrix::zeros(2 * d, 2 * d);
    j.set_block(0, 0, &mm);
    j.set_block(d, d, &mm.neg());
    j
}

/// The associative 3-form on ℝ⁷ (zero-based indices).
pub fn g2_form() -> Tensor {
    let t = |a: usize, b: usize, c: usize, s: i64| (vec![a - 1, b - 1, c - 1], q(s));
    Tensor::form(
        3,
        &[
            t(1, 2, 3, 1),
            t(1, 4, 5, 1),
            t(1, 6, 7, 1),
            t(2, 4, 6, 1),
            t(2, 5, 7, -1),
            t(3, 4, 7, -1),
            t(3, 5, 6, -1),
        ],
    )
}

pub fn unitary(m: usize) -> Result<OrthRep, RepError> {
    stabilizer_subalgebra(2 * m, &[Tensor::Endomorphism(complex_structure(m))])
}

pub fn special_unitary(m: usize) -> Result<OrthRep, RepError> {
    stabilizer_subalgebra(
        2 * m,
        &[Tensor::Endomorphism(complex_structure(m)), complex_volume_re(m)],
    )
}

pub fn symplectic(m: usize) -> Result<OrthRep, RepError> {
    stabilizer_subalgebra(
        4 * m,
        &[
            Tensor::Endomorphism(complex_structure(2 * m)),
            Tensor::Endomorphism(quaternionic_structure(m)),
        ],
    )
}

pub fn g2() -> Result<OrthRep, RepError> {
    stabilizer_subalgebra(7, &[g2_form()])
}
