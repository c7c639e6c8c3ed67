use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::json;

use crate::error::RepError;
use crate::exactq::{nullspace, nullspace_sparse, q, rank, QMatrix, Reducer, SolutionSpace, SparseRow, Q};

use super::lie::LieAlgebraSpec;
use super::rep::{restrict_matrices, OrthRep};

fn push_row(rows: &mut Vec<SparseRow>, acc: BTreeMap<usize, Q>) {
    let row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    if !row.is_empty() {
        rows.push(row);
    }
}

/// Rows of `X·A − B·X = 0` for an unknown `X` of shape rb × ca, row-major.
fn intertwining_rows(a: &QMatrix, b: &QMatrix, rows: &mut Vec<SparseRow>) {
    let (nb, na) = (b.rows(), a.rows());
    for i in 0..nb {
        for j in 0..na {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for k in 0..na {
                let c = &a[(k, j)];
                if !c.is_zero() {
                    *acc.entry(i * na + k).or_insert_with(Q::zero) += c;
                }
            }
            for k in 0..nb {
                let c = &b[(i, k)];
                if !c.is_zero() {
                    *acc.entry(k * na + j).or_insert_with(Q::zero) -= c;
                }
            }
            push_row(rows, acc);
        }
    }
}

/// Rows of `G·X ± (G·X)ᵀ = 0`; `sign = -1` asks for symmetric G·X.
fn gram_twisted_rows(g: &QMatrix, sign: i64, rows: &mut Vec<SparseRow>) {
    let n = g.rows();
    for i in 0..n {
        let start = if sign > 0 { i } else { i + 1 };
        for j in start..n {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for k in 0..n {
                let c = &g[(i, k)];
                if !c.is_zero() {
                    *acc.entry(k * n + j).or_insert_with(Q::zero) += c;
                }
                let c = &g[(j, k)];
                if !c.is_zero() {
                    *acc.entry(k * n + i).or_insert_with(Q::zero) += c * q(sign);
                }
            }
            push_row(rows, acc);
        }
    }
}

fn solve(unknowns: usize, rows: Vec<SparseRow>) -> SolutionSpace {
    let eqs = rows.len();
    nullspace_sparse(unknowns, eqs, rows)
}

/// {X ∈ gl(E) : [X, C] = 0 for every generator}, flattened row-major.
pub fn commutant(h: &OrthRep) -> SolutionSpace {
    let n = h.n();
    let mut rows = Vec::new();
    for c in h.generators() {
        intertwining_rows(c, c, &mut rows);
    }
    solve(n * n, rows)
}

/// Commutant elements that are self-adjoint for the gram; dimension one
/// exactly when a rep with definite gram is irreducible over ℝ.
pub fn self_adjoint_commutant(h: &OrthRep) -> SolutionSpace {
    let n = h.n();
    let mut rows = Vec::new();
    for c in h.generators() {
        intertwining_rows(c, c, &mut rows);
    }
    gram_twisted_rows(h.gram(), -1, &mut rows);
    solve(n * n, rows)
}

/// Centralizer of h inside so(E, gram), flattened row-major.
pub fn centralizer_in_so(h: &OrthRep) -> SolutionSpace {
    let n = h.n();
    let mut rows = Vec::new();
    for c in h.generators() {
        intertwining_rows(c, c, &mut rows);
    }
    gram_twisted_rows(h.gram(), 1, &mut rows);
    solve(n * n, rows)
}

pub fn structure_constants(h: &OrthRep) -> Vec<Vec<Vec<Q>>> {
    LieAlgebraSpec::from_matrices(h.name(), h.generators())
        .expect("valid reps are closed")
        .structure
}

/// Center of h in generator coordinates.
pub fn center(h: &OrthRep) -> SolutionSpace {
    let nn = h.dim();
    let c = structure_constants(h);
    let mut rows = Vec::new();
    for beta in 0..nn {
        for k in 0..nn {
            let mut acc = BTreeMap::new();
            for (alpha, ca) in c.iter().enumerate() {
                acc.insert(alpha, ca[beta][k].clone());
            }
            push_row(&mut rows, acc);
        }
    }
    solve(nn, rows)
}

/// Elements of h vanishing on every listed vector, in generator coordinates.
pub fn annihilator_ideal(h: &OrthRep, vectors: &[Vec<Q>]) -> SolutionSpace {
    let nn = h.dim();
    let mut rows = Vec::new();
    for v in vectors {
        let images: Vec<Vec<Q>> = h.generators().iter().map(|c| c.mul_vec(v)).collect();
        for r in 0..h.n() {
            let acc = images.iter().enumerate().map(|(a, im)| (a, im[r].clone())).collect();
            push_row(&mut rows, acc);
        }
    }
    solve(nn, rows)
}

/// Smallest invariant subspace containing v.
pub fn cyclic_submodule(gens: &[QMatrix], v: &[Q]) -> Vec<Vec<Q>> {
    let n = v.len();
    let mut red = Reducer::new(n, &[]);
    if !red.insert(v) {
        return Vec::new();
    }
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        for g in gens {
            let img = g.mul_vec(&w);
            if red.insert(&img) {
                queue.push(img);
            }
        }
    }
    red.basis()
}

/// Basis of `{w ∈ span(ws) : η(u, w) = 0 for all u ∈ us}`.
pub fn orthogonal_complement_within(gram: &QMatrix, ws: &[Vec<Q>], us: &[Vec<Q>]) -> Vec<Vec<Q>> {
    if us.is_empty() {
        return ws.to_vec();
    }
    let mut m = QMatrix::zeros(us.len(), ws.len());
    for (i, u) in us.iter().enumerate() {
        for (j, w) in ws.iter().enumerate() {
            m[(i, j)] = gram.form(u, w);
        }
    }
    let n = gram.rows();
    nullspace(&m)
        .basis
        .iter()
        .map(|c| {
            let mut v = vec![Q::zero(); n];
            for (cj, w) in c.iter().zip(ws) {
                if !cj.is_zero() {
                    for (x, y) in v.iter_mut().zip(w) {
                        *x += cj * y;
                    }
                }
            }
            v
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Irreducibility {
    CertifiedIrreducible,
    Reducible,
    Undecided,
}

pub fn is_irreducible(h: &OrthRep) -> Irreducibility {
    let n = h.n();
    if n == 0 {
        return Irreducibility::Reducible;
    }
    if self_adjoint_commutant(h).dim() == 1 {
        return Irreducibility::CertifiedIrreducible;
    }
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = Q::one();
        let sub = cyclic_submodule(h.generators(), &e);
        if sub.len() < n {
            return Irreducibility::Reducible;
        }
    }
    Irreducibility::Undecided
}

/// Invariant piece E_i with the ideal h_i acting on it.
#[derive(Clone, Debug)]
pub struct Component {
    pub space: Vec<Vec<Q>>,
    pub ideal: SolutionSpace,
    pub rep: OrthRep,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub e0: Vec<Vec<Q>>,
    pub components: Vec<Component>,
    pub decided: bool,
}

fn split(gram: &QMatrix, gens: &[QMatrix], w: Vec<Vec<Q>>, out: &mut Vec<Vec<Vec<Q>>>) {
    if w.len() <= 1 {
        if !w.is_empty() {
            out.push(w);
        }
        return;
    }
    let mut best: Option<Vec<Vec<Q>>> = None;
    for v in &w {
        let u = cyclic_submodule(gens, v);
        if u.len() < w.len() && best.as_ref().is_none_or(|b| u.len() < b.len()) {
            best = Some(u);
        }
    }
    match best {
        None => out.push(w),
        Some(u) => {
            let rest = orthogonal_complement_within(gram, &w, &u);
            split(gram, gens, u, out);
            split(gram, gens, rest, out);
        }
    }
}

/// Splits E = E₀ ⊕ E₁ ⊕ … ⊕ E_r and h = ⊕ h_i.
pub fn decompose_rep(h: &OrthRep) -> Result<Decomposition, RepError> {
    let n = h.n();
    let stacked = if h.dim() == 0 {
        QMatrix::zeros(0, n)
    } else {
        let rows: Vec<Vec<Q>> = h
            .generators()
            .iter()
            .flat_map(|c| (0..n).map(|i| c.row(i).to_vec()))
            .collect();
        QMatrix::from_rows(rows)?
    };
    let e0 = if n == 0 { Vec::new() } else { nullspace(&stacked).basis };
    let all = crate::exactq::SolutionSpace::full(n).basis;
    let w = orthogonal_complement_within(h.gram(), &all, &e0);
    let mut pieces = Vec::new();
    split(h.gram(), h.generators(), w, &mut pieces);

    let mut components = Vec::with_capacity(pieces.len());
    let mut total = 0;
    for (i, space) in pieces.iter().enumerate() {
        let others: Vec<Vec<Q>> = pieces
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .flat_map(|(_, p)| p.iter().cloned())
            .collect();
        let ideal = annihilator_ideal(h, &others);
        total += ideal.dim();
        let mats: Vec<QMatrix> = ideal.basis.iter().map(|x| h.element(x)).collect();
        let (g, r) = restrict_matrices(h.gram(), &mats, space)?;
        let rep = OrthRep::new(
            format!("{}_part{}", h.name(), i),
            g,
            r,
            json!({ "builder": "decompose_rep", "source": h.name(), "part": i }),
        )?;
        components.push(Component {
            space: space.clone(),
            ideal,
            rep,
        });
    }
    Ok(Decomposition {
        e0,
        components,
        decided: total == h.dim(),
    })
}

/// Restriction of h to an invariant subspace; dependent images are reduced
/// to a canonical spanning set.
pub fn restrict_to_invariant(h: &OrthRep, basis: &[Vec<Q>]) -> Result<OrthRep, RepError> {
    let (g, mut r) = h.restrict_to(basis)?;
    let m = basis.len();
    let flat: Vec<Vec<Q>> = r.iter().map(QMatrix::flatten).collect();
    let red = Reducer::new(m * m, &flat);
    if red.rank() != r.len() {
        r = red.basis().iter().map(|v| QMatrix::from_flat(m, m, v)).collect();
    }
    OrthRep::new(
        format!("{}_restricted", h.name()),
        g,
        r,
        json!({ "builder": "restrict_to_invariant", "source": h.name() }),
    )
}

/// Linear maps T: E_a → E_b with T·A_α = B_α·T, generators matched by index.
pub fn intertwiners(a: &OrthRep, b: &OrthRep) -> Result<SolutionSpace, RepError> {
    if a.dim() != b.dim() {
        return Err(RepError::InvalidInput("generator counts differ".into()));
    }
    let mut rows = Vec::new();
    for (x, y) in a.generators().iter().zip(b.generators()) {
        intertwining_rows(x, y, &mut rows);
    }
    Ok(solve(a.n() * b.n(), rows))
}

/// True when an invertible intertwiner is found among the basis and a few
/// fixed integer combinations of it.
pub fn equivalent(a: &OrthRep, b: &OrthRep) -> Result<bool, RepError> {
    if a.n() != b.n() {
        return Ok(false);
    }
    let n = a.n();
    let space = intertwiners(a, b)?;
    let mut candidates: Vec<Vec<Q>> = space.basis.clone();
    for shift in 1..4i64 {
        let mut v = vec![Q::zero(); n * n];
        for (k, bv) in space.basis.iter().enumerate() {
            let c = q(k as i64 * shift + 1);
            for (x, y) in v.iter_mut().zip(bv) {
                *x += &c * y;
            }
        }
        candidates.push(v);
    }
    Ok(candidates.iter().any(|v| rank(&QMatrix::from_flat(n, n, v)) == n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repkit::builders::{direct_sum_rep, standard_so, trivial_rep};

    #[test]
    fn centers() {
        assert_eq!(center(&standard_so(2)).dim(), 1);
        assert_eq!(center(&standard_so(3)).dim(), 0);
        assert_eq!(center(&crate::repkit::stabilizer::unitary(2).unwrap()).dim(), 1);
    }

    #[test]
    fn so5_is_certified() {
        assert_eq!(is_irreducible(&standard_so(5)), Irreducibility::CertifiedIrreducible);
        assert_eq!(commutant(&standard_so(5)).dim(), 1);
    }

    #[test]
    fn block_sum_splits() {
        let h = direct_sum_rep(&[standard_so(3), standard_so(3)], 0).unwrap();
        let d = decompose_rep(&h).unwrap();
        assert!(d.decided);
        assert!(d.e0.is_empty());
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.components[0].space.len(), 3);
        assert_eq!(is_irreducible(&h), Irreducibility::Reducible);
    }

    #[test]
    fn trivial_algebra_is_all_kernel() {
        let d = decompose_rep(&trivial_rep(2)).unwrap();
        assert_eq!(d.e0.len(), 2);
        assert!(d.components.is_empty());
        assert!(d.decided);
    }
}
