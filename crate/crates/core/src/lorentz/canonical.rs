use num_traits::Zero;
use serde::Serialize;

use crate::bianchi::{curvature_residual_zero, pair_index, pairs, weak_residual_zero};
use crate::error::LorentzError;
use crate::exactq::{inverse, nullspace, QMatrix, Q};
use crate::repkit::OrthRep;

use super::algebra::{AlgebraType, LorentzAlgebra};

/// Parameters of a canonical curvature tensor.
#[derive(Clone, Debug, PartialEq)]
pub enum CanonicalKind {
    /// R(p∧q) = λ p∧q.
    Lambda(Q),
    /// R(q∧u) = L(u) p∧q and R(p∧q) = p∧L*, for a covector L on E.
    L(Vec<Q>),
    /// R(q∧u) = p∧T(u) for an η-self-adjoint T.
    T(QMatrix),
    /// Built from P ∈ P(h) given in the `α·n + i` layout.
    P(Vec<Q>),
    /// An element of R(h) (or of the relevant kernel) in the `α·C(n,2) + pair` layout.
    H(Vec<Q>),
}

impl CanonicalKind {
    pub fn label(&self) -> &'static str {
        match self {
            CanonicalKind::Lambda(_) => "lambda",
            CanonicalKind::L(_) => "L",
            CanonicalKind::T(_) => "T",
            CanonicalKind::P(_) => "P",
            CanonicalKind::H(_) => "h",
        }
    }
}

/// Values R(v_a ∧ v_b), a < b, over the basis of V.
struct Table {
    d: usize,
    ops: Vec<QMatrix>,
}

impl Table {
    fn new(d: usize) -> Self {
        let m = d * (d - 1) / 2;
        Table {
            d,
            ops: vec![QMatrix::zeros(d, d); m],
        }
    }

    fn add(&mut self, a: usize, b: usize, m: &QMatrix) {
        let k = pair_index(self.d, a.min(b), a.max(b));
        self.ops[k] = if a < b { self.ops[k].add(m) } else { self.ops[k].sub(m) };
    }

    fn to_coords(&self, g: &OrthRep) -> Result<Vec<Q>, LorentzError> {
        let m = self.ops.len();
        let mut r = vec![Q::zero(); g.dim() * m];
        for (k, op) in self.ops.iter().enumerate() {
            if op.is_zero() {
                continue;
            }
            let c = g.coords_of(op).map_err(|_| LorentzError::NotInSpace)?;
            for (al, x) in c.into_iter().enumerate() {
                r[al * m + k] = x;
            }
        }
        Ok(r)
    }
}

fn mismatch(kind: &CanonicalKind, g: &LorentzAlgebra) -> LorentzError {
    LorentzError::KindTypeMismatch {
        kind: kind.label().to_string(),
        ty: g.ty.to_string(),
    }
}

fn h_of(g: &LorentzAlgebra) -> Result<&OrthRep, LorentzError> {
    g.h.as_ref()
        .ok_or_else(|| LorentzError::InvalidParams("algebra was not built from h".into()))
}

/// P(e_i) as matrices, one per basis vector of E.
fn p_values(h: &OrthRep, p: &[Q]) -> Vec<QMatrix> {
    let n = h.n();
    (0..n)
        .map(|i| {
            let x: Vec<Q> = (0..h.dim()).map(|a| p[a * n + i].clone()).collect();
            h.element(&x)
        })
        .collect()
}

fn p_coords(h: &OrthRep, p: &[Q], i: usize) -> Vec<Q> {
    let n = h.n();
    (0..h.dim()).map(|a| p[a * n + i].clone()).collect()
}

/// S' for a type-4 algebra: E₁ → E₀ given by ψ∘P, completed to an η-self-adjoint map.
fn type4_twist(g: &LorentzAlgebra, h: &OrthRep, p: &[Q]) -> QMatrix {
    let n = g.n();
    let n1 = g.n1();
    let mut s = QMatrix::zeros(n, n);
    for j in 0..n1 {
        let v = g.psi_of(&p_coords(h, p, j));
        for i in n1..n {
            s[(i, j)] = v[i].clone();
        }
    }
    // Upper-right block from symmetry of G·S'.
    let gm = g.frame.euclidean_gram();
    let g1inv = inverse(&gm.block(0, 0, n1, n1)).expect("definite block");
    let y = s.block(n1, 0, n - n1, n1);
    let g0 = gm.block(n1, n1, n - n1, n - n1);
    s.set_block(0, n1, &g1inv.mul(&g0.mul(&y).transpose()));
    s
}

fn add_l(table: &mut Table, g: &LorentzAlgebra, l: &[Q]) {
    let f = &g.frame;
    for (i, li) in l.iter().enumerate() {
        table.add(f.q(), f.e(i), &f.p_wedge_q().scale(li));
    }
    table.add(f.p(), f.q(), &f.p_wedge(&f.raise(l)));
}

fn fill(table: &mut Table, kind: &CanonicalKind, g: &LorentzAlgebra) -> Result<(), LorentzError> {
    let f = &g.frame;
    let n = g.n();
    let (p, qi) = (f.p(), f.q());
    let unit = |i: usize| {
        let mut v = vec![Q::zero(); n];
        v[i] = Q::from_integer(1.into());
        v
    };
    match kind {
        CanonicalKind::Lambda(l) => {
            if g.ty != AlgebraType::One {
                return Err(mismatch(kind, g));
            }
            table.add(p, qi, &f.p_wedge_q().scale(l));
        }
        CanonicalKind::L(l) => {
            if g.ty != AlgebraType::One {
                return Err(mismatch(kind, g));
            }
            if l.len() != n {
                return Err(LorentzError::InvalidParams("L has the wrong length".into()));
            }
            add_l(table, g, l);
        }
        CanonicalKind::T(t) => {
            if g.ty == AlgebraType::Raw {
                return Err(mismatch(kind, g));
            }
            if t.rows() != n || t.cols() != n || !f.euclidean_gram().mul(t).is_symmetric() {
                return Err(LorentzError::InvalidParams(
                    "T must be a self-adjoint endomorphism of E".into(),
                ));
            }
            if g.ty == AlgebraType::Four {
                let n1 = g.n1();
                let outside = (0..n).any(|i| (n1..n).any(|j| !t[(i, j)].is_zero() || !t[(j, i)].is_zero()));
                if outside {
                    return Err(LorentzError::InvalidParams("T must vanish on E0".into()));
                }
            }
            for i in 0..n {
                table.add(qi, f.e(i), &f.p_wedge(&t.mul_vec(&unit(i))));
            }
        }
        CanonicalKind::P(pv) => {
            let h = h_of(g).map_err(|_| mismatch(kind, g))?;
            if pv.len() != h.dim() * n {
                return Err(LorentzError::InvalidParams("P has the wrong length".into()));
            }
            let vals = p_values(h, pv);
            for i in 0..n {
                table.add(qi, f.e(i), &f.embed(&vals[i]));
            }
            for i in 0..n {
                for j in i + 1..n {
                    let z: Vec<Q> = vals[i]
                        .mul_vec(&unit(j))
                        .iter()
                        .zip(vals[j].mul_vec(&unit(i)))
                        .map(|(a, b)| a - b)
                        .collect();
                    table.add(f.e(i), f.e(j), &f.p_wedge(&z));
                }
            }
            match g.ty {
                AlgebraType::Three => {
                    let l: Vec<Q> = (0..n).map(|i| g.phi_of(&p_coords(h, pv, i))).collect();
                    add_l(table, g, &l);
                }
                AlgebraType::Four => {
                    let s = type4_twist(g, h, pv);
                    for i in 0..n {
                        table.add(qi, f.e(i), &f.p_wedge(&s.mul_vec(&unit(i))));
                    }
                }
                _ => {}
            }
        }
        CanonicalKind::H(r) => {
            let h = h_of(g).map_err(|_| mismatch(kind, g))?;
            let m = n * n.saturating_sub(1) / 2;
            if r.len() != h.dim() * m {
                return Err(LorentzError::InvalidParams("R_h has the wrong length".into()));
            }
            for (k, (a, b)) in pairs(n).into_iter().enumerate() {
                let x: Vec<Q> = (0..h.dim()).map(|al| r[al * m + k].clone()).collect();
                table.add(f.e(a), f.e(b), &f.embed(&h.element(&x)));
            }
        }
    }
    Ok(())
}

/// Coordinates in R(g) of the canonical tensor of the given kind.
pub fn canonical_curvature(kind: &CanonicalKind, g: &LorentzAlgebra) -> Result<Vec<Q>, LorentzError> {
    let mut t = Table::new(g.frame.dim());
    fill(&mut t, kind, g)?;
    t.to_coords(&g.rep)
}

/// Sum of canonical tensors.
pub fn assemble(kinds: &[CanonicalKind], g: &LorentzAlgebra) -> Result<Vec<Q>, LorentzError> {
    let mut t = Table::new(g.frame.dim());
    for k in kinds {
        fill(&mut t, k, g)?;
    }
    t.to_coords(&g.rep)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub ok: bool,
}

/// Components (R_h, P, T, L, λ) of a curvature tensor of a type algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureComponents {
    pub r_h: Vec<Q>,
    pub p: Vec<Q>,
    pub t: QMatrix,
    pub l: Vec<Q>,
    pub k: Vec<Q>,
    pub lambda: Q,
    pub checks: Vec<LemmaCheck>,
}

impl CurvatureComponents {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.ok).map(|c| c.name).collect()
    }
}

/// Bivectors of E orthogonal to h under the trace form.
fn h_perp(h: &OrthRep) -> Vec<Vec<Q>> {
    let n = h.n();
    let pr = pairs(n);
    let g = h.gram();
    let mut m = QMatrix::zeros(h.dim(), pr.len());
    for (k, &(a, b)) in pr.iter().enumerate() {
        // (e_a∧e_b) ∝ e_a (G e_b)ᵀ − e_b (G e_a)ᵀ
        let mut w = QMatrix::zeros(n, n);
        for j in 0..n {
            w[(a, j)] += &g[(b, j)];
            w[(b, j)] -= &g[(a, j)];
        }
        for (al, c) in h.generators().iter().enumerate() {
            m[(al, k)] = w.mul(c).trace();
        }
    }
    nullspace(&m).basis
}

/// Splits R ∈ R(g) into canonical components, verifies the structural
/// constraints, and checks that the components reassemble to R.
pub fn decompose_curvature(r: &[Q], g: &LorentzAlgebra) -> Result<CurvatureComponents, LorentzError> {
    let h = h_of(g)?.clone();
    let f = &g.frame;
    let n = g.n();
    let d = f.dim();
    let dm = d * (d - 1) / 2;
    if r.len() != g.dim() * dm || !curvature_residual_zero(&g.rep, r) {
        return Err(LorentzError::NotInSpace);
    }
    let op = |a: usize, b: usize| g.rep.element(&crate::bianchi::curvature_value(&g.rep, r, a, b));
    let (p, qi) = (f.p(), f.q());
    let nn = h.dim();
    let m = n * n.saturating_sub(1) / 2;
    let mut checks = Vec::new();
    let mut check = |name: &'static str, ok: bool| checks.push(LemmaCheck { name, ok });

    check("R(p^E) = 0", (0..n).all(|i| op(p, f.e(i)).is_zero()));

    let mut pv = vec![Q::zero(); nn * n];
    let mut l = vec![Q::zero(); n];
    let mut xcols = Vec::with_capacity(n);
    for i in 0..n {
        let (a, big_a, x) = f.parts(&op(qi, f.e(i)))?;
        let c = h.coords_of(&big_a).map_err(|_| LorentzError::NotInSpace)?;
        for (al, v) in c.into_iter().enumerate() {
            pv[al * n + i] = v;
        }
        l[i] = a;
        xcols.push(x);
    }
    let mut t = QMatrix::from_columns(n, &xcols);
    if g.ty == AlgebraType::Four {
        t = t.sub(&type4_twist(g, &h, &pv));
    }

    let (lambda, b, k) = f.parts(&op(p, qi))?;
    check("R(p^q) has no h-part", b.is_zero());
    check("K = L*", k == f.raise(&l));

    let vals = p_values(&h, &pv);
    let mut rh = vec![Q::zero(); nn * m];
    let mut q_ok = true;
    let mut a_ok = true;
    for (kk, (a, bb)) in pairs(n).into_iter().enumerate() {
        let (s, big_a, x) = f.parts(&op(f.e(a), f.e(bb)))?;
        a_ok &= s.is_zero();
        let c = h.coords_of(&big_a).map_err(|_| LorentzError::NotInSpace)?;
        for (al, v) in c.into_iter().enumerate() {
            rh[al * m + kk] = v;
        }
        let expect: Vec<Q> = (0..n)
            .map(|row| vals[a][(row, bb)].clone() - vals[bb][(row, a)].clone())
            .collect();
        q_ok &= x == expect;
    }
    check("R(E^E) has no p^q-part", a_ok);
    check("Q = P*", q_ok);
    check("T = T*", f.euclidean_gram().mul(&t).is_symmetric());
    check("R_h in R(h)", curvature_residual_zero(&h, &rh));
    check("P in P(h)", weak_residual_zero(&h, &pv));
    let perp_ok = h_perp(&h).iter().all(|theta| {
        (0..nn).all(|al| {
            theta
                .iter()
                .enumerate()
                .fold(Q::zero(), |acc, (kk, c)| acc + c * &rh[al * m + kk])
                .is_zero()
        })
    });
    check("R_h vanishes on h-perp", perp_ok);

    match g.ty {
        AlgebraType::Two => {
            check(
                "no lambda, L in type 2",
                lambda.is_zero() && l.iter().all(Zero::is_zero),
            );
        }
        AlgebraType::Three => {
            check("lambda = 0", lambda.is_zero());
            let fp: Vec<Q> = (0..n).map(|i| g.phi_of(&p_coords(&h, &pv, i))).collect();
            check("L = phi o P", fp == l);
        }
        AlgebraType::Four => {
            let n1 = g.n1();
            let e0_zero = (n1..n).all(|i| (0..n).all(|j| t[(i, j)].is_zero() && t[(j, i)].is_zero()));
            check("R_E0 = 0", e0_zero);
            check("P(E0) = 0", (n1..n).all(|i| vals[i].is_zero()));
            check(
                "no lambda, L in type 4",
                lambda.is_zero() && l.iter().all(Zero::is_zero),
            );
        }
        _ => {}
    }

    let mut kinds = vec![
        CanonicalKind::H(rh.clone()),
        CanonicalKind::P(pv.clone()),
        CanonicalKind::T(t.clone()),
    ];
    if g.ty == AlgebraType::One {
        kinds.push(CanonicalKind::L(l.clone()));
        kinds.push(CanonicalKind::Lambda(lambda.clone()));
    }
    let back = match assemble(&kinds, g) {
        Ok(v) => v == r,
        Err(_) => false,
    };
    check("reassembles", back);

    Ok(CurvatureComponents {
        r_h: rh,
        p: pv,
        t,
        l,
        k,
        lambda,
        checks,
    })
}
