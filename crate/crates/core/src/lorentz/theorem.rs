use serde::Serialize;

use crate::bianchi::{berger_check, curvature_space, weak_berger_check, weak_curvature_space, Verdict};
use crate::error::LorentzError;
use crate::exactq::{inverse, nullspace, QMatrix, Reducer, Q};
use crate::repkit::builders::subalgebra;
use crate::repkit::OrthRep;

use super::algebra::{build_type_algebra, orthogonal_part, AlgebraType, LorentzAlgebra, TypeParams};
use super::canonical::{canonical_curvature, CanonicalKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem3Report {
    #[serde(rename = "type")]
    pub ty: String,
    pub n: usize,
    pub dim_g: usize,
    pub thm3_lhs: usize,
    pub thm3_rhs: usize,
    pub components: Vec<(String, usize)>,
    pub families_ok: bool,
    pub thm3_ok: bool,
}

/// Kernel of a linear map on h given by one row per output coordinate.
fn kernel_subalgebra(h: &OrthRep, rows: &[Vec<Q>], name: &str) -> Result<(OrthRep, Vec<Vec<Q>>), LorentzError> {
    let nn = h.dim();
    let basis = if rows.is_empty() {
        crate::exactq::SolutionSpace::full(nn).basis
    } else {
        nullspace(&QMatrix::from_rows(rows.to_vec())?).basis
    };
    Ok((subalgebra(h, &basis, name)?, basis))
}

/// Self-adjoint endomorphisms of E supported on the first `n1` coordinates.
fn symmetric_basis(g: &QMatrix, n1: usize) -> Vec<QMatrix> {
    let n = g.rows();
    let ginv = inverse(g).expect("definite gram");
    let mut out = Vec::new();
    for i in 0..n1 {
        for j in i..n1 {
            let mut s = QMatrix::unit(n, i, j);
            if i != j {
                s = s.add(&QMatrix::unit(n, j, i));
            }
            out.push(ginv.mul(&s));
        }
    }
    out
}

/// Compares dim R(g) with the sum of the component dimensions and checks
/// that the canonical families are members of R(g) spanning it without overlap.
pub fn theorem3_verify(h: &OrthRep, ty: AlgebraType, params: TypeParams) -> Result<Theorem3Report, LorentzError> {
    let g = build_type_algebra(ty, h, params)?;
    let n = h.n();
    let n1 = g.n1();
    let rg = curvature_space(&g.rep);
    let ph = weak_curvature_space(h);

    // The curvature part lives on h, ker φ or ker ψ.
    let (sub, sub_basis) = match ty {
        AlgebraType::Three => {
            let f = g.phi_ext.clone().expect("type 3 has phi");
            kernel_subalgebra(h, &[f], "ker_phi")?
        }
        AlgebraType::Four => {
            let ext = g.psi_ext.clone().expect("type 4 has psi");
            let rows: Vec<Vec<Q>> = (0..n).map(|i| ext.iter().map(|v| v[i].clone()).collect()).collect();
            kernel_subalgebra(h, &rows, "ker_psi")?
        }
        _ => {
            let basis = crate::exactq::SolutionSpace::full(h.dim()).basis;
            (h.clone(), basis)
        }
    };
    let rsub = curvature_space(&sub);

    let mut components = vec![
        (format!("R({})", sub.name()), rsub.dim()),
        ("P(h)".to_string(), ph.dim()),
        ("S2(E)".to_string(), n1 * (n1 + 1) / 2),
    ];
    if ty == AlgebraType::One {
        components.push(("R(E,R)".to_string(), n));
        components.push(("R(R,R)".to_string(), 1));
    }
    let rhs: usize = components.iter().map(|c| c.1).sum();

    let m = n * n.saturating_sub(1) / 2;
    let mut kinds: Vec<CanonicalKind> = Vec::new();
    for r in &rsub.space.basis {
        let mut rh = vec![Q::from_integer(0.into()); h.dim() * m];
        for (beta, kb) in sub_basis.iter().enumerate() {
            for k in 0..m {
                let c = &r[beta * m + k];
                if *c != Q::from_integer(0.into()) {
                    for (al, x) in kb.iter().enumerate() {
                        rh[al * m + k] += c * x;
                    }
                }
            }
        }
        kinds.push(CanonicalKind::H(rh));
    }
    kinds.extend(ph.space.basis.iter().cloned().map(CanonicalKind::P));
    kinds.extend(symmetric_basis(h.gram(), n1).into_iter().map(CanonicalKind::T));
    if ty == AlgebraType::One {
        for i in 0..n {
            let mut l = vec![Q::from_integer(0.into()); n];
            l[i] = Q::from_integer(1.into());
            kinds.push(CanonicalKind::L(l));
        }
        kinds.push(CanonicalKind::Lambda(Q::from_integer(1.into())));
    }
    let reducer = rg.space.reducer();
    let mut span = Reducer::new(rg.space.ambient_dim, &[]);
    let mut families_ok = true;
    for k in &kinds {
        match canonical_curvature(k, &g) {
            Ok(v) => {
                families_ok &= reducer.contains(&v);
                families_ok &= span.insert(&v);
            }
            Err(_) => families_ok = false,
        }
    }
    families_ok &= span.rank() == rg.dim();

    Ok(Theorem3Report {
        ty: ty.to_string(),
        n,
        dim_g: g.dim(),
        thm3_lhs: rg.dim(),
        thm3_rhs: rhs,
        components,
        families_ok,
        thm3_ok: rg.dim() == rhs && families_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corollary1Report {
    pub dim_g: usize,
    pub dim_r: usize,
    pub dim_lr: usize,
    pub berger: Verdict,
    pub dim_h: usize,
    pub dim_p: usize,
    pub dim_lp: usize,
    pub weak_berger: Verdict,
    pub agree: bool,
}

/// Berger verdict of g against the weak-Berger verdict of its orthogonal
/// part; a vacuous orthogonal part counts as weak-Berger.
pub fn corollary1_crosscheck(g: &LorentzAlgebra) -> Result<Corollary1Report, LorentzError> {
    let (b, _, _) = berger_check(&g.rep);
    let h = orthogonal_part(g)?;
    let (w, _, _) = weak_berger_check(&h);
    let weak_true = matches!(w.verdict, Verdict::True | Verdict::Vacuous);
    Ok(Corollary1Report {
        dim_g: b.dim_g,
        dim_r: b.dim_r,
        dim_lr: b.dim_lr,
        berger: b.verdict,
        dim_h: w.dim_h,
        dim_p: w.dim_p,
        dim_lp: w.dim_lp,
        weak_berger: w.verdict,
        agree: (b.verdict == Verdict::True) == weak_true,
    })
}
