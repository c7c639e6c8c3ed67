use std::fmt;

use num_traits::Zero;
use serde_json::json;

use crate::error::{LorentzError, RepError};
use crate::exactq::{rank, Coordinates, QMatrix, Reducer, SolutionSpace, Q};
use crate::repkit::analysis::structure_constants;
use crate::repkit::{center, OrthRep};

use super::frame::MinkowskiFrame;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum AlgebraType {
    One,
    Two,
    Three,
    Four,
    Raw,
}

impl AlgebraType {
    pub fn from_index(t: u8) -> Option<Self> {
        match t {
            1 => Some(AlgebraType::One),
            2 => Some(AlgebraType::Two),
            3 => Some(AlgebraType::Three),
            4 => Some(AlgebraType::Four),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraType::One => "1",
            AlgebraType::Two => "2",
            AlgebraType::Three => "3",
            AlgebraType::Four => "4",
            AlgebraType::Raw => "raw",
        };
        f.write_str(s)
    }
}

/// Optional twisting data of a type-3 or type-4 construction.
#[derive(Clone, Debug, Default)]
pub struct TypeParams {
    /// φ in coordinates of the canonical center basis.
    pub phi: Option<Vec<Q>>,
    /// ψ as an `e0_dim × dim z(h)` matrix over the canonical center basis.
    pub psi: Option<QMatrix>,
    pub e0_dim: usize,
}

/// Subalgebra of so(V)_{ℝp} together with the data it was built from.
#[derive(Clone, Debug)]
pub struct LorentzAlgebra {
    pub frame: MinkowskiFrame,
    pub rep: OrthRep,
    pub ty: AlgebraType,
    pub h: Option<OrthRep>,
    pub params: TypeParams,
    /// φ extended to h by zero on [h, h], one value per generator.
    pub phi_ext: Option<Vec<Q>>,
    /// ψ extended to h by zero on [h, h], one E-vector per generator.
    pub psi_ext: Option<Vec<Vec<Q>>>,
}

impl LorentzAlgebra {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn n(&self) -> usize {
        self.frame.n()
    }

    /// An arbitrary subalgebra given by matrices over V.
    pub fn raw(frame: MinkowskiFrame, gens: Vec<QMatrix>) -> Result<Self, LorentzError> {
        for g in &gens {
            frame.parts(g)?;
        }
        let rep = OrthRep::new("raw", frame.gram().clone(), gens, json!({ "builder": "raw" }))?;
        Ok(LorentzAlgebra {
            frame,
            rep,
            ty: AlgebraType::Raw,
            h: None,
            params: TypeParams::default(),
            phi_ext: None,
            psi_ext: None,
        })
    }

    /// Size of E₁ (all of E unless type 4).
    pub fn n1(&self) -> usize {
        self.n() - self.params.e0_dim
    }

    /// φ(A) for A in h given by generator coordinates.
    pub fn phi_of(&self, x: &[Q]) -> Q {
        match &self.phi_ext {
            None => Q::zero(),
            Some(f) => f.iter().zip(x).map(|(a, b)| a * b).sum(),
        }
    }

    /// ψ(A) ∈ E for A in h given by generator coordinates.
    pub fn psi_of(&self, x: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.n()];
        if let Some(p) = &self.psi_ext {
            for (col, c) in p.iter().zip(x) {
                if !c.is_zero() {
                    for (vi, pi) in v.iter_mut().zip(col) {
                        *vi += c * pi;
                    }
                }
            }
        }
        v
    }
}

/// Coordinates of every generator of h against the basis [h′ basis, z(h) basis];
/// returns the center-part rows (one per generator, length dim z).
fn center_components(h: &OrthRep) -> Result<(SolutionSpace, Vec<Vec<Q>>), LorentzError> {
    let nn = h.dim();
    let z = center(h);
    let c = structure_constants(h);
    let brackets: Vec<Vec<Q>> = c.iter().flat_map(|row| row.iter().cloned()).collect();
    let derived = SolutionSpace::span(nn, &brackets);
    let mut basis = derived.basis.clone();
    basis.extend(z.basis.iter().cloned());
    if basis.len() != nn {
        return Err(LorentzError::InvalidParams(
            "h is not the sum of its derived algebra and center".into(),
        ));
    }
    let coords = Coordinates::new(nn, &basis)
        .map_err(|_| LorentzError::InvalidParams("h is not the sum of its derived algebra and center".into()))?;
    let d = derived.dim();
    let rows = (0..nn)
        .map(|a| {
            let mut e = vec![Q::zero(); nn];
            e[a] = Q::from_integer(1.into());
            coords.coords(&e).map(|v| v[d..].to_vec())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((z, rows))
}

/// Builds g₁ʰ … g₄ʰ over E with the gram of h.
pub fn build_type_algebra(ty: AlgebraType, h: &OrthRep, params: TypeParams) -> Result<LorentzAlgebra, LorentzError> {
    let frame = MinkowskiFrame::new(h.gram());
    let n = h.n();
    let unit = |i: usize| {
        let mut v = vec![Q::zero(); n];
        v[i] = Q::from_integer(1.into());
        v
    };
    let mut gens = Vec::new();
    let mut phi_ext = None;
    let mut psi_ext = None;
    let mut params = params;
    match ty {
        AlgebraType::One | AlgebraType::Two => {
            if ty == AlgebraType::One {
                gens.push(frame.p_wedge_q());
            }
            gens.extend(h.generators().iter().map(|c| frame.embed(c)));
            gens.extend((0..n).map(|i| frame.p_wedge(&unit(i))));
            params = TypeParams::default();
        }
        AlgebraType::Three => {
            let (z, rows) = center_components(h)?;
            if z.dim() == 0 {
                return Err(LorentzError::TrivialCenter);
            }
            let phi = params
                .phi
                .clone()
                .ok_or_else(|| LorentzError::InvalidParams("phi is required".into()))?;
            if phi.len() != z.dim() {
                return Err(LorentzError::InvalidParams(format!("phi needs {} entries", z.dim())));
            }
            if phi.iter().all(Zero::is_zero) {
                return Err(LorentzError::PhiZero);
            }
            let f: Vec<Q> = rows
                .iter()
                .map(|r| r.iter().zip(&phi).map(|(a, b)| a * b).sum())
                .collect();
            for (c, fa) in h.generators().iter().zip(&f) {
                gens.push(frame.embed(c).add(&frame.p_wedge_q().scale(fa)));
            }
            gens.extend((0..n).map(|i| frame.p_wedge(&unit(i))));
            phi_ext = Some(f);
            params = TypeParams {
                phi: Some(phi),
                psi: None,
                e0_dim: 0,
            };
        }
        AlgebraType::Four => {
            let m0 = params.e0_dim;
            if m0 == 0 || m0 > n {
                return Err(LorentzError::InvalidParams("e0_dim must be between 1 and n".into()));
            }
            let n1 = n - m0;
            let g = h.gram();
            if (0..n1).any(|i| (n1..n).any(|j| !g[(i, j)].is_zero())) {
                return Err(LorentzError::InvalidParams("E0 must be gram-orthogonal to E1".into()));
            }
            for c in h.generators() {
                let touches = (0..n).any(|i| (n1..n).any(|j| !c[(i, j)].is_zero() || !c[(j, i)].is_zero()));
                if touches {
                    return Err(LorentzError::E0NotTrivial);
                }
            }
            let (z, rows) = center_components(h)?;
            if z.dim() == 0 {
                return Err(LorentzError::TrivialCenter);
            }
            let psi = params
                .psi
                .clone()
                .ok_or_else(|| LorentzError::InvalidParams("psi is required".into()))?;
            if psi.rows() != m0 || psi.cols() != z.dim() {
                return Err(LorentzError::InvalidParams(format!("psi must be {}x{}", m0, z.dim())));
            }
            if rank(&psi) != m0 {
                return Err(LorentzError::NotSurjective);
            }
            let ext: Vec<Vec<Q>> = rows
                .iter()
                .map(|r| {
                    let w = psi.mul_vec(r);
                    let mut v = vec![Q::zero(); n];
                    v[n1..].clone_from_slice(&w);
                    v
                })
                .collect();
            for (c, v) in h.generators().iter().zip(&ext) {
                gens.push(frame.embed(c).add(&frame.p_wedge(v)));
            }
            gens.extend((0..n1).map(|i| frame.p_wedge(&unit(i))));
            psi_ext = Some(ext);
            params = TypeParams {
                phi: None,
                psi: Some(psi),
                e0_dim: m0,
            };
        }
        AlgebraType::Raw => return Err(LorentzError::InvalidParams("use LorentzAlgebra::raw".into())),
    }
    let rep = OrthRep::new(
        format!("g{}_{}", ty, h.name()),
        frame.gram().clone(),
        gens,
        json!({ "builder": "type_algebra", "type": ty.to_string(), "h": h.name() }),
    )?;
    Ok(LorentzAlgebra {
        frame,
        rep,
        ty,
        h: Some(h.clone()),
        params,
        phi_ext,
        psi_ext,
    })
}

/// Projection of g to the E∧E block, as a rep over E.
pub fn orthogonal_part(g: &LorentzAlgebra) -> Result<OrthRep, LorentzError> {
    let n = g.n();
    let mut red = Reducer::new(n * n, &[]);
    for m in g.rep.generators() {
        let (_, a, _) = g.frame.parts(m)?;
        red.insert(&a.flatten());
    }
    let gens = red.basis().iter().map(|v| QMatrix::from_flat(n, n, v)).collect();
    OrthRep::new(
        "orthogonal_part",
        g.frame.euclidean_gram().clone(),
        gens,
        json!({ "builder": "orthogonal_part", "source": g.rep.name() }),
    )
    .map_err(|e: RepError| e.into())
}
