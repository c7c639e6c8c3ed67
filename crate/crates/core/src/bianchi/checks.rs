use num_traits::Zero;
use serde::Serialize;

use crate::error::{ExactError, RepError};
use crate::exactq::{subspace, Coordinates, QMatrix, SolutionSpace, Q};
use crate::repkit::analysis::structure_constants;
use crate::repkit::{decompose_rep, OrthRep};

use super::curvature::{value, CurvatureBasis};
use super::weak::{weak_curvature_space, WeakCurvatureBasis};

/// `P(·) = R(· ∧ e_z)` as a weak-curvature coordinate vector.
pub fn curvature_to_weak(b: &CurvatureBasis, r: &[Q], z: usize) -> Vec<Q> {
    let n = b.rep.n();
    let nn = b.rep.dim();
    let mut p = vec![Q::zero(); nn * n];
    for i in 0..n {
        for (a, x) in value(&b.rep, r, i, z).into_iter().enumerate() {
            p[a * n + i] = x;
        }
    }
    p
}

/// `P_ξ(u) = [P(u), ξ] + P(ξu)`.
pub fn xi_twist(b: &WeakCurvatureBasis, p: &[Q], xi: &[Q]) -> Result<Vec<Q>, ExactError> {
    let h = &b.rep;
    let n = h.n();
    let x = h.element(xi);
    let vals: Vec<QMatrix> = (0..n).map(|i| h.element(&b.value(p, i))).collect();
    let mut out = vec![Q::zero(); h.dim() * n];
    for i in 0..n {
        let mut m = vals[i].mul(&x).sub(&x.mul(&vals[i]));
        for (j, c) in x.column(i).iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&vals[j].scale(c));
            }
        }
        for (a, c) in h.coords_of(&m)?.into_iter().enumerate() {
            out[a * n + i] = c;
        }
    }
    Ok(out)
}

/// `[L, h] ⊆ L` for a subspace L given in generator coordinates.
pub fn lp_is_ideal(h: &OrthRep, l: &SolutionSpace) -> bool {
    let c = structure_constants(h);
    let nn = h.dim();
    let red = l.reducer();
    l.basis.iter().all(|v| {
        (0..nn).all(|beta| {
            let br: Vec<Q> = (0..nn)
                .map(|k| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .fold(Q::zero(), |acc, (a, x)| acc + x * &c[a][beta][k])
                })
                .collect();
            red.contains(&br)
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectSumReport {
    pub dim_p: usize,
    pub parts: Vec<usize>,
    pub e0_dim: usize,
    pub dims_add_up: bool,
    pub spans_agree: bool,
}

/// Compares P(h) with the sum of the P(h_i) embedded along the decomposition.
pub fn pspace_direct_sum_check(h: &OrthRep) -> Result<DirectSumReport, RepError> {
    let dec = decompose_rep(h)?;
    if !dec.decided {
        return Err(RepError::Undecided);
    }
    let n = h.n();
    let nn = h.dim();
    let whole = weak_curvature_space(h);

    let mut frame: Vec<Vec<Q>> = dec.e0.clone();
    for c in &dec.components {
        frame.extend(c.space.iter().cloned());
    }
    let coords = Coordinates::new(n, &frame)?;
    let unit_coords: Vec<Vec<Q>> = (0..n)
        .map(|k| {
            let mut e = vec![Q::zero(); n];
            e[k] = Q::from_integer(1.into());
            coords.coords(&e)
        })
        .collect::<Result<_, _>>()?;

    let mut parts = Vec::new();
    let mut embedded = Vec::new();
    let mut offset = dec.e0.len();
    for comp in &dec.components {
        let pb = weak_curvature_space(&comp.rep);
        parts.push(pb.dim());
        let ni = comp.rep.n();
        for p in &pb.space.basis {
            // P_i(f_j) in h-coordinates.
            let vals: Vec<Vec<Q>> = (0..ni)
                .map(|j| {
                    let loc = pb.value(p, j);
                    let mut v = vec![Q::zero(); nn];
                    for (beta, x) in loc.iter().enumerate() {
                        if !x.is_zero() {
                            for (a, y) in comp.ideal.basis[beta].iter().enumerate() {
                                v[a] += x * y;
                            }
                        }
                    }
                    v
                })
                .collect();
            let mut full = vec![Q::zero(); nn * n];
            for (k, uc) in unit_coords.iter().enumerate() {
                for j in 0..ni {
                    let c = &uc[offset + j];
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..nn {
                        full[a * n + k] += c * &vals[j][a];
                    }
                }
            }
            embedded.push(full);
        }
        offset += ni;
    }
    let sum_space = SolutionSpace::span(nn * n, &embedded);
    let spans_agree = subspace::equal(&sum_space, &whole.space)?;
    Ok(DirectSumReport {
        dim_p: whole.dim(),
        dims_add_up: parts.iter().sum::<usize>() == whole.dim(),
        parts,
        e0_dim: dec.e0.len(),
        spans_agree,
    })
}
