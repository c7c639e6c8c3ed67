use serde_json::json;

use crate::error::RepError;
use crate::exactq::{QMatrix, Q};

use super::analysis::centralizer_in_so;
use super::complex::{complex_provenance, realify, ComplexRep};
use super::rep::OrthRep;
use super::stabilizer::{elementary_skew, so_pairs};

/// so(n) on ℝⁿ with the identity gram and the elementary skew basis.
pub fn standard_so(n: usize) -> OrthRep {
    let gens = so_pairs(n).iter().map(|&(a, b)| elementary_skew(n, a, b)).collect();
    OrthRep::new(
        format!("so_{n}"),
        QMatrix::identity(n),
        gens,
        json!({ "builder": "standard_so", "n": n }),
    )
    .expect("so(n) is valid")
}

/// The zero algebra on ℝⁿ.
pub fn trivial_rep(n: usize) -> OrthRep {
    OrthRep::new(
        format!("trivial_{n}"),
        QMatrix::identity(n),
        vec![],
        json!({ "builder": "trivial", "n": n }),
    )
    .expect("trivial rep is valid")
}

/// Block sum of the parts followed by a trivial block of size `e0_dim`.
pub fn direct_sum_rep(parts: &[OrthRep], e0_dim: usize) -> Result<OrthRep, RepError> {
    if parts.is_empty() {
        return Err(RepError::InvalidInput("direct sum needs at least one part".into()));
    }
    let id0 = QMatrix::identity(e0_dim);
    let mut grams: Vec<&QMatrix> = parts.iter().map(|p| p.gram()).collect();
    grams.push(&id0);
    let gram = QMatrix::block_diag(&grams);
    let n = gram.rows();
    let mut gens = Vec::new();
    let mut off = 0;
    for p in parts {
        for g in p.generators() {
            let mut m = QMatrix::zeros(n, n);
            m.set_block(off, off, g);
            gens.push(m);
        }
        off += p.n();
    }
    let names: Vec<&str> = parts.iter().map(|p| p.name()).collect();
    let mut name = names.join("+");
    if e0_dim > 0 {
        name.push_str(&format!("+triv{e0_dim}"));
    }
    OrthRep::new(
        name,
        gram,
        gens,
        json!({ "builder": "direct_sum", "parts": names, "e0_dim": e0_dim }),
    )
}

/// Factor of a tensor product.
#[derive(Clone, Copy, Debug)]
pub enum RepFactor<'a> {
    Real(&'a OrthRep),
    Complex(&'a ComplexRep),
}

/// Tensor product of two reps of two algebras; the algebra is their direct sum.
/// Complex factors are multiplied over ℂ and then realified through the
/// product structure map.
pub fn tensor_product_rep(a: RepFactor, b: RepFactor) -> Result<OrthRep, RepError> {
    match (a, b) {
        (RepFactor::Real(x), RepFactor::Real(y)) => {
            let (ix, iy) = (QMatrix::identity(x.n()), QMatrix::identity(y.n()));
            let mut gens: Vec<QMatrix> = x.generators().iter().map(|g| g.kron(&iy)).collect();
            gens.extend(y.generators().iter().map(|g| ix.kron(g)));
            OrthRep::new(
                format!("{}_x_{}", x.name(), y.name()),
                x.gram().kron(y.gram()),
                gens,
                json!({ "builder": "tensor_real", "factors": [x.name(), y.name()] }),
            )
        }
        (RepFactor::Complex(x), RepFactor::Complex(y)) => {
            let t = x.tensor(y)?;
            Ok(realify(&t)?.with_provenance(complex_provenance("tensor_complex", &t)))
        }
        _ => Err(RepError::InvalidInput(
            "tensor factors must both be real or both complex".into(),
        )),
    }
}

/// Appends the first canonical basis element of the centralizer of h in so(E)
/// that is not already in h.
pub fn add_center_line(h: &OrthRep) -> Result<OrthRep, RepError> {
    let n = h.n();
    let cent = centralizer_in_so(h);
    let line = cent
        .basis
        .iter()
        .map(|v| QMatrix::from_flat(n, n, v))
        .find(|m| !h.contains(m))
        .ok_or(RepError::NoCentralizer)?;
    let mut gens = h.generators().to_vec();
    gens.push(line);
    OrthRep::new(
        format!("{}+t", h.name()),
        h.gram().clone(),
        gens,
        json!({ "builder": "add_center_line", "source": h.name() }),
    )
}

/// Span of the given elements inside h as a new rep on the same space.
pub fn subalgebra(h: &OrthRep, coords: &[Vec<Q>], name: &str) -> Result<OrthRep, RepError> {
    let gens = coords.iter().map(|x| h.element(x)).collect();
    OrthRep::new(
        name,
        h.gram().clone(),
        gens,
        json!({ "builder": "subalgebra", "source": h.name() }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repkit::complex::su2_irrep;

    #[test]
    fn standard_counts() {
        assert_eq!(standard_so(2).dim(), 1);
        assert_eq!(standard_so(3).dim(), 3);
        assert_eq!(standard_so(8).dim(), 28);
    }

    #[test]
    fn center_line() {
        let su2 = realify(&su2_irrep(1)).unwrap();
        assert_eq!(add_center_line(&su2).unwrap().dim(), 4);
        assert_eq!(add_center_line(&standard_so(3)).unwrap_err(), RepError::NoCentralizer);
    }

    #[test]
    fn tensor_counts() {
        let so3 = standard_so(3);
        let t = tensor_product_rep(RepFactor::Real(&so3), RepFactor::Real(&so3)).unwrap();
        assert_eq!((t.n(), t.dim()), (9, 6));
        let one = trivial_rep(1);
        let t = tensor_product_rep(RepFactor::Real(&so3), RepFactor::Real(&one)).unwrap();
        assert_eq!((t.n(), t.dim()), (3, 3));
    }

    #[test]
    fn direct_sum_counts() {
        let s = direct_sum_rep(&[standard_so(2), standard_so(3)], 2).unwrap();
        assert_eq!((s.n(), s.dim()), (7, 4));
    }
}
