//! Closedness of connected subgroups of a torus: a subspace of the Lie
//! algebra ℝ^m (lattice coordinates) integrates to a closed subgroup iff it
//! has a rational basis.

use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::error::ExactError;
use crate::exactq::{rank, rref, Matrix, NfElem, NumberField, QMatrix, Scalar, Q};

/// Span of `l` vectors in K^m for a number field K.
#[derive(Clone, Debug)]
pub struct TorusSubspace {
    field: Arc<NumberField>,
    m: usize,
    basis: Vec<Vec<NfElem>>,
}

impl TorusSubspace {
    pub fn new(field: Arc<NumberField>, m: usize, basis: Vec<Vec<NfElem>>) -> Result<Self, ExactError> {
        for v in &basis {
            if v.len() != m {
                return Err(ExactError::DimensionMismatch {
                    expected: m,
                    got: v.len(),
                });
            }
            if v.iter().any(|x| x.field() != &field) {
                return Err(ExactError::InvalidScalar);
            }
        }
        if !basis.is_empty() {
            let mat = Matrix::from_rows(basis.clone())?;
            if rref(&mat)?.rank() != basis.len() {
                return Err(ExactError::Parse("basis vectors are linearly dependent".into()));
            }
        }
        Ok(TorusSubspace { field, m, basis })
    }

    /// Parses `"1,x; 0,1"`: semicolon-separated vectors of power-basis polynomials.
    pub fn parse(field: Arc<NumberField>, m: Option<usize>, s: &str) -> Result<Self, ExactError> {
        let mut basis = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let v = part
                .split(',')
                .map(|e| NfElem::parse(&field, e.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            basis.push(v);
        }
        let m = match (m, basis.first()) {
            (Some(m), _) => m,
            (None, Some(v)) => v.len(),
            (None, None) => return Err(ExactError::Parse("empty basis needs an explicit dimension".into())),
        };
        TorusSubspace::new(field, m, basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn basis(&self) -> &[Vec<NfElem>] {
        &self.basis
    }
}

/// K-linear equations `a·x = 0` cutting out the span.
fn defining_equations(w: &TorusSubspace) -> Result<Vec<Vec<NfElem>>, ExactError> {
    let zero = NfElem::from_q(&w.field, Q::zero());
    let one = NfElem::from_q(&w.field, Q::from_integer(1.into()));
    if w.basis.is_empty() {
        return Ok((0..w.m)
            .map(|i| {
                let mut v = vec![zero.clone(); w.m];
                v[i] = one.clone();
                v
            })
            .collect());
    }
    let r = rref(&Matrix::from_rows(w.basis.clone())?)?;
    let mut is_pivot = vec![false; w.m];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    Ok((0..w.m)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![zero.clone(); w.m];
            v[f] = one.clone();
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = r.matrix[(row, f)].neg();
            }
            v
        })
        .collect())
}

/// dim_ℚ of the rational points of the span.
pub fn rational_points_dim(w: &TorusSubspace) -> Result<usize, ExactError> {
    let d = w.field.degree();
    let eqs = defining_equations(w)?;
    let mut rows = Vec::with_capacity(eqs.len() * d);
    for a in &eqs {
        for k in 0..d {
            rows.push(
                a.iter()
                    .map(|x| x.coeffs().get(k).cloned().unwrap_or_else(Q::zero))
                    .collect::<Vec<_>>(),
            );
        }
    }
    if rows.is_empty() {
        return Ok(w.m);
    }
    let mat = QMatrix::from_rows(rows)?;
    Ok(w.m - rank(&mat))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedReport {
    pub closed: bool,
    pub rational_dim: usize,
}

pub fn is_closed(w: &TorusSubspace) -> Result<ClosedReport, ExactError> {
    let r = rational_points_dim(w)?;
    Ok(ClosedReport {
        closed: r == w.dim(),
        rational_dim: r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> Arc<NumberField> {
        NumberField::parse("x^2-2").unwrap()
    }

    #[test]
    fn rational_line_is_closed() {
        let w = TorusSubspace::parse(NumberField::rationals(), None, "1,2").unwrap();
        assert_eq!(
            is_closed(&w).unwrap(),
            ClosedReport {
                closed: true,
                rational_dim: 1
            }
        );
    }

    #[test]
    fn irrational_line_is_not_closed() {
        let w = TorusSubspace::parse(sqrt2(), None, "1,x").unwrap();
        assert_eq!(
            is_closed(&w).unwrap(),
            ClosedReport {
                closed: false,
                rational_dim: 0
            }
        );
    }

    #[test]
    fn edge_cases() {
        let full = TorusSubspace::parse(sqrt2(), None, "1,x; 0,1").unwrap();
        assert_eq!(
            is_closed(&full).unwrap(),
            ClosedReport {
                closed: true,
                rational_dim: 2
            }
        );
        let empty = TorusSubspace::parse(sqrt2(), Some(3), "").unwrap();
        assert_eq!(
            is_closed(&empty).unwrap(),
            ClosedReport {
                closed: true,
                rational_dim: 0
            }
        );
    }

    #[test]
    fn plane_with_one_rational_direction() {
        let w = TorusSubspace::parse(sqrt2(), None, "1,0,0; 0,1,x").unwrap();
        assert_eq!(rational_points_dim(&w).unwrap(), 1);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(NumberField::parse("x^2-4"), Err(ExactError::NotAField(_))));
    }

    #[test]
    fn dependent_basis_rejected() {
        assert!(TorusSubspace::parse(sqrt2(), None, "1,x; x,2").is_err());
    }
}
