//! Exact subspace arithmetic on [`SolutionSpace`] values.

use num_traits::Zero;

use super::elim::{nullspace, SolutionSpace};
use super::matrix::QMatrix;
use super::scalar::Q;
use crate::error::ExactError;

fn check(a: &SolutionSpace, b: &SolutionSpace) -> Result<(), ExactError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(ExactError::DimensionMismatch {
            expected: a.ambient_dim,
            got: b.ambient_dim,
        });
    }
    Ok(())
}

pub fn sum(a: &SolutionSpace, b: &SolutionSpace) -> Result<SolutionSpace, ExactError> {
    check(a, b)?;
    let mut all = a.basis.clone();
    all.extend(b.basis.iter().cloned());
    Ok(SolutionSpace::span(a.ambient_dim, &all))
}

pub fn intersection(a: &SolutionSpace, b: &SolutionSpace) -> Result<SolutionSpace, ExactError> {
    check(a, b)?;
    let n = a.ambient_dim;
    let (k, l) = (a.dim(), b.dim());
    if k == 0 || l == 0 {
        return Ok(SolutionSpace::zero(n));
    }
    // Σ x_i a_i − Σ y_j b_j = 0
    let mut m = QMatrix::zeros(n, k + l);
    for (i, v) in a.basis.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            m[(r, i)] = x.clone();
        }
    }
    for (j, v) in b.basis.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            m[(r, k + j)] = -x.clone();
        }
    }
    let ns = nullspace(&m);
    let vecs: Vec<Vec<Q>> = ns
        .basis
        .iter()
        .map(|c| {
            let mut v = vec![Q::zero(); n];
            for (i, ai) in a.basis.iter().enumerate() {
                if c[i].is_zero() {
                    continue;
                }
                for (t, x) in v.iter_mut().zip(ai) {
                    *t += &c[i] * x;
                }
            }
            v
        })
        .collect();
    Ok(SolutionSpace::span(n, &vecs))
}

pub fn equal(a: &SolutionSpace, b: &SolutionSpace) -> Result<bool, ExactError> {
    check(a, b)?;
    if a.dim() != b.dim() {
        return Ok(false);
    }
    let r = a.reducer();
    Ok(b.basis.iter().all(|v| r.contains(v)))
}

pub fn contains(a: &SolutionSpace, v: &[Q]) -> Result<bool, ExactError> {
    if v.len() != a.ambient_dim {
        return Err(ExactError::DimensionMismatch {
            expected: a.ambient_dim,
            got: v.len(),
        });
    }
    Ok(a.contains(v))
}

/// Whether `a ⊆ b`.
pub fn is_subspace(a: &SolutionSpace, b: &SolutionSpace) -> Result<bool, ExactError> {
    check(a, b)?;
    let r = b.reducer();
    Ok(a.basis.iter().all(|v| r.contains(v)))
}

/// Image of `a` under deleting the listed coordinates (projection onto the
/// complementary coordinate block).
pub fn project_out(a: &SolutionSpace, coords: &[usize]) -> Result<SolutionSpace, ExactError> {
    if let Some(&bad) = coords.iter().find(|&&c| c >= a.ambient_dim) {
        return Err(ExactError::DimensionMismatch {
            expected: a.ambient_dim,
            got: bad + 1,
        });
    }
    let keep: Vec<usize> = (0..a.ambient_dim).filter(|j| !coords.contains(j)).collect();
    let vecs: Vec<Vec<Q>> = a
        .basis
        .iter()
        .map(|v| keep.iter().map(|&j| v[j].clone()).collect())
        .collect();
    Ok(SolutionSpace::span(keep.len(), &vecs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::elim::unit_vectors;
    use crate::exactq::scalar::q;

    fn e(n: usize, i: usize) -> Vec<Q> {
        unit_vectors(n)[i].clone()
    }

    #[test]
    fn sum_of_axes() {
        let a = SolutionSpace::span(3, &[e(3, 0)]);
        let b = SolutionSpace::span(3, &[e(3, 1)]);
        assert_eq!(sum(&a, &b).unwrap().dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let a = SolutionSpace::span(3, &[e(3, 0), e(3, 1)]);
        let b = SolutionSpace::span(3, &[e(3, 1), e(3, 2)]);
        let i = intersection(&a, &b).unwrap();
        assert_eq!(i.basis, vec![e(3, 1)]);
    }

    #[test]
    fn equality_under_scaling() {
        let a = SolutionSpace::span(2, &[vec![q(1), q(1)]]);
        let b = SolutionSpace::span(2, &[vec![q(2), q(2)]]);
        assert!(equal(&a, &b).unwrap());
        assert!(equal(&b, &a).unwrap());
        let c = SolutionSpace::span(3, &[e(3, 0)]);
        assert!(matches!(equal(&a, &c), Err(ExactError::DimensionMismatch { .. })));
    }

    #[test]
    fn projection_drops_coordinates() {
        let a = SolutionSpace::span(3, &[vec![q(1), q(0), q(1)], vec![q(0), q(1), q(0)]]);
        let p = project_out(&a, &[2]).unwrap();
        assert_eq!(p.ambient_dim, 2);
        assert_eq!(p.dim(), 2);
        let p = project_out(&a, &[0, 2]).unwrap();
        assert_eq!(p.dim(), 1);
    }
}
