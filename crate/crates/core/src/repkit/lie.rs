use serde_json::json;

use crate::error::RepError;
use crate::exactq::{rank, Coordinates, QMatrix, Q};

use super::analysis::commutant;
use super::complex::{su2_basis, CMatrix};
use super::rep::{is_positive_definite, OrthRep};

/// Real Lie algebra given by structure constants `[X_i, X_j] = Σ_k c[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraSpec {
    pub name: String,
    pub structure: Vec<Vec<Vec<Q>>>,
}

impl LieAlgebraSpec {
    pub fn dim(&self) -> usize {
        self.structure.len()
    }

    /// Structure constants of the span of independent, bracket-closed matrices.
    pub fn from_matrices(name: impl Into<String>, mats: &[QMatrix]) -> Result<Self, RepError> {
        if mats.is_empty() {
            return Ok(LieAlgebraSpec {
                name: name.into(),
                structure: vec![],
            });
        }
        let n = mats[0].rows();
        let flat: Vec<Vec<Q>> = mats.iter().map(QMatrix::flatten).collect();
        let coords = Coordinates::new(n * n, &flat).map_err(|_| RepError::DependentGenerators)?;
        let mut structure = Vec::with_capacity(mats.len());
        for (i, a) in mats.iter().enumerate() {
            let mut row = Vec::with_capacity(mats.len());
            for (j, b) in mats.iter().enumerate() {
                let c = coords
                    .coords(&a.bracket(b).flatten())
                    .map_err(|_| RepError::NotClosed(i, j))?;
                row.push(c);
            }
            structure.push(row);
        }
        Ok(LieAlgebraSpec {
            name: name.into(),
            structure,
        })
    }

    /// su(n) on the basis E_jk - E_kj, i(E_jk + E_kj) (j < k), i(E_jj - E_{j+1,j+1}).
    pub fn su(n: usize) -> Self {
        let mats: Vec<QMatrix> = su_basis(n).iter().map(CMatrix::realify).collect();
        LieAlgebraSpec::from_matrices(format!("su{n}"), &mats).expect("su(n) basis is closed")
    }

    /// su(2) on the basis X1, X2, X3.
    pub fn su2() -> Self {
        let mats: Vec<QMatrix> = su2_basis().iter().map(CMatrix::realify).collect();
        LieAlgebraSpec::from_matrices("su2", &mats).expect("su(2) basis is closed")
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim(), other.dim());
        let d = a + b;
        let zero = vec![Q::from_integer(0.into()); d];
        let mut structure = vec![vec![zero.clone(); d]; d];
        for i in 0..a {
            for j in 0..a {
                structure[i][j][..a].clone_from_slice(&self.structure[i][j]);
            }
        }
        for i in 0..b {
            for j in 0..b {
                structure[a + i][a + j][a..].clone_from_slice(&other.structure[i][j]);
            }
        }
        LieAlgebraSpec {
            name: format!("{}+{}", self.name, other.name),
            structure,
        }
    }

    pub fn ad(&self, i: usize) -> QMatrix {
        let d = self.dim();
        let mut m = QMatrix::zeros(d, d);
        for j in 0..d {
            for k in 0..d {
                m[(k, j)] = self.structure[i][j][k].clone();
            }
        }
        m
    }

    pub fn killing(&self) -> QMatrix {
        let ads: Vec<QMatrix> = (0..self.dim()).map(|i| self.ad(i)).collect();
        let d = self.dim();
        let mut b = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                b[(i, j)] = ads[i].mul(&ads[j]).trace();
            }
        }
        b
    }
}

pub fn su_basis(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let mut re = QMatrix::unit(n, j, k);
            re = re.sub(&QMatrix::unit(n, k, j));
            out.push(CMatrix::real(re));
            let im = QMatrix::unit(n, j, k).add(&QMatrix::unit(n, k, j));
            out.push(CMatrix::new(QMatrix::zeros(n, n), im));
        }
    }
    for j in 0..n.saturating_sub(1) {
        let im = QMatrix::unit(n, j, j).sub(&QMatrix::unit(n, j + 1, j + 1));
        out.push(CMatrix::new(QMatrix::zeros(n, n), im));
    }
    out
}

/// Adjoint representation of a compact simple algebra, gram = -Killing form.
pub fn adjoint_rep(spec: &LieAlgebraSpec) -> Result<OrthRep, RepError> {
    let b = spec.killing();
    if rank(&b) != spec.dim() || spec.dim() == 0 {
        return Err(RepError::SingularKilling);
    }
    let gram = b.neg();
    if !is_positive_definite(&gram) {
        return Err(RepError::InvalidInput("algebra is not compact".into()));
    }
    let gens: Vec<QMatrix> = (0..spec.dim()).map(|i| spec.ad(i)).collect();
    let rep = OrthRep::new(
        format!("ad_{}", spec.name),
        gram,
        gens,
        json!({ "builder": "adjoint_rep", "algebra": spec.name }),
    )?;
    if commutant(&rep).dim() != 1 {
        return Err(RepError::NotSimple);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjoint_dimensions() {
        let a = adjoint_rep(&LieAlgebraSpec::su2()).unwrap();
        assert_eq!((a.n(), a.dim()), (3, 3));
        let a = adjoint_rep(&LieAlgebraSpec::su(3)).unwrap();
        assert_eq!((a.n(), a.dim()), (8, 8));
    }

    #[test]
    fn non_simple_rejected() {
        let s = LieAlgebraSpec::su2().direct_sum(&LieAlgebraSpec::su2());
        assert_eq!(adjoint_rep(&s).unwrap_err(), RepError::NotSimple);
        let abelian = LieAlgebraSpec {
            name: "t".into(),
            structure: vec![vec![vec![Q::from_integer(0.into())]]],
        };
        assert_eq!(adjoint_rep(&abelian).unwrap_err(), RepError::SingularKilling);
    }
}
