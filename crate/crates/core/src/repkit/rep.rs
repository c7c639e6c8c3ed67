use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{ExactError, RepError};
use crate::exactq::{combine, rank, Coordinates, QMatrix, Reducer, Q};

/// A Lie subalgebra h ⊂ so(E, gram) given by a basis of matrices.
///
/// Construction checks gram symmetry and nondegeneracy, η-skewness of each
/// generator (`gram·C + Cᵀ·gram = 0`), linear independence, and bracket
/// closure. Values are immutable afterwards.
#[derive(Clone, Debug)]
pub struct OrthRep {
    name: String,
    gram: QMatrix,
    generators: Vec<QMatrix>,
    provenance: Value,
    coords: OnceLock<Coordinates>,
}

impl PartialEq for OrthRep {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.gram == other.gram
            && self.generators == other.generators
            && self.provenance == other.provenance
    }
}

impl OrthRep {
    pub fn new(
        name: impl Into<String>,
        gram: QMatrix,
        generators: Vec<QMatrix>,
        provenance: Value,
    ) -> Result<Self, RepError> {
        let rep = OrthRep {
            name: name.into(),
            gram,
            generators,
            provenance,
            coords: OnceLock::new(),
        };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<(), RepError> {
        let n = self.gram.rows();
        if !self.gram.is_symmetric() {
            return Err(RepError::GramNotSymmetric);
        }
        if rank(&self.gram) != n {
            return Err(RepError::GramDegenerate);
        }
        for (i, c) in self.generators.iter().enumerate() {
            if c.rows() != n || c.cols() != n {
                return Err(RepError::BadShape(i));
            }
            if !self.gram.mul(c).is_antisymmetric() {
                return Err(RepError::NotSkew(i));
            }
        }
        let flat: Vec<Vec<Q>> = self.generators.iter().map(QMatrix::flatten).collect();
        let span = Reducer::new(n * n, &flat);
        if span.rank() != self.generators.len() {
            return Err(RepError::DependentGenerators);
        }
        for a in 0..self.generators.len() {
            for b in a + 1..self.generators.len() {
                let br = self.generators[a].bracket(&self.generators[b]);
                if !span.contains(&br.flatten()) {
                    return Err(RepError::NotClosed(a, b));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dimension of E.
    pub fn n(&self) -> usize {
        self.gram.rows()
    }

    /// Dimension of h.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.generators
    }

    pub fn provenance(&self) -> &Value {
        &self.provenance
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_provenance(mut self, p: Value) -> Self {
        self.provenance = p;
        self
    }

    /// Same algebra with a permuted and rescaled generator list.
    pub fn with_generators(&self, generators: Vec<QMatrix>) -> Result<Self, RepError> {
        OrthRep::new(
            self.name.clone(),
            self.gram.clone(),
            generators,
            self.provenance.clone(),
        )
    }

    fn coordinates(&self) -> &Coordinates {
        self.coords.get_or_init(|| {
            let flat: Vec<Vec<Q>> = self.generators.iter().map(QMatrix::flatten).collect();
            Coordinates::new(self.n() * self.n(), &flat).expect("generators are independent")
        })
    }

    /// Coordinates of a matrix with respect to the generators.
    pub fn coords_of(&self, m: &QMatrix) -> Result<Vec<Q>, ExactError> {
        self.coordinates().coords(&m.flatten())
    }

    pub fn contains(&self, m: &QMatrix) -> bool {
        self.coords_of(m).is_ok()
    }

    /// `Σ x_α C^α`.
    pub fn element(&self, x: &[Q]) -> QMatrix {
        assert_eq!(x.len(), self.dim());
        if self.generators.is_empty() {
            return QMatrix::zeros(self.n(), self.n());
        }
        combine(x, &self.generators)
    }

    /// η(u, v) with the stored gram.
    pub fn eta(&self, u: &[Q], v: &[Q]) -> Q {
        self.gram.form(u, v)
    }

    /// Positive definiteness by Sylvester's criterion.
    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(&self.gram)
    }

    /// Matrices of the generators restricted to the invariant subspace with
    /// the given basis, together with the induced gram `Bᵀ G B`.
    pub fn restrict_to(&self, basis: &[Vec<Q>]) -> Result<(QMatrix, Vec<QMatrix>), RepError> {
        restrict_matrices(&self.gram, &self.generators, basis)
    }

    pub fn to_json(&self) -> RepJson {
        RepJson {
            name: self.name.clone(),
            n: self.n(),
            gram: self.gram.to_strings(),
            generators: self.generators.iter().map(QMatrix::to_strings).collect(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn from_json(j: &RepJson) -> Result<Self, RepError> {
        let gram = if j.n == 0 {
            QMatrix::zeros(0, 0)
        } else {
            QMatrix::from_strings(&j.gram)?
        };
        if gram.rows() != j.n || gram.cols() != j.n {
            return Err(RepError::InvalidInput(format!("gram is not {}x{}", j.n, j.n)));
        }
        let generators = j
            .generators
            .iter()
            .map(|g| {
                if j.n == 0 {
                    Ok(QMatrix::zeros(0, 0))
                } else {
                    QMatrix::from_strings(g)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        OrthRep::new(j.name.clone(), gram, generators, j.provenance.clone())
    }

    /// Compact canonical JSON; stable across runs.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("rep JSON serializes")
    }
}

/// Wire format of a representation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepJson {
    pub name: String,
    pub n: usize,
    pub gram: Vec<Vec<String>>,
    pub generators: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub provenance: Value,
}

pub fn is_positive_definite(g: &QMatrix) -> bool {
    // Leading principal minors via fraction-exact LDLᵀ.
    let n = g.rows();
    let mut a = g.clone();
    for k in 0..n {
        let d = a[(k, k)].clone();
        if d <= Q::zero() {
            return false;
        }
        for i in k + 1..n {
            let f = &a[(i, k)] / &d;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &a[(k, j)] * &f;
                a[(i, j)] -= v;
            }
        }
    }
    true
}

pub(crate) fn restrict_matrices(
    gram: &QMatrix,
    gens: &[QMatrix],
    basis: &[Vec<Q>],
) -> Result<(QMatrix, Vec<QMatrix>), RepError> {
    let n = gram.rows();
    let m = basis.len();
    let coords =
        Coordinates::new(n, basis).map_err(|_| RepError::InvalidInput("subspace basis is dependent".into()))?;
    let b = QMatrix::from_columns(n, basis);
    let new_gram = b.transpose().mul(gram).mul(&b);
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let mut r = QMatrix::zeros(m, m);
        for (j, v) in basis.iter().enumerate() {
            let img = g.mul_vec(v);
            let c = coords.coords(&img).map_err(|_| RepError::NotInvariant)?;
            for (i, x) in c.into_iter().enumerate() {
                r[(i, j)] = x;
            }
        }
        out.push(r);
    }
    Ok((new_gram, out))
}

/// Basis of so(E, gram): `G⁻¹ S` for elementary antisymmetric S.
pub fn skew_basis(gram: &QMatrix) -> Result<Vec<QMatrix>, ExactError> {
    let n = gram.rows();
    let ginv = crate::exactq::inverse(gram)?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let s = QMatrix::unit(n, i, j).sub(&QMatrix::unit(n, j, i));
            out.push(ginv.mul(&s));
        }
    }
    Ok(out)
}
