use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::RepError;
use crate::exactq::{nullspace, q, QMatrix, Q};

use super::rep::{restrict_matrices, OrthRep};

/// Complex matrix stored as a pair of rational matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    pub re: QMatrix,
    pub im: QMatrix,
}

impl CMatrix {
    pub fn new(re: QMatrix, im: QMatrix) -> Self {
        assert_eq!((re.rows(), re.cols()), (im.rows(), im.cols()));
        CMatrix { re, im }
    }

    pub fn real(re: QMatrix) -> Self {
        let im = QMatrix::zeros(re.rows(), re.cols());
        CMatrix { re, im }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix::real(QMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        CMatrix::real(QMatrix::identity(n))
    }

    /// Entries given as (re, im) integer pairs.
    pub fn from_pairs(rows: &[&[(i64, i64)]]) -> Self {
        let re: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|p| q(p.0)).collect()).collect();
        let im: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|p| q(p.1)).collect()).collect();
        CMatrix::new(
            QMatrix::from_rows(re).expect("rectangular"),
            QMatrix::from_rows(im).expect("rectangular"),
        )
    }

    pub fn rows(&self) -> usize {
        self.re.rows()
    }

    pub fn cols(&self) -> usize {
        self.re.cols()
    }

    pub fn mul(&self, o: &Self) -> Self {
        CMatrix {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        CMatrix {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CMatrix {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn conj(&self) -> Self {
        CMatrix {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        CMatrix {
            re: self.re.transpose(),
            im: self.im.transpose().neg(),
        }
    }

    pub fn kron(&self, o: &Self) -> Self {
        CMatrix {
            re: self.re.kron(&o.re).sub(&self.im.kron(&o.im)),
            im: self.re.kron(&o.im).add(&self.im.kron(&o.re)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Real matrix of the complex-linear map in (x, y) coordinates.
    pub fn realify(&self) -> QMatrix {
        let (r, c) = (self.rows(), self.cols());
        let mut m = QMatrix::zeros(2 * r, 2 * c);
        m.set_block(0, 0, &self.re);
        m.set_block(0, c, &self.im.neg());
        m.set_block(r, 0, &self.im);
        m.set_block(r, c, &self.re);
        m
    }

    /// Real matrix of the antilinear map `z ↦ self·conj(z)`.
    pub fn realify_antilinear(&self) -> QMatrix {
        let (r, c) = (self.rows(), self.cols());
        let mut m = QMatrix::zeros(2 * r, 2 * c);
        m.set_block(0, 0, &self.re);
        m.set_block(0, c, &self.im);
        m.set_block(r, 0, &self.im);
        m.set_block(r, c, &self.re.neg());
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructureKind {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl StructureKind {
    pub fn tensor(self, other: StructureKind) -> StructureKind {
        use StructureKind::*;
        match (self, other) {
            (NotSelfDual, _) | (_, NotSelfDual) => NotSelfDual,
            (a, b) if a == b => Orthogonal,
            _ => Symplectic,
        }
    }
}

/// Complex representation of a compact algebra with its invariant diagonal
/// Hermitian form and, when self-dual, the antilinear structure map
/// `J(z) = M·conj(z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRep {
    name: String,
    generators: Vec<CMatrix>,
    hermitian: Vec<Q>,
    kind: StructureKind,
    structure: Option<CMatrix>,
}

impl ComplexRep {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<CMatrix>,
        hermitian: Vec<Q>,
        kind: StructureKind,
        structure: Option<CMatrix>,
    ) -> Result<Self, RepError> {
        let d = hermitian.len();
        if hermitian.iter().any(|h| *h <= Q::zero()) {
            return Err(RepError::InvalidInput("hermitian gram must be positive".into()));
        }
        let h = CMatrix::real(QMatrix::diagonal(&hermitian));
        for (i, a) in generators.iter().enumerate() {
            if a.rows() != d || a.cols() != d {
                return Err(RepError::BadShape(i));
            }
            if !h.mul(a).add(&a.adjoint().mul(&h)).is_zero() {
                return Err(RepError::NotSkew(i));
            }
        }
        match (kind, &structure) {
            (StructureKind::NotSelfDual, _) => {}
            (_, None) => return Err(RepError::StructureMissing),
            (_, Some(m)) => {
                if m.rows() != d || m.cols() != d {
                    return Err(RepError::BadStructure("shape".into()));
                }
                let sign = if kind == StructureKind::Orthogonal { q(1) } else { q(-1) };
                let sq = m.mul(&m.conj());
                if sq != CMatrix::real(QMatrix::identity(d).scale(&sign)) {
                    return Err(RepError::BadStructure("J squared is not ±1".into()));
                }
                if m.adjoint().mul(&h).mul(m) != h {
                    return Err(RepError::BadStructure("J is not antiunitary".into()));
                }
                for a in &generators {
                    if m.mul(&a.conj()) != a.mul(m) {
                        return Err(RepError::BadStructure("J does not commute with the action".into()));
                    }
                }
            }
        }
        let structure = if kind == StructureKind::NotSelfDual {
            None
        } else {
            structure
        };
        Ok(ComplexRep {
            name: name.into(),
            generators,
            hermitian,
            kind,
            structure,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.hermitian.len()
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    pub fn hermitian(&self) -> &[Q] {
        &self.hermitian
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn structure(&self) -> Option<&CMatrix> {
        self.structure.as_ref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The one-dimensional trivial representation with `J = conj`.
    pub fn trivial() -> Self {
        ComplexRep::new(
            "trivial",
            vec![],
            vec![q(1)],
            StructureKind::Orthogonal,
            Some(CMatrix::identity(1)),
        )
        .expect("trivial rep is valid")
    }

    /// Complex tensor product; the algebra is the direct sum of the factors.
    pub fn tensor(&self, other: &ComplexRep) -> Result<ComplexRep, RepError> {
        let (ia, ib) = (CMatrix::identity(self.dim()), CMatrix::identity(other.dim()));
        let mut gens: Vec<CMatrix> = self.generators.iter().map(|a| a.kron(&ib)).collect();
        gens.extend(other.generators.iter().map(|b| ia.kron(b)));
        let herm = self
            .hermitian
            .iter()
            .flat_map(|x| other.hermitian.iter().map(move |y| x * y))
            .collect();
        let kind = self.kind.tensor(other.kind);
        let structure = match (&self.structure, &other.structure) {
            (Some(a), Some(b)) => Some(a.kron(b)),
            _ => None,
        };
        ComplexRep::new(format!("{}_x_{}", self.name, other.name), gens, herm, kind, structure)
    }

    /// Complex form of a real rep commuting with the complex structure
    /// `[[0,-I],[I,0]]` in (x, y) layout, with optional antilinear structure
    /// given as a real matrix of the form `[[M,0],[0,-M]]`.
    pub fn from_real(
        rep: &OrthRep,
        kind: StructureKind,
        structure_real: Option<&QMatrix>,
    ) -> Result<ComplexRep, RepError> {
        let n = rep.n();
        if !n.is_multiple_of(2) {
            return Err(RepError::InvalidInput("odd real dimension".into()));
        }
        let m = n / 2;
        let mut gens = Vec::with_capacity(rep.dim());
        for g in rep.generators() {
            let c = CMatrix::new(g.block(0, 0, m, m), g.block(m, 0, m, m));
            if c.realify() != *g {
                return Err(RepError::InvalidInput("generator is not complex-linear".into()));
            }
            gens.push(c);
        }
        let herm: Vec<Q> = (0..m).map(|i| rep.gram()[(i, i)].clone()).collect();
        if QMatrix::diagonal(&[herm.clone(), herm.clone()].concat()) != *rep.gram() {
            return Err(RepError::InvalidInput("gram is not a diagonal hermitian double".into()));
        }
        let structure = match structure_real {
            None => None,
            Some(s) => {
                let c = CMatrix::new(s.block(0, 0, m, m), s.block(m, 0, m, m));
                if c.realify_antilinear() != *s {
                    return Err(RepError::BadStructure("structure is not antilinear".into()));
                }
                Some(c)
            }
        };
        ComplexRep::new(rep.name(), gens, herm, kind, structure)
    }
}

fn binomial(n: usize, k: usize) -> Q {
    let mut r = Q::one();
    for i in 0..k {
        r = r * q((n - i) as i64) / q((i + 1) as i64);
    }
    r
}

/// The basis X1 = diag(i, -i), X2 = [[0,1],[-1,0]], X3 = [[0,i],[i,0]] of su(2).
pub fn su2_basis() -> Vec<CMatrix> {
    vec![
        CMatrix::from_pairs(&[&[(0, 1), (0, 0)], &[(0, 0), (0, -1)]]),
        CMatrix::from_pairs(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]]),
        CMatrix::from_pairs(&[&[(0, 0), (0, 1)], &[(0, 1), (0, 0)]]),
    ]
}

/// Action of a 2×2 complex matrix on binomially scaled monomials of degree k.
fn sym_power_action(a: &CMatrix, k: usize) -> CMatrix {
    let d = k + 1;
    let mut out = CMatrix::zeros(d, d);
    let ent = |m: &QMatrix, i: usize, j: usize| m[(i, j)].clone();
    for j in 0..d {
        let kj = q((k - j) as i64);
        let jj = q(j as i64);
        out.re[(j, j)] = &kj * ent(&a.re, 0, 0) + &jj * ent(&a.re, 1, 1);
        out.im[(j, j)] = &kj * ent(&a.im, 0, 0) + &jj * ent(&a.im, 1, 1);
        if j < k {
            let c = q((j + 1) as i64);
            out.re[(j + 1, j)] = &c * ent(&a.re, 1, 0);
            out.im[(j + 1, j)] = &c * ent(&a.im, 1, 0);
        }
        if j > 0 {
            let c = q((k - j + 1) as i64);
            out.re[(j - 1, j)] = &c * ent(&a.re, 0, 1);
            out.im[(j - 1, j)] = &c * ent(&a.im, 0, 1);
        }
    }
    out
}

/// Irreducible complex su(2) representation of highest weight k.
pub fn su2_irrep(k: usize) -> ComplexRep {
    let d = k + 1;
    let gens = su2_basis().iter().map(|a| sym_power_action(a, k)).collect();
    let herm = (0..d).map(|j| binomial(k, j)).collect();
    let mut m = QMatrix::zeros(d, d);
    for j in 0..d {
        m[(k - j, j)] = if j % 2 == 0 { q(1) } else { q(-1) };
    }
    let kind = if k.is_multiple_of(2) {
        StructureKind::Orthogonal
    } else {
        StructureKind::Symplectic
    };
    ComplexRep::new(format!("su2_irrep_{k}"), gens, herm, kind, Some(CMatrix::real(m))).expect("su(2) irreps are valid")
}

/// Underlying real representation. Orthogonal kind restricts to the fixed
/// space of J, the other kinds keep the full realification.
pub fn realify(c: &ComplexRep) -> Result<OrthRep, RepError> {
    let d = c.dim();
    let herm2: Vec<Q> = [c.hermitian.clone(), c.hermitian.clone()].concat();
    let gram = QMatrix::diagonal(&herm2);
    let gens: Vec<QMatrix> = c.generators.iter().map(CMatrix::realify).collect();
    let prov = json!({ "builder": "realify", "source": c.name, "kind": c.kind });
    match c.kind {
        StructureKind::Orthogonal => {
            let m = c.structure.as_ref().ok_or(RepError::StructureMissing)?;
            let fixed = m.realify_antilinear().sub(&QMatrix::identity(2 * d));
            let space = nullspace(&fixed);
            if space.dim() != d {
                return Err(RepError::BadStructure("fixed space has the wrong dimension".into()));
            }
            let (g, r) = restrict_matrices(&gram, &gens, &space.basis)?;
            OrthRep::new(c.name.clone(), g, r, prov)
        }
        _ => OrthRep::new(c.name.clone(), gram, gens, prov),
    }
}

/// Provenance record for a complex construction.
pub(crate) fn complex_provenance(builder: &str, c: &ComplexRep) -> Value {
    json!({ "builder": builder, "source": c.name, "kind": c.kind })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_irreps_are_valid_and_typed() {
        for k in 0..6 {
            let r = su2_irrep(k);
            assert_eq!(r.dim(), k + 1);
            let expect = if k % 2 == 0 {
                StructureKind::Orthogonal
            } else {
                StructureKind::Symplectic
            };
            assert_eq!(r.kind(), expect);
        }
    }

    #[test]
    fn realify_dimensions() {
        assert_eq!(realify(&su2_irrep(1)).unwrap().n(), 4);
        assert_eq!(realify(&su2_irrep(2)).unwrap().n(), 3);
        assert_eq!(realify(&su2_irrep(3)).unwrap().n(), 8);
        assert_eq!(realify(&su2_irrep(4)).unwrap().n(), 5);
    }

    #[test]
    fn u1_realifies_to_rotation() {
        let c = ComplexRep::new(
            "u1",
            vec![CMatrix::from_pairs(&[&[(0, 1)]])],
            vec![q(1)],
            StructureKind::NotSelfDual,
            None,
        )
        .unwrap();
        let r = realify(&c).unwrap();
        assert_eq!(r.generators()[0], QMatrix::from_i64(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn orthogonal_without_structure_is_rejected() {
        let err = ComplexRep::new("x", vec![], vec![q(1)], StructureKind::Orthogonal, None);
        assert_eq!(err.unwrap_err(), RepError::StructureMissing);
    }

    #[test]
    fn symplectic_square_is_orthogonal() {
        let t = su2_irrep(1).tensor(&su2_irrep(1)).unwrap();
        assert_eq!(t.kind(), StructureKind::Orthogonal);
        let r = realify(&t).unwrap();
        assert_eq!((r.n(), r.dim()), (4, 6));
    }
}
