use num_traits::{One, Zero};

use crate::error::LorentzError;
use crate::exactq::{inverse, q, QMatrix, Q};

/// Basis p, e_1 … e_n, q of V = ℝp ⊕ E ⊕ ℝq with η(p, q) = 1 and η|_E = −G.
#[derive(Clone, Debug, PartialEq)]
pub struct MinkowskiFrame {
    n: usize,
    g: QMatrix,
    gram: QMatrix,
}

impl MinkowskiFrame {
    /// Frame over E with the positive definite form G.
    pub fn new(g: &QMatrix) -> Self {
        let n = g.rows();
        let mut gram = QMatrix::zeros(n + 2, n + 2);
        gram[(0, n + 1)] = Q::one();
        gram[(n + 1, 0)] = Q::one();
        gram.set_block(1, 1, &g.neg());
        MinkowskiFrame { n, g: g.clone(), gram }
    }

    pub fn standard(n: usize) -> Self {
        MinkowskiFrame::new(&QMatrix::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 2
    }

    /// Form on E (positive definite).
    pub fn euclidean_gram(&self) -> &QMatrix {
        &self.g
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn p(&self) -> usize {
        0
    }

    pub fn q(&self) -> usize {
        self.n + 1
    }

    /// Index of e_i in V.
    pub fn e(&self, i: usize) -> usize {
        1 + i
    }

    pub fn eta(&self, u: &[Q], v: &[Q]) -> Q {
        self.gram.form(u, v)
    }

    pub fn unit(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// Lifts a vector of E into V.
    pub fn lift(&self, x: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[1..=self.n].clone_from_slice(x);
        v
    }

    /// Matrix of u∧v acting by w ↦ u·η(v, w) − v·η(u, w).
    pub fn wedge(&self, u: &[Q], v: &[Q]) -> QMatrix {
        let d = self.dim();
        let gu = self.gram.mul_vec(u);
        let gv = self.gram.mul_vec(v);
        let mut m = QMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m[(i, j)] = &u[i] * &gv[j] - &v[i] * &gu[j];
            }
        }
        m
    }

    pub fn p_wedge_q(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim(), self.dim());
        m[(0, 0)] = q(1);
        m[(self.n + 1, self.n + 1)] = q(-1);
        m
    }

    /// p∧X for X ∈ E given in E-coordinates.
    pub fn p_wedge(&self, x: &[Q]) -> QMatrix {
        let n = self.n;
        let gx = self.g.mul_vec(x);
        let mut m = QMatrix::zeros(n + 2, n + 2);
        for i in 0..n {
            m[(0, 1 + i)] = -gx[i].clone();
            m[(1 + i, n + 1)] = -x[i].clone();
        }
        m
    }

    /// Embeds A ∈ so(E, G) in the E∧E block.
    pub fn embed(&self, a: &QMatrix) -> QMatrix {
        let mut m = QMatrix::zeros(self.dim(), self.dim());
        m.set_block(1, 1, a);
        m
    }

    /// `a·p∧q + A + p∧X`.
    pub fn element(&self, a: &Q, big_a: &QMatrix, x: &[Q]) -> QMatrix {
        self.p_wedge_q().scale(a).add(&self.embed(big_a)).add(&self.p_wedge(x))
    }

    /// Splits an element of so(V)_{ℝp} into (a, A, X).
    pub fn parts(&self, m: &QMatrix) -> Result<(Q, QMatrix, Vec<Q>), LorentzError> {
        let n = self.n;
        if (1..n + 2).any(|i| !m[(i, 0)].is_zero()) {
            return Err(LorentzError::NotParabolic);
        }
        let a = m[(0, 0)].clone();
        let big_a = m.block(1, 1, n, n);
        let x: Vec<Q> = (0..n).map(|i| -m[(1 + i, n + 1)].clone()).collect();
        if self.element(&a, &big_a, &x) != *m {
            return Err(LorentzError::NotParabolic);
        }
        Ok((a, big_a, x))
    }

    /// G⁻¹, used to raise covectors on E.
    pub fn raise(&self, l: &[Q]) -> Vec<Q> {
        inverse(&self.g).expect("gram is nondegenerate").mul_vec(l)
    }
}

/// Both sides of η(θu, v) = ½ η∧η(θ, u∧v), with η∧η(θ₁, θ₂) = tr(θ₁∘θ₂).
pub fn wedge_metric_pairing(frame: &MinkowskiFrame, theta: &QMatrix, u: &[Q], v: &[Q]) -> (Q, Q) {
    let lhs = frame.eta(&theta.mul_vec(u), v);
    let rhs = theta.mul(&frame.wedge(u, v)).trace() / q(2);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_gram() {
        let f = MinkowskiFrame::standard(2);
        let (p, qq) = (f.unit(0), f.unit(3));
        assert_eq!(f.eta(&p, &qq), q(1));
        assert_eq!(f.eta(&p, &p), q(0));
        assert_eq!(f.eta(&f.unit(1), &f.unit(1)), q(-1));
    }

    #[test]
    fn wedge_matches_named_elements() {
        let f = MinkowskiFrame::standard(3);
        assert_eq!(f.wedge(&f.unit(0), &f.unit(4)), f.p_wedge_q());
        let x = vec![q(1), q(-2), q(3)];
        assert_eq!(f.wedge(&f.unit(0), &f.lift(&x)), f.p_wedge(&x));
        let (pq, _, _) = f.parts(&f.p_wedge_q()).unwrap();
        assert_eq!(pq, q(1));
    }

    #[test]
    fn pairing_on_p_wedge_q() {
        let f = MinkowskiFrame::standard(1);
        let (l, r) = wedge_metric_pairing(&f, &f.p_wedge_q(), &f.unit(0), &f.unit(2));
        assert_eq!((l.clone(), r), (q(1), q(1)));
        let z = QMatrix::zeros(3, 3);
        assert_eq!(wedge_metric_pairing(&f, &z, &f.unit(0), &f.unit(2)).0, q(0));
    }

    #[test]
    fn non_parabolic_rejected() {
        let f = MinkowskiFrame::standard(1);
        let m = f.wedge(&f.unit(1), &f.unit(2));
        assert_eq!(f.parts(&m).unwrap_err(), LorentzError::NotParabolic);
    }
}
