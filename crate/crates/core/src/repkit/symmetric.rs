use num_traits::{One, Zero};
use serde_json::json;

use crate::error::RepError;
use crate::exactq::{nullspace, q, QMatrix, Q};

use super::rep::{restrict_matrices, OrthRep};
use super::stabilizer::{elementary_skew, so_pairs};

fn monomials(k: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in (0..=k).rev() {
        for b in (0..=k - a).rev() {
            out.push([a, b, k - a - b]);
        }
    }
    out
}

fn factorial(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, i| acc * q(i as i64))
}

/// so(3) acting on harmonic polynomials of degree k in three variables,
/// with the invariant form ⟨x^α, x^β⟩ = α! δ_{αβ}.
pub fn so3_sym_power(k: usize) -> Result<OrthRep, RepError> {
    if k == 0 {
        return Err(RepError::InvalidInput("degree must be at least 1".into()));
    }
    let mons = monomials(k);
    let index = |e: &[usize; 3]| mons.iter().position(|m| m == e).expect("monomial of degree k");
    let dim = mons.len();

    // Laplacian from degree k to degree k-2.
    let lower = if k >= 2 { monomials(k - 2) } else { Vec::new() };
    let mut lap = QMatrix::zeros(lower.len(), dim);
    for (c, m) in mons.iter().enumerate() {
        for i in 0..3 {
            if m[i] >= 2 {
                let mut t = *m;
                t[i] -= 2;
                let r = lower.iter().position(|x| *x == t).expect("lower monomial");
                lap[(r, c)] += q((m[i] * (m[i] - 1)) as i64);
            }
        }
    }
    let harmonic = if lower.is_empty() {
        crate::exactq::SolutionSpace::full(dim)
    } else {
        nullspace(&lap)
    };

    let gram = QMatrix::diagonal(
        &mons
            .iter()
            .map(|m| factorial(m[0]) * factorial(m[1]) * factorial(m[2]))
            .collect::<Vec<_>>(),
    );

    // Derivation action of x_i ↦ Σ_j L_ji x_j.
    let action = |l: &QMatrix| {
        let mut a = QMatrix::zeros(dim, dim);
        for (c, m) in mons.iter().enumerate() {
            for i in 0..3 {
                if m[i] == 0 {
                    continue;
                }
                for j in 0..3 {
                    let lji = &l[(j, i)];
                    if lji.is_zero() {
                        continue;
                    }
                    let mut t = *m;
                    t[i] -= 1;
                    t[j] += 1;
                    a[(index(&t), c)] += q(m[i] as i64) * lji;
                }
            }
        }
        a
    };
    let gens: Vec<QMatrix> = so_pairs(3)
        .iter()
        .map(|&(a, b)| action(&elementary_skew(3, a, b)))
        .collect();
    let (g, r) = restrict_matrices(&gram, &gens, &harmonic.basis)?;
    OrthRep::new(
        format!("so3_sym_{k}"),
        g,
        r,
        json!({ "builder": "so3_sym_power", "k": k }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        for k in 1..=4 {
            let r = so3_sym_power(k).unwrap();
            assert_eq!(r.n(), 2 * k + 1);
            assert_eq!(r.dim(), 3);
            assert!(r.is_positive_definite());
        }
    }
}
