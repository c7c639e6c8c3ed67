use holocurv::bianchi::{curvature_space, weak_curvature_space, Verdict};
use holocurv::error::LorentzError;
use holocurv::exactq::{q, QMatrix, Q};
use holocurv::lorentz::*;
use holocurv::repkit::{catalog, direct_sum_rep, stabilizer::unitary, standard_so, trivial_rep, OrthRep};

fn with_line(h: &OrthRep) -> OrthRep {
    direct_sum_rep(std::slice::from_ref(h), 1).unwrap()
}

fn grid() -> Vec<(OrthRep, AlgebraType, TypeParams)> {
    let so2 = standard_so(2);
    let u1 = with_line(&so2);
    let u2 = unitary(2).unwrap();
    let u2l = with_line(&u2);
    let phi = || TypeParams {
        phi: Some(vec![q(1)]),
        ..Default::default()
    };
    let psi = || TypeParams {
        psi: Some(QMatrix::from_i64(&[&[1]])),
        e0_dim: 1,
        ..Default::default()
    };
    let mut out = Vec::new();
    for h in [
        trivial_rep(1),
        trivial_rep(2),
        so2.clone(),
        u1.clone(),
        standard_so(3),
        u2.clone(),
    ] {
        out.push((h.clone(), AlgebraType::One, TypeParams::default()));
        out.push((h, AlgebraType::Two, TypeParams::default()));
    }
    out.push((so2, AlgebraType::Three, phi()));
    out.push((u1.clone(), AlgebraType::Three, phi()));
    out.push((u2, AlgebraType::Three, phi()));
    out.push((u1, AlgebraType::Four, psi()));
    out.push((u2l, AlgebraType::Four, psi()));
    out
}

#[test]
fn dimension_formula_on_grid() {
    for (h, ty, p) in grid() {
        let r = theorem3_verify(&h, ty, p).unwrap();
        assert!(r.thm3_ok, "{} type {}: {:?}", h.name(), ty, r);
    }
}

#[test]
fn dimension_formula_examples() {
    let so2 = standard_so(2);
    let r = theorem3_verify(&so2, AlgebraType::Two, TypeParams::default()).unwrap();
    assert_eq!((r.thm3_lhs, r.thm3_rhs), (6, 6));
    let r = theorem3_verify(&so2, AlgebraType::One, TypeParams::default()).unwrap();
    assert_eq!(r.thm3_lhs, 9);
    let r = theorem3_verify(&trivial_rep(2), AlgebraType::Two, TypeParams::default()).unwrap();
    assert_eq!(r.thm3_lhs, 3);
}

#[test]
fn type_dimensions_and_errors() {
    let g = build_type_algebra(AlgebraType::One, &trivial_rep(1), TypeParams::default()).unwrap();
    assert_eq!(g.dim(), 2);
    let p = TypeParams {
        phi: Some(vec![q(1)]),
        ..Default::default()
    };
    let g = build_type_algebra(AlgebraType::Three, &standard_so(2), p.clone()).unwrap();
    assert_eq!(g.dim(), 3);
    let psi = TypeParams {
        psi: Some(QMatrix::from_i64(&[&[1]])),
        e0_dim: 1,
        ..Default::default()
    };
    let g = build_type_algebra(AlgebraType::Four, &with_line(&standard_so(2)), psi).unwrap();
    assert_eq!(g.dim(), 3);
    let err = build_type_algebra(AlgebraType::Three, &standard_so(3), p).unwrap_err();
    assert_eq!(err, LorentzError::TrivialCenter);
    let zero = TypeParams {
        phi: Some(vec![q(0)]),
        ..Default::default()
    };
    let err = build_type_algebra(AlgebraType::Three, &standard_so(2), zero).unwrap_err();
    assert_eq!(err, LorentzError::PhiZero);
    let bad = TypeParams {
        psi: Some(QMatrix::from_i64(&[&[0]])),
        e0_dim: 1,
        ..Default::default()
    };
    let err = build_type_algebra(AlgebraType::Four, &with_line(&standard_so(2)), bad).unwrap_err();
    assert_eq!(err, LorentzError::NotSurjective);
}

#[test]
fn orthogonal_parts() {
    let so3 = standard_so(3);
    let g = build_type_algebra(AlgebraType::One, &so3, TypeParams::default()).unwrap();
    assert_eq!(orthogonal_part(&g).unwrap().dim(), 3);
    let u2 = unitary(2).unwrap();
    let p = TypeParams {
        phi: Some(vec![q(1)]),
        ..Default::default()
    };
    let g = build_type_algebra(AlgebraType::Three, &u2, p).unwrap();
    assert_eq!(orthogonal_part(&g).unwrap().dim(), 4);
    let f = MinkowskiFrame::standard(2);
    let raw = LorentzAlgebra::raw(f.clone(), vec![f.p_wedge_q()]).unwrap();
    assert_eq!(orthogonal_part(&raw).unwrap().dim(), 0);
}

#[test]
fn canonical_memberships() {
    let g = build_type_algebra(AlgebraType::Two, &trivial_rep(2), TypeParams::default()).unwrap();
    let r = canonical_curvature(&CanonicalKind::T(QMatrix::identity(2)), &g).unwrap();
    assert!(curvature_space(&g.rep).contains(&r));
    let err = canonical_curvature(&CanonicalKind::Lambda(q(1)), &g).unwrap_err();
    assert!(matches!(err, LorentzError::KindTypeMismatch { .. }));

    let g1 = build_type_algebra(AlgebraType::One, &standard_so(2), TypeParams::default()).unwrap();
    let r = canonical_curvature(&CanonicalKind::Lambda(q(0)), &g1).unwrap();
    assert!(r.iter().all(|x| *x == q(0)));

    let u2 = unitary(2).unwrap();
    let g = build_type_algebra(AlgebraType::Two, &u2, TypeParams::default()).unwrap();
    let space = curvature_space(&g.rep);
    for p in &weak_curvature_space(&u2).space.basis {
        let r = canonical_curvature(&CanonicalKind::P(p.clone()), &g).unwrap();
        assert!(space.contains(&r));
    }
}

#[test]
fn decomposition_round_trips() {
    for (h, ty, p) in grid() {
        let g = build_type_algebra(ty, &h, p).unwrap();
        for r in &curvature_space(&g.rep).space.basis {
            let c = decompose_curvature(r, &g).unwrap();
            assert!(c.all_ok(), "{} type {}: {:?}", h.name(), ty, c.failed());
        }
    }
    let g = build_type_algebra(AlgebraType::Two, &trivial_rep(2), TypeParams::default()).unwrap();
    let t = QMatrix::from_i64(&[&[1, 2], &[2, 5]]);
    let r = canonical_curvature(&CanonicalKind::T(t.clone()), &g).unwrap();
    let c = decompose_curvature(&r, &g).unwrap();
    assert_eq!(c.t, t);
    assert!(c.p.iter().all(|x| *x == q(0)));
    let g1 = build_type_algebra(AlgebraType::One, &standard_so(2), TypeParams::default()).unwrap();
    let r = canonical_curvature(&CanonicalKind::Lambda(q(3)), &g1).unwrap();
    assert_eq!(decompose_curvature(&r, &g1).unwrap().lambda, q(3));
}

#[test]
fn berger_matches_weak_berger_of_orthogonal_part() {
    for (h, ty, p) in grid() {
        let g = build_type_algebra(ty, &h, p).unwrap();
        let r = corollary1_crosscheck(&g).unwrap();
        assert!(r.agree, "{} type {}", h.name(), ty);
    }
    for name in ["pi_H_10_sp2_t", "pi_R_6_so3"] {
        let h = catalog::build(name).unwrap();
        let g = build_type_algebra(AlgebraType::Two, &h, TypeParams::default()).unwrap();
        let r = corollary1_crosscheck(&g).unwrap();
        assert_eq!((r.berger, r.weak_berger), (Verdict::False, Verdict::False), "{name}");
    }
}

#[test]
fn pairing_identity() {
    let f = MinkowskiFrame::standard(3);
    let mut seed = 7i64;
    let mut next = || {
        seed = (seed * 1103515245 + 12345) % 2147483648;
        Q::new((seed % 11 - 5).into(), ((seed / 11) % 4 + 1).into())
    };
    for _ in 0..10 {
        let a: Vec<Q> = (0..5).map(|_| next()).collect();
        let b: Vec<Q> = (0..5).map(|_| next()).collect();
        let theta = f.wedge(&a, &b);
        let u: Vec<Q> = (0..5).map(|_| next()).collect();
        let v: Vec<Q> = (0..5).map(|_| next()).collect();
        let (l, r) = wedge_metric_pairing(&f, &theta, &u, &v);
        assert_eq!(l, r);
    }
}
