use holocurv::bianchi::*;
use holocurv::exactq::Q;
use holocurv::repkit::{catalog, direct_sum_rep, stabilizer::unitary, standard_so};

#[test]
fn sp2_and_sp2_with_center() {
    let (r, _, _) = weak_berger_check(&catalog::build("pi_H_10_sp2").unwrap());
    assert_eq!((r.dim_p, r.dim_lp, r.verdict), (40, 10, Verdict::True));
    let (r, _, _) = weak_berger_check(&catalog::build("pi_H_10_sp2_t").unwrap());
    assert_eq!((r.dim_h, r.dim_p, r.dim_lp, r.verdict), (11, 40, 10, Verdict::False));
}

#[test]
fn vanishing_spaces() {
    for name in ["pi_R_6_so3", "pi_C_3_so3", "pi_C_3_so3_t", "pi_R_8_so3"] {
        let (r, _, _) = weak_berger_check(&catalog::build(name).unwrap());
        assert_eq!(r.dim_p, 0, "{name}");
        assert_eq!(r.verdict, Verdict::False, "{name}");
    }
}

#[test]
fn table_verdicts_match_columns() {
    for e in catalog::entries() {
        let h = e.build().unwrap();
        let (r, b, lp) = weak_berger_check(&h);
        assert_eq!(r.verdict == Verdict::True, e.expected_weak_berger(), "{}", e.name);
        for p in &b.space.basis {
            assert!(weak_residual_zero(&h, p), "{}", e.name);
        }
        assert!(lp_is_ideal(&h, &lp), "{}", e.name);
    }
}

#[test]
fn so_n_weak_dimension_oracle() {
    // Unknowns minus independent equations: n·C(n,2) − C(n,3).
    for n in 3..=8usize {
        let b = weak_curvature_space(&standard_so(n));
        let c2 = n * (n - 1) / 2;
        let c3 = n * (n - 1) * (n - 2) / 6;
        assert_eq!(b.dim(), n * c2 - c3, "n={n}");
    }
}

#[test]
fn curvature_to_weak_membership() {
    for h in [standard_so(3), unitary(2).unwrap()] {
        let rb = curvature_space(&h);
        let pb = weak_curvature_space(&h);
        for r in &rb.space.basis {
            assert!(curvature_residual_zero(&h, r));
            assert!(pair_symmetry_holds(&h, r));
            for z in 0..h.n() {
                assert!(pb.contains(&curvature_to_weak(&rb, r, z)));
            }
        }
        let zero = vec![Q::from_integer(0.into()); h.dim() * h.n() * (h.n() - 1) / 2];
        assert!(curvature_to_weak(&rb, &zero, 0)
            .iter()
            .all(|x| *x == Q::from_integer(0.into())));
    }
}

#[test]
fn xi_twist_membership_sp2() {
    let h = catalog::build("pi_H_10_sp2").unwrap();
    let b = weak_curvature_space(&h);
    for p in &b.space.basis {
        for a in 0..h.dim() {
            let mut xi = vec![Q::from_integer(0.into()); h.dim()];
            xi[a] = Q::from_integer(1.into());
            assert!(b.contains(&xi_twist(&b, p, &xi).unwrap()));
        }
    }
}

#[test]
fn direct_sum_of_ideals() {
    let h = direct_sum_rep(&[standard_so(3), standard_so(3)], 0).unwrap();
    let r = pspace_direct_sum_check(&h).unwrap();
    assert_eq!(r.parts, vec![3 * 3 - 1, 3 * 3 - 1]);
    assert!(r.dims_add_up && r.spans_agree);

    let h = direct_sum_rep(&[unitary(2).unwrap(), standard_so(3)], 0).unwrap();
    let r = pspace_direct_sum_check(&h).unwrap();
    assert!(r.dims_add_up && r.spans_agree);

    let h = direct_sum_rep(&[standard_so(3)], 2).unwrap();
    let r = pspace_direct_sum_check(&h).unwrap();
    assert_eq!(r.e0_dim, 2);
    assert!(r.dims_add_up && r.spans_agree);
}
