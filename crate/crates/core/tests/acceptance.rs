use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::Parser;
use holocurv::bianchi::*;
use holocurv::cli::{execute, Cache, Cli};
use holocurv::exactq::{q, NumberField, QMatrix, Q};
use holocurv::lorentz::*;
use holocurv::repkit::stabilizer::unitary;
use holocurv::repkit::{catalog, decompose_rep, direct_sum_rep, standard_so, trivial_rep, OrthRep};
use holocurv::torus::{is_closed, TorusSubspace};

fn with_line(h: &OrthRep) -> OrthRep {
    direct_sum_rep(std::slice::from_ref(h), 1).unwrap()
}

/// h in {trivial, so(2), u(1) in so(2), so(3), u(2)} with every applicable type.
fn grid() -> Vec<(OrthRep, AlgebraType, TypeParams)> {
    let so2 = standard_so(2);
    let u1 = with_line(&so2);
    let u2 = unitary(2).unwrap();
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
    out.push((u2.clone(), AlgebraType::Three, phi()));
    out.push((u1, AlgebraType::Four, psi()));
    out.push((with_line(&u2), AlgebraType::Four, psi()));
    out
}

fn criterion1() {
    let (r, _, _) = weak_berger_check(&catalog::build("pi_H_10_sp2").unwrap());
    assert_eq!(r.dim_p, 40);
    let (r, _, _) = weak_berger_check(&catalog::build("pi_H_10_sp2_t").unwrap());
    assert_eq!((r.dim_h, r.dim_p), (11, 40));
}

fn criterion2() {
    for name in ["pi_R_6_so3", "pi_C_3_so3", "pi_C_3_so3_t", "pi_R_8_so3"] {
        let b = weak_curvature_space(&catalog::build(name).unwrap());
        assert_eq!(b.dim(), 0, "{name}");
    }
}

fn criterion3() {
    let (r, _, lp) = weak_berger_check(&catalog::build("pi_H_10_sp2_t").unwrap());
    assert_eq!((r.dim_lp, r.verdict), (10, Verdict::False));
    let sp2 = catalog::build("pi_H_10_sp2").unwrap();
    let sp2_t = catalog::build("pi_H_10_sp2_t").unwrap();
    for g in sp2.generators() {
        assert!(lp.contains(&sp2_t.coords_of(g).unwrap()));
    }
    for e in catalog::entries().iter().filter(|e| e.expected_weak_berger()) {
        assert!((2..=9).contains(&e.n));
        let (r, _, _) = weak_berger_check(&e.build().unwrap());
        assert_eq!(r.verdict, Verdict::True, "{}", e.name);
    }
}

fn criterion4() {
    for (h, ty, p) in grid() {
        let r = theorem3_verify(&h, ty, p).unwrap();
        assert!(r.thm3_ok && r.thm3_lhs == r.thm3_rhs, "{} type {ty}: {r:?}", h.name());
    }
}

fn criterion5() {
    for (h, ty, p) in grid() {
        let g = build_type_algebra(ty, &h, p).unwrap();
        let r = corollary1_crosscheck(&g).unwrap();
        assert!(r.agree, "{} type {ty}", h.name());
    }
    for name in [
        "pi_R_6_so3",
        "pi_C_3_so3",
        "pi_C_3_so3_t",
        "pi_R_8_so3",
        "pi_H_10_sp2_t",
    ] {
        let h = catalog::build(name).unwrap();
        let g = build_type_algebra(AlgebraType::Two, &h, TypeParams::default()).unwrap();
        let r = corollary1_crosscheck(&g).unwrap();
        assert!(r.agree, "{name}");
        assert_eq!(r.berger, Verdict::False, "{name}");
    }
}

fn criterion6() {
    for n in 2..=5 {
        let so = standard_so(n);
        let b = curvature_space(&so);
        assert_eq!(b.dim(), n * n * (n * n - 1) / 12, "so({n})");
        for r in &b.space.basis {
            assert!(curvature_residual_zero(&so, r));
            assert!(pair_symmetry_holds(&so, r));
        }
    }
    for e in catalog::entries().iter().filter(|e| e.n <= 8) {
        let h = e.build().unwrap();
        let (_, pb, lp) = weak_berger_check(&h);
        assert!(lp_is_ideal(&h, &lp), "{}", e.name);
        for p in &pb.space.basis {
            assert!(weak_residual_zero(&h, p), "{}", e.name);
            for a in 0..h.dim() {
                let mut xi = vec![q(0); h.dim()];
                xi[a] = q(1);
                assert!(pb.contains(&xi_twist(&pb, p, &xi).unwrap()), "{}", e.name);
            }
        }
        let rb = curvature_space(&h);
        for r in &rb.space.basis {
            assert!(curvature_residual_zero(&h, r), "{}", e.name);
            assert!(pair_symmetry_holds(&h, r), "{}", e.name);
        }
    }
}

fn criterion7() {
    let so3 = standard_so(3);
    let u2 = unitary(2).unwrap();
    for (h, dims) in [
        (
            direct_sum_rep(&[so3.clone(), so3.clone()], 0).unwrap(),
            vec![(3, 3), (3, 3)],
        ),
        (direct_sum_rep(&[u2, so3], 0).unwrap(), vec![(3, 3), (4, 4)]),
    ] {
        let d = decompose_rep(&h).unwrap();
        assert!(d.decided && d.e0.is_empty());
        let mut got: Vec<(usize, usize)> = d.components.iter().map(|c| (c.rep.n(), c.rep.dim())).collect();
        got.sort_unstable();
        assert_eq!(got, dims, "{}", h.name());
        let r = pspace_direct_sum_check(&h).unwrap();
        assert!(r.dims_add_up && r.spans_agree, "{r:?}");
        assert_eq!(r.dim_p, r.parts.iter().sum::<usize>());
    }
}

fn criterion8() {
    let rat = NumberField::rationals();
    let sqrt2 = NumberField::parse("x^2-2").unwrap();
    assert!(
        is_closed(&TorusSubspace::parse(rat.clone(), None, "1,2").unwrap())
            .unwrap()
            .closed
    );
    let w = TorusSubspace::parse(sqrt2.clone(), None, "1,x").unwrap();
    assert!(!is_closed(&w).unwrap().closed);
    let full = TorusSubspace::parse(sqrt2.clone(), None, "1,0; 0,1").unwrap();
    assert!(is_closed(&full).unwrap().closed);
    let empty = TorusSubspace::parse(sqrt2, Some(2), "").unwrap();
    let r = is_closed(&empty).unwrap();
    assert!(r.closed && r.rational_dim == 0);
}

fn run_cli(args: &[&str], cache: &Cache) -> String {
    let cli = Cli::try_parse_from(std::iter::once("holocurv").chain(args.iter().copied())).unwrap();
    execute(&cli, cache).unwrap()
}

/// Recombines generators by a permutation and a unitriangular change of basis.
fn shuffled(h: &OrthRep) -> OrthRep {
    let gens = h.generators();
    let k = gens.len();
    let order: Vec<usize> = (0..k).map(|i| (i * 7 + 3) % k).collect();
    let mut uniq = order.clone();
    uniq.sort_unstable();
    uniq.dedup();
    let order = if uniq.len() == k { order } else { (0..k).rev().collect() };
    let mixed: Vec<QMatrix> = (0..k)
        .map(|i| {
            let g = gens[order[i]].clone();
            if i == 0 {
                g
            } else {
                g.add(&gens[order[i - 1]].scale(&Q::new(2.into(), 3.into())))
            }
        })
        .collect();
    h.with_generators(mixed).unwrap()
}

fn criterion9() {
    let dir = tempfile::tempdir().unwrap();
    let warm = Cache::at(dir.path());
    let cold = Cache::disabled();
    let commands: [&[&str]; 4] = [
        &["table", "--output", "json"],
        &["pspace", "catalog:pi_H_10_sp2", "--json", "--basis"],
        &["rspace", "so_4", "--json", "--basis"],
        &[
            "lorentz",
            "--type",
            "1",
            "--h",
            "u_2",
            "--verify-thm3",
            "--berger",
            "--json",
        ],
    ];
    for args in commands {
        let a = run_cli(args, &cold);
        let b = run_cli(args, &cold);
        let c = run_cli(args, &warm);
        let d = run_cli(args, &warm);
        assert_eq!(a, b, "{args:?}");
        assert_eq!(a, c, "{args:?}");
        assert_eq!(a, d, "{args:?}");
    }
    for name in [
        "pi_C_1_su2_t",
        "pi_R_4_so3",
        "pi_R_10_g2",
        "pi_H_10_sp2_t",
        "pi_R_13_so3so3",
    ] {
        let h = catalog::build(name).unwrap();
        let s = shuffled(&h);
        assert_ne!(h.generators(), s.generators());
        let (a, _, _) = weak_berger_check(&h);
        let (b, _, _) = weak_berger_check(&s);
        assert_eq!(a, b, "{name}");
        let (a, _, _) = berger_check(&h);
        let (b, _, _) = berger_check(&s);
        assert_eq!(a, b, "{name}");
    }
}

fn main() {
    let criteria: [(&str, fn(), Duration); 9] = [
        ("dim P(sp(2)) = dim P(sp(2)+t) = 40", criterion1, Duration::from_secs(5)),
        (
            "P = 0 for the four so(3) representations",
            criterion2,
            Duration::from_secs(30),
        ),
        (
            "weak-Berger verdicts of sp(2)+t and the holonomy column",
            criterion3,
            Duration::from_secs(600),
        ),
        (
            "dimension formula for R(g) of type algebras on the grid",
            criterion4,
            Duration::from_secs(300),
        ),
        (
            "Berger of g iff weak-Berger of its orthogonal part",
            criterion5,
            Duration::from_secs(300),
        ),
        (
            "oracles, residuals, symmetries, ideal and twist membership",
            criterion6,
            Duration::from_secs(600),
        ),
        (
            "decomposition into ideals and additivity of P",
            criterion7,
            Duration::from_secs(60),
        ),
        ("torus closedness", criterion8, Duration::from_secs(5)),
        (
            "determinism, cache transparency, generator shuffling",
            criterion9,
            Duration::from_secs(300),
        ),
    ];
    let mut failed = Vec::new();
    for (i, (label, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        let took = start.elapsed();
        let in_budget = took <= *budget;
        let status = if ok && in_budget { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status} ({label}; {:.2}s, budget {}s)",
            i + 1,
            took.as_secs_f64(),
            budget.as_secs()
        );
        if status == "FAIL" {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
