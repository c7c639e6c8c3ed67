use proptest::prelude::*;

use holocurv::bianchi::{berger_check, weak_berger_check};
use holocurv::exactq::{nullspace, nullspace_dense, q, qf, rank, NfElem, NumberField, QMatrix, Scalar, Q};
use holocurv::repkit::{catalog, OrthRep};
use holocurv::torus::{is_closed, TorusSubspace};

fn small_matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
        prop::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |v| {
            let data: Vec<Q> = v.into_iter().map(|(a, b)| qf(a, b)).collect();
            QMatrix::from_vec(r, c, data).unwrap()
        })
    })
}

fn field() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["x^2-2", "x^2+1", "x^3-2", "x^2-x-1"])
}

fn elem(f: &std::sync::Arc<NumberField>, c: &[i64]) -> NfElem {
    NfElem::new(f, c.iter().map(|&x| q(x)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(m in small_matrix(6, 7)) {
        prop_assert_eq!(rank(&m) + nullspace(&m).dim(), m.cols());
    }

    #[test]
    fn sparse_and_dense_nullspaces_agree(m in small_matrix(6, 7)) {
        let s = nullspace(&m);
        let d = nullspace_dense(&m);
        prop_assert_eq!(&s.basis, &d.basis);
        for v in &s.basis {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.vanishes()));
        }
    }

    #[test]
    fn number_field_axioms(
        f in field(),
        a in prop::collection::vec(-4i64..=4, 3),
        b in prop::collection::vec(-4i64..=4, 3),
        c in prop::collection::vec(-4i64..=4, 3),
    ) {
        let k = NumberField::parse(f).unwrap();
        let (a, b, c) = (elem(&k, &a), elem(&k, &b), elem(&k, &c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !a.vanishes() {
            prop_assert_eq!(a.mul(&a.try_inv().unwrap()), a.one_like());
        }
    }

    #[test]
    fn torus_closedness_ignores_basis_choice(
        f in field(),
        v in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 3),
        w in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 3),
        s in prop::collection::vec(-3i64..=3, 2),
        t in prop::collection::vec(-3i64..=3, 2),
    ) {
        let k = NumberField::parse(f).unwrap();
        let v: Vec<NfElem> = v.iter().map(|c| elem(&k, c)).collect();
        let w: Vec<NfElem> = w.iter().map(|c| elem(&k, c)).collect();
        let Ok(base) = TorusSubspace::new(k.clone(), 3, vec![v.clone(), w.clone()]) else {
            return Ok(());
        };
        let s = elem(&k, &s);
        let t = elem(&k, &t);
        prop_assume!(!s.vanishes());
        let v2: Vec<NfElem> = v.iter().map(|x| x.mul(&s)).collect();
        let w2: Vec<NfElem> = w.iter().zip(&v2).map(|(x, y)| x.add(&y.mul(&t))).collect();
        let moved = TorusSubspace::new(k, 3, vec![w2, v2]).unwrap();
        prop_assert_eq!(is_closed(&base).unwrap(), is_closed(&moved).unwrap());
    }

    #[test]
    fn verdicts_ignore_generator_basis(
        idx in 0usize..5,
        seed in prop::collection::vec(-2i64..=2, 64),
        rot in 0usize..16,
    ) {
        let name = ["so_3", "u_2", "pi_R_4_so3", "su_3", "so_4"][idx];
        let h = catalog::build(name).unwrap();
        let gens = h.generators();
        let k = gens.len();
        let mut mixed: Vec<QMatrix> = Vec::new();
        for i in 0..k {
            let mut g = gens[(i + rot) % k].clone();
            for j in 0..i {
                g = g.add(&gens[(j + rot) % k].scale(&q(seed[(i * 7 + j) % seed.len()])));
            }
            mixed.push(g);
        }
        let s = h.with_generators(mixed).unwrap();
        prop_assert_eq!(weak_berger_check(&h).0, weak_berger_check(&s).0);
        prop_assert_eq!(berger_check(&h).0, berger_check(&s).0);
    }

    #[test]
    fn rep_json_round_trip(idx in 0usize..26, scale in 1i64..5) {
        let e = &catalog::entries()[idx % catalog::entries().len()];
        prop_assume!(e.n <= 8);
        let h = e.build().unwrap();
        let g: Vec<QMatrix> = h.generators().iter().map(|m| m.scale(&qf(scale, 3))).collect();
        let h = h.with_generators(g).unwrap();
        let back = OrthRep::from_json(&h.to_json()).unwrap();
        prop_assert_eq!(back.canonical_json(), h.canonical_json());
        let text = serde_json::to_string(&h.to_json()).unwrap();
        let parsed = OrthRep::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(parsed.canonical_json(), h.canonical_json());
    }
}
