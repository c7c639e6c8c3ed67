use holocurv::error::RepError;
use holocurv::exactq::{q, QMatrix};
use holocurv::repkit::lie::LieAlgebraSpec;
use holocurv::repkit::stabilizer::{g2, unitary};
use holocurv::repkit::*;

#[test]
fn adjoint_su2_matches_spin_one() {
    let ad = adjoint_rep(&LieAlgebraSpec::su2()).unwrap();
    assert_eq!((ad.n(), ad.dim()), (3, 3));
    let spin1 = realify(&su2_irrep(2)).unwrap();
    assert_eq!((spin1.n(), spin1.dim()), (3, 3));
    assert!(equivalent(&ad, &spin1).unwrap());
}

#[test]
fn exceptional_and_unitary_dimensions() {
    let g = g2().unwrap();
    assert_eq!((g.n(), g.dim()), (7, 14));
    assert_eq!(is_irreducible(&g), Irreducibility::CertifiedIrreducible);
    let u = unitary(3).unwrap();
    assert_eq!((u.n(), u.dim()), (6, 9));
    assert_eq!(center(&u).dim(), 1);
    assert_eq!(center(&catalog::build("su_3").unwrap()).dim(), 0);
}

#[test]
fn su2_irreps_realify_with_the_right_dimensions() {
    for (k, n) in [(1, 4), (2, 3), (3, 8), (4, 5), (6, 7), (8, 9)] {
        let r = realify(&su2_irrep(k)).unwrap();
        assert_eq!((r.n(), r.dim()), (n, 3), "k={k}");
        assert_eq!(is_irreducible(&r), Irreducibility::CertifiedIrreducible, "k={k}");
    }
}

#[test]
fn reducible_inputs_are_detected() {
    let h = direct_sum_rep(&[standard_so(3), standard_so(3)], 0).unwrap();
    assert_eq!(is_irreducible(&h), Irreducibility::Reducible);
    let d = decompose_rep(&h).unwrap();
    assert_eq!(d.components.len(), 2);
    let h = direct_sum_rep(&[standard_so(2)], 1).unwrap();
    assert_eq!(is_irreducible(&h), Irreducibility::Reducible);
    assert_eq!(decompose_rep(&h).unwrap().e0.len(), 1);
}

#[test]
fn invalid_representations_are_rejected() {
    let gram = QMatrix::identity(2);
    let sym = QMatrix::from_i64(&[&[1, 0], &[0, 1]]);
    let err = OrthRep::new("bad", gram.clone(), vec![sym], serde_json::Value::Null).unwrap_err();
    assert_eq!(err, RepError::NotSkew(0));
    let j = QMatrix::from_i64(&[&[0, -1], &[1, 0]]);
    let err = OrthRep::new("dup", gram, vec![j.clone(), j.scale(&q(2))], serde_json::Value::Null).unwrap_err();
    assert_eq!(err, RepError::DependentGenerators);
    assert!(matches!(catalog::build("nope"), Err(RepError::UnknownRep(_))));
}

#[test]
fn catalog_aliases_resolve() {
    for e in catalog::entries() {
        for a in e.aliases {
            assert_eq!(catalog::lookup(a).unwrap().name, e.name);
        }
    }
    assert!(catalog::entries().iter().filter(|e| e.n <= 9).count() >= 20);
}
