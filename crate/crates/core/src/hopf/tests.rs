use std::sync::Arc;

use super::*;
use crate::battery::{battery, instance};
use crate::group::{make_named, GroupHom};

fn c(n: i64, d: i64) -> Coeff {
    Coeff::new(n, d)
}

#[test]
fn group_and_function_algebras_are_hopf() {
    let s3 = make_named("symmetric", 3).unwrap();
    assert!(verify_hopf_axioms(&HopfData::group_algebra(&s3)).all_pass());
    let k = HopfData::function_algebra(&s3);
    assert!(verify_hopf_axioms(&k).all_pass());
    assert!(verify_hopf_axioms(&HopfData::tensor(&k, &HopfData::group_algebra(&s3))).all_pass());
    // sum of the idempotents is the unit
    let sum: Vector = (0..6).map(|g| (g, c(1, 1))).collect();
    assert_eq!(k.unit(), &sum);
}

#[test]
fn antipode_inverse_and_op() {
    let q8 = make_named("quaternion8", 0).unwrap();
    let kq = HopfData::group_algebra(&q8);
    let inv = kq.antipode_inverse().unwrap();
    for (i, col) in inv.iter().enumerate() {
        assert_eq!(col, &basis_vector(q8.inv(i)));
    }
    assert!(verify_hopf_axioms(&kq.op().unwrap()).all_pass());
}

#[test]
fn pairing_orientation() {
    let s3 = Arc::new(make_named("symmetric", 3).unwrap());
    let phi = GroupHom::identity(s3.clone());
    let (u, h, pairing) = pairing_from_hom(&phi).unwrap();
    assert!(pairing.verify(&u, &h).all_pass());
    // the other orientation is not a skew pairing for a nonabelian group
    let mut values = vec![vec![Coeff::zero(); 6]; 6];
    for x in 0..6 {
        values[x][x] = Coeff::one();
    }
    let err = SkewPairing::new(&u, &h, values).unwrap_err();
    assert!(err.to_string().contains("pairing_product_in_h"), "{err}");
}

#[test]
fn cocycle_identities() {
    for name in ["C2", "S3>C2"] {
        let phi = instance(name).unwrap().phi;
        let (u, h, pairing) = pairing_from_hom(&phi).unwrap();
        let a = HopfData::tensor(&u, &h);
        let form = CocycleForm::from_pairing(&u, &h, &pairing);
        let report = form.verify(&a);
        assert!(report.all_pass(), "{name}: {:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn product_law_in_ds3() {
    let phi = instance("S3").unwrap().phi;
    let d = double_from_hom(&phi, DEFAULT_DIMENSION_CAP).unwrap();
    let g = phi.target().clone();
    for a in 0..6 {
        for x in 0..6 {
            for b in 0..6 {
                for y in 0..6 {
                    let got = d.algebra.mul_basis(d.index(a, x), d.index(b, y));
                    let expected =
                        if a == g.conj(x, b) { basis_vector(d.index(a, g.mul(x, y))) } else { Vec::new() };
                    assert_eq!(got, &expected, "a={a} x={x} b={b} y={y}");
                }
            }
        }
    }
    // S(p_g # x) = p_{x^-1 g^-1 x} # x^-1
    for a in 0..6 {
        for x in 0..6 {
            let xi = g.inv(x);
            let expected = basis_vector(d.index(g.conj(xi, g.inv(a)), xi));
            assert_eq!(d.algebra.antipode_basis(d.index(a, x)), &expected);
        }
    }
}

#[test]
fn twist_matches_direct_on_battery() {
    for inst in battery() {
        let d = double_from_hom(&inst.phi, DEFAULT_DIMENSION_CAP).unwrap();
        let form = CocycleForm::from_pairing(&d.u, &d.h, &d.pairing);
        let twisted = build_double_by_twist(&d.u, &d.h, &form, DEFAULT_DIMENSION_CAP).unwrap();
        assert_eq!(twisted.first_difference(&d.algebra), None, "{}", inst.name);
        let report = verify_hopf_axioms(&d.algebra);
        assert!(report.all_pass(), "{}: {:?}", inst.name, report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn normality_and_swap_on_battery() {
    for inst in battery() {
        let d = double_from_hom(&inst.phi, DEFAULT_DIMENSION_CAP).unwrap();
        let n = verify_normality_ku(&d.algebra, &d.u, &d.h, &d.pairing);
        assert!(n.all_pass(), "{}: {:?}", inst.name, n.failures().collect::<Vec<_>>());
        let s = verify_swap_duality(&d.u, &d.h, &d.pairing, DEFAULT_DIMENSION_CAP).unwrap();
        assert!(s.all_pass(), "{}: {:?}", inst.name, s.failures().collect::<Vec<_>>());
    }
}

#[test]
fn haar_integral_of_double() {
    for name in ["S3", "S3>C3", "C2xC2>C2"] {
        let d = double_from_hom(&instance(name).unwrap().phi, DEFAULT_DIMENSION_CAP).unwrap();
        let nf = d.h.dim() as i64;
        let expected: Vector = (0..d.h.dim()).map(|x| (d.index(0, x), c(1, nf))).collect();
        let haar = haar_integral(&d.algebra).unwrap();
        assert_eq!(haar, expected, "{name}");
        // two-sided and idempotent
        assert_eq!(d.algebra.mul(&haar, &haar), haar);
        for i in 0..d.dim() {
            let e = d.algebra.counit_basis(i);
            let scaled: Vector = if e.is_zero() { Vec::new() } else { haar.iter().map(|(k, v)| (*k, v * e)).collect() };
            assert_eq!(d.algebra.mul(&haar, &basis_vector(i)), scaled);
        }
    }
}

#[test]
fn corruption_is_located() {
    let d = double_from_hom(&instance("S3").unwrap().phi, DEFAULT_DIMENSION_CAP).unwrap();
    let bad = d.algebra.corrupted(7, 13);
    let report = verify_hopf_axioms(&bad);
    assert!(!report.all_pass());
    let assoc = report.get("associativity").unwrap();
    assert!(!assoc.pass);
    assert!(assoc.witness.as_deref().unwrap().starts_with('('));
    assert!(bad.first_difference(&d.algebra).unwrap().starts_with("product e7*e13"));
}

#[test]
fn dimension_cap() {
    let phi = instance("S3").unwrap().phi;
    match double_from_hom(&phi, 35) {
        Err(crate::Error::DimensionCap { dim: 36, cap: 35 }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn json_round_trip_shape() {
    let d = double_from_hom(&instance("C2").unwrap().phi, DEFAULT_DIMENSION_CAP).unwrap();
    let v = d.algebra.to_json();
    assert_eq!(v["labels"].as_array().unwrap().len(), 4);
}
