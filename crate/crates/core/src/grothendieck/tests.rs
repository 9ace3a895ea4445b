use super::*;
use crate::battery::{battery, instance};
use crate::double_rep::catalog;
use crate::fusion::{fusion_table, verify_fusion_table};
use crate::group::{make_named, GroupHom};

fn ctx(name: &str) -> Arc<DoubleContext> {
    DoubleContext::new(&instance(name).unwrap().phi)
}

#[test]
fn orbit_sums() {
    let c = ctx("S3");
    let g = c.g().clone();
    assert_eq!(orbit_sum(&c, 0), GroupRingElement::one(&g));
    assert_eq!(orbit_sum(&c, 1).coefficients(), &[0, 1, 0, 1, 1, 0]);
    let c1 = Arc::new(make_named("cyclic", 1).unwrap());
    let trivial = GroupHom::new(c1, g.clone(), vec![0]).unwrap();
    let c = DoubleContext::new(&trivial);
    for h in g.elements() {
        assert_eq!(orbit_sum(&c, h), GroupRingElement::basis(&g, h));
    }
}

#[test]
fn transposition_class_sum_squared() {
    let c = ctx("S3");
    let g = c.g().clone();
    let s = orbit_sum(&c, 1);
    // 3e + 3(1,2,3) + 3(1,3,2), by direct expansion
    let mut expected = GroupRingElement::zero(&g);
    for h in [0, 2, 5] {
        expected.add_scaled(&GroupRingElement::basis(&g, h), 3);
    }
    assert_eq!(&s * &s, expected);
    assert_eq!((&s * &s).to_string(), "3*e + 3*(1,2,3) + 3*(1,3,2)");
    assert_eq!(&orbit_sum(&c, 0) * &s, s);
}

#[test]
fn abelian_orbit_sums_multiply_as_elements() {
    let g = Arc::new(make_named("direct_product", 3).unwrap());
    let c = DoubleContext::new(&GroupHom::identity(g.clone()));
    for a in g.elements() {
        for b in g.elements() {
            assert_eq!(&orbit_sum(&c, a) * &orbit_sum(&c, b), GroupRingElement::basis(&g, g.mul(a, b)));
        }
    }
    assert!(verify_orbit_sum_products(&c).all_pass());
}

#[test]
fn battery_rings() {
    for inst in battery() {
        let c = DoubleContext::new(&inst.phi);
        assert!(verify_orbit_sum_products(&c).all_pass(), "{}", inst.name);
        let cat = catalog(&c).unwrap();
        let (report, table) = verify_fusion_table(&cat);
        assert!(report.all_pass());
        let ring = build_ring(&cat, &table.unwrap()).unwrap();
        let r = verify_ring_surjection(&ring, &c);
        assert!(r.all_pass(), "{}: {:?}", inst.name, r.failures().collect::<Vec<_>>());
        assert_eq!(r.get("image_is_centre").is_some(), inst.phi.is_identity(), "{}", inst.name);
        let w = verify_conjugation_maps(&c);
        assert!(w.all_pass(), "{}: {:?}", inst.name, w.failures().collect::<Vec<_>>());
    }
}

#[test]
fn dc2_ring_is_klein_four_group_ring() {
    let c = ctx("C2");
    let cat = catalog(&c).unwrap();
    let ring = build_ring(&cat, &fusion_table(&cat, CosetOrder::default()).unwrap()).unwrap();
    assert_eq!(ring.rank(), 4);
    for i in 0..4 {
        // every simple is invertible
        assert!((0..4).any(|j| ring.product(i, j) == [(ring.unit(), 1)]));
    }
}

#[test]
fn conjugation_map_on_rotation_block() {
    let c = ctx("S3");
    // C3 rows: trivial, then the two faithful characters; (1,2) swaps them
    assert_eq!(conjugation_map(&c, 1, 2).unwrap(), vec![0, 2, 1]);
    assert_eq!(conjugation_map(&c, 0, 2).unwrap(), vec![0, 1, 2]);
    assert_eq!(conjugation_map(&c, 2, 2).unwrap(), vec![0, 1, 2]);
}

#[test]
fn trivial_double_ring() {
    let c1 = Arc::new(make_named("cyclic", 1).unwrap());
    let c = DoubleContext::new(&GroupHom::identity(c1));
    let cat = catalog(&c).unwrap();
    let ring = build_ring(&cat, &fusion_table(&cat, CosetOrder::default()).unwrap()).unwrap();
    assert_eq!(ring.product(0, 0), &[(0, 1)]);
    assert!(verify_ring_surjection(&ring, &c).all_pass());
}
