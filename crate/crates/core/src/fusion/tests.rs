use super::*;
use crate::battery::{battery, instance};
use crate::double_rep::catalog;

fn cat(name: &str) -> IrrepCatalog {
    catalog(&DoubleContext::new(&instance(name).unwrap().phi)).unwrap()
}

fn labels(out: &FusionOutcome) -> Vec<(Elem, usize, u64)> {
    out.terms.iter().map(|(l, m)| (l.g, l.m, *m)).collect()
}

#[test]
fn conjugate_label_examples() {
    let c = cat("S3");
    let ctx = c.context();
    let table = ctx.stabilizer_table(2).unwrap();
    // C3 = {(), (1,2,3), (1,3,2)}; rows trivial, then lexicographic
    let omega = &table.characters()[1];
    let (xg, xm) = conjugate_label(ctx, 1, 2, omega);
    assert_eq!(xg, 5);
    assert_eq!(xm.value_at(5).unwrap(), omega.value_at(2).unwrap());
    let (g, m) = conjugate_label(ctx, 0, 2, omega);
    assert_eq!((g, &m), (2, omega));
    let (g, m) = conjugate_label(ctx, 2, 2, omega);
    assert_eq!((g, &m), (2, omega));
}

#[test]
fn m_gh_degree_law() {
    let c = cat("S3");
    let ctx = c.context();
    let t = ctx.stabilizer_table(2).unwrap();
    let omega = &t.characters()[1];
    // (1,2,3)^2 = (1,3,2), F_g & F_h = C3 = F_gh
    let p = m_gh(ctx, 2, 2, omega, omega).unwrap();
    assert_eq!(p.integer_degree(), Some(1));
    assert_eq!(*p.value_at(2).unwrap(), omega.value_at(2).unwrap() * omega.value_at(2).unwrap());
    let s = ctx.stabilizer_table(1).unwrap();
    // (1,2) * (1,2,3) = (2,3): F_g & F_h trivial, induced to F_{(2,3)} of order 2
    let p = m_gh(ctx, 1, 2, &s.characters()[0], omega).unwrap();
    assert_eq!(p.integer_degree(), Some(2));
}

#[test]
fn ds3_rotation_squared() {
    let c = cat("S3");
    let i = c.position(2, 1).unwrap();
    let out = fuse(&c, i, i, CosetOrder::default()).unwrap();
    // one 2-dimensional simple over the 3-cycles plus trivial and sign
    let terms = labels(&out);
    assert_eq!(out.degree(), 4);
    assert_eq!(terms.len(), 3);
    assert!(terms.contains(&(0, 0, 1)) && terms.contains(&(0, 1, 1)));
    assert_eq!(terms.iter().filter(|t| t.0 == 2).count(), 1);
    assert_eq!(out, oracle_fuse(&c, i, i).unwrap());
}

#[test]
fn ds3_transposition_squared_contains_unit() {
    let c = cat("S3");
    let i = c.position(1, 0).unwrap();
    let out = fuse(&c, i, i, CosetOrder::default()).unwrap();
    assert_eq!(out.multiplicity(&c.labels()[0]), 1);
    assert_eq!(out.degree(), 9);
    assert_eq!(out, oracle_fuse(&c, i, i).unwrap());
}

#[test]
fn dc2_is_group_ring_of_klein_four() {
    let c = cat("C2");
    let (report, table) = verify_fusion_table(&c);
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
    let table = table.unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let out = table.get(i, j);
            assert_eq!(out.terms.len(), 1);
            assert_eq!(out.terms[0].1, 1);
            // (g, chi) multiply componentwise in C2 x C2
            let k = out.terms[0].0;
            let (a, b) = (c.labels()[i], c.labels()[j]);
            assert_eq!((k.g, k.m), ((a.g + b.g) % 2, (a.m + b.m) % 2));
        }
    }
}

#[test]
fn battery_tables_verify() {
    for inst in battery() {
        let c = catalog(&DoubleContext::new(&inst.phi)).unwrap();
        let (report, table) = verify_fusion_table(&c);
        assert!(report.all_pass(), "{}: {:?}", inst.name, report.failures().collect::<Vec<_>>());
        assert_eq!(table.unwrap().outcomes().len(), c.len() * c.len());
    }
}

#[test]
fn associativity_from_oracle() {
    for name in ["C2", "S3"] {
        let c = cat(name);
        let oracle = Oracle::new(&c).unwrap();
        let n = c.len();
        let table: Vec<FusionOutcome> =
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| oracle.fuse(i, j).unwrap()).collect();
        let idx = |l: &SimpleLabel| c.position(l.g, l.m).unwrap();
        let times = |v: &BTreeMap<usize, u64>, k: usize, left: bool| {
            let mut acc = BTreeMap::new();
            for (&i, &m) in v {
                let o = if left { &table[i * n + k] } else { &table[k * n + i] };
                for (l, mm) in &o.terms {
                    *acc.entry(idx(l)).or_insert(0) += m * mm;
                }
            }
            acc
        };
        for a in 0..n {
            for b in 0..n {
                let ab: BTreeMap<usize, u64> = table[a * n + b].terms.iter().map(|(l, m)| (idx(l), *m)).collect();
                for cc in 0..n {
                    let bc: BTreeMap<usize, u64> =
                        table[b * n + cc].terms.iter().map(|(l, m)| (idx(l), *m)).collect();
                    assert_eq!(times(&ab, cc, true), times(&bc, a, false), "{name} {a} {b} {cc}");
                }
            }
        }
    }
}

#[test]
fn commutativity_is_recorded() {
    assert!(fusion_table(&cat("S3"), CosetOrder::default()).unwrap().is_commutative());
    let t = fusion_table(&cat("S3>C2"), CosetOrder::default()).unwrap();
    let _ = t.is_commutative();
    let csv = t.matrix_csv(&cat("S3>C2"), 0);
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn ds4_formula_matches_oracle_only_in_default_order() {
    let g = std::sync::Arc::new(crate::group::make_named("symmetric", 4).unwrap());
    let c = catalog(&DoubleContext::new(&crate::group::GroupHom::identity(g))).unwrap();
    let oracle = Oracle::new(&c).unwrap();
    let mut other_order_mismatches = 0;
    for i in 0..c.len() {
        for j in 0..c.len() {
            let expected = oracle.fuse(i, j).unwrap();
            assert_eq!(fuse(&c, i, j, CosetOrder::default()).unwrap(), expected);
            if fuse(&c, i, j, CosetOrder::LeftRight).ok() != Some(expected) {
                other_order_mismatches += 1;
            }
        }
    }
    assert_eq!(other_order_mismatches, 108);
}
