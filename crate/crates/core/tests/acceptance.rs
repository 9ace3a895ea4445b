//! One line per acceptance criterion. Runs as a plain binary so the lines show
//! up in `cargo test` output; exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gqd::battery::{battery, instance, Instance};
use gqd::character::{CharacterTable, Classes};
use gqd::cyclotomic::{Cyclotomic, Rational};
use gqd::double_rep::{catalog, clifford_multiplicities, DoubleContext, IrrepCatalog};
use gqd::fusion::{fusion_table, CosetOrder, FusionTable, Oracle};
use gqd::group::{make_named, FiniteGroup, Subgroup};
use gqd::grothendieck::{build_ring, orbit_sum, verify_orbit_sum_products, verify_ring_surjection, GroupRingElement};
use gqd::hopf::{
    build_double_by_twist, double_from_hom, verify_hopf_axioms, verify_normality_ku, verify_swap_duality,
    CocycleForm, DEFAULT_DIMENSION_CAP,
};
use gqd::input::load_pair;
use gqd::suites::{hopf_suite, SuiteOptions};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, ok_detail: String) -> Outcome {
    match problems.first() {
        None => Outcome { pass: true, detail: ok_detail },
        Some(p) => Outcome { pass: false, detail: format!("{} problem(s), first: {p}", problems.len()) },
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn catalogs() -> Vec<(Instance, IrrepCatalog, Duration)> {
    battery()
        .into_iter()
        .map(|inst| {
            let t = Instant::now();
            let cat = catalog(&DoubleContext::new(&inst.phi)).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
            (inst, cat, t.elapsed())
        })
        .collect()
}

fn classification(cats: &[(Instance, IrrepCatalog, Duration)]) -> Outcome {
    let mut problems = Vec::new();
    let mut slowest = Duration::ZERO;
    for (inst, cat, took) in cats {
        slowest = slowest.max(*took);
        let (g, f) = (inst.phi.target().order() as u64, inst.phi.source().order() as u64);
        let sum: u64 = cat.degrees().iter().map(|d| d * d).sum();
        if sum != g * f {
            problems.push(format!("{}: sum of squares {sum} != {}", inst.name, g * f));
        }
        if *took > Duration::from_secs(5) {
            problems.push(format!("{}: took {}", inst.name, secs(*took)));
        }
    }
    let s3 = &cats.iter().find(|(i, _, _)| i.name == "S3").unwrap().1;
    let mut degrees = s3.degrees();
    degrees.sort_unstable();
    if degrees != [1, 1, 2, 2, 2, 2, 3, 3] {
        problems.push(format!("D(S3) degrees {degrees:?}"));
    }
    outcome(problems, format!("D(S3) degrees {degrees:?}; slowest catalog {}", secs(slowest)))
}

fn fusion_against_oracle(cats: &[(Instance, IrrepCatalog, Duration)]) -> (Outcome, Vec<FusionTable>) {
    let mut problems = Vec::new();
    let mut tables = Vec::new();
    let mut products = 0;
    let mut slowest = Duration::ZERO;
    for (inst, cat, _) in cats {
        let t = Instant::now();
        let table = fusion_table(cat, CosetOrder::default()).unwrap();
        let oracle = Oracle::new(cat).unwrap();
        for i in 0..cat.len() {
            for j in 0..cat.len() {
                products += 1;
                let expected = oracle.fuse(i, j).unwrap();
                if &expected != table.get(i, j) {
                    problems.push(format!("{}: formula `{}` vs oracle `{expected}`", inst.name, table.get(i, j)));
                }
            }
        }
        let took = t.elapsed();
        slowest = slowest.max(took);
        if took > Duration::from_secs(60) {
            problems.push(format!("{}: took {}", inst.name, secs(took)));
        }
        tables.push(table);
    }
    (outcome(problems, format!("{products} ordered products match; slowest instance {}", secs(slowest))), tables)
}

fn order_insensitivity(cats: &[(Instance, IrrepCatalog, Duration)], tables: &[FusionTable]) -> Outcome {
    let mut problems = Vec::new();
    for ((inst, cat, _), table) in cats.iter().zip(tables) {
        let other = fusion_table(cat, CosetOrder::LeftRight).unwrap();
        for i in 0..cat.len() {
            for j in 0..cat.len() {
                if other.get(i, j) != table.get(i, j) {
                    problems.push(format!("{}: `{}` vs `{}`", inst.name, other.get(i, j), table.get(i, j)));
                }
            }
        }
    }
    outcome(problems, "F_g\\F/F_h and F_h\\F/F_g agree on every product".into())
}

fn hopf_kernel() -> Outcome {
    let mut problems = Vec::new();
    let mut q8_time = Duration::ZERO;
    for inst in battery() {
        let t = Instant::now();
        let d = double_from_hom(&inst.phi, DEFAULT_DIMENSION_CAP).unwrap();
        assert!(d.dim() <= 1024);
        let form = CocycleForm::from_pairing(&d.u, &d.h, &d.pairing);
        let twisted = build_double_by_twist(&d.u, &d.h, &form, DEFAULT_DIMENSION_CAP).unwrap();
        if let Some(diff) = twisted.first_difference(&d.algebra) {
            problems.push(format!("{}: twist vs direct: {diff}", inst.name));
        }
        let mut report = verify_hopf_axioms(&d.algebra);
        report.extend(verify_normality_ku(&d.algebra, &d.u, &d.h, &d.pairing));
        report.extend(verify_swap_duality(&d.u, &d.h, &d.pairing, DEFAULT_DIMENSION_CAP).unwrap());
        for c in report.failures() {
            problems.push(format!("{}: {} {:?}", inst.name, c.name, c.witness));
        }
        if inst.name == "Q8" {
            q8_time = t.elapsed();
            if q8_time > Duration::from_secs(120) {
                problems.push(format!("D(Q8) took {}", secs(q8_time)));
            }
        }
    }
    outcome(problems, format!("twist = direct, axioms, normality, swap on the battery; D(Q8) {}", secs(q8_time)))
}

fn clifford(cats: &[(Instance, IrrepCatalog, Duration)]) -> Outcome {
    let mut problems = Vec::new();
    for (inst, cat, _) in cats {
        let ctx = cat.context();
        let (g_group, f_group) = (inst.phi.target(), inst.phi.source());
        for &g in ctx.gamma() {
            // |F_g| by brute force from the group tables
            let fg = f_group
                .elements()
                .filter(|&x| {
                    let y = inst.phi.apply(x);
                    g_group.mul(g_group.mul(y, g), g_group.inv(y)) == g
                })
                .count() as i64;
            let dim = (g_group.order() * f_group.order()) as i64;
            let expected = Rational::new(dim * fg, (f_group.order() * g_group.order()) as i64);
            let (through_double, formula) = clifford_multiplicities(cat, g);
            if through_double != expected || formula != expected {
                problems.push(format!("{} g={g}: {through_double} / {formula}, expected {expected}", inst.name));
            }
        }
    }
    let s3 = &cats.iter().find(|(i, _, _)| i.name == "S3").unwrap().1;
    let spots = [(1, 2), (2, 3)].map(|(g, m)| (clifford_multiplicities(s3, g).0, Rational::from_integer(m)));
    for (got, want) in &spots {
        if got != want {
            problems.push(format!("D(S3) spot value {got}, expected {want}"));
        }
    }
    outcome(problems, format!("all g in every Gamma; D(S3): (1,2) -> {}, (1,2,3) -> {}", spots[0].0, spots[1].0))
}

fn ring_map(cats: &[(Instance, IrrepCatalog, Duration)], tables: &[FusionTable]) -> Outcome {
    let mut problems = Vec::new();
    for ((inst, cat, _), table) in cats.iter().zip(tables) {
        let ctx = cat.context();
        let ring = build_ring(cat, table).unwrap();
        let mut report = verify_ring_surjection(&ring, ctx);
        report.extend(verify_orbit_sum_products(ctx));
        if inst.phi.is_identity() && report.get("image_is_centre").is_none() {
            problems.push(format!("{}: centre comparison missing", inst.name));
        }
        for c in report.failures() {
            problems.push(format!("{}: {} {:?}", inst.name, c.name, c.witness));
        }
    }
    let ctx = DoubleContext::new(&instance("S3").unwrap().phi);
    let g = ctx.g().clone();
    let s = orbit_sum(&ctx, 1);
    let square = &s * &s;
    let mut expected = GroupRingElement::one(&g).scale(3);
    expected.add_scaled(&GroupRingElement::basis(&g, 2), 3);
    expected.add_scaled(&GroupRingElement::basis(&g, 5), 3);
    if square != expected {
        problems.push(format!("s((1,2))^2 = {square}"));
    }
    outcome(problems, format!("unital, multiplicative, onto C(ZF); s((1,2))^2 = {square}"))
}

fn family_groups() -> Vec<(String, Arc<FiniteGroup>)> {
    let mut out = Vec::new();
    let mut push = |name: &str, p: i64| {
        let g = make_named(name, p).unwrap();
        if g.order() <= 24 {
            out.push((format!("{name} {p}"), Arc::new(g)));
        }
    };
    (1..=24).for_each(|n| push("cyclic", n));
    (1..=12).for_each(|n| push("dihedral", n));
    (1..=4).for_each(|n| push("symmetric", n));
    push("quaternion8", 0);
    (1..=4).for_each(|n| push("direct_product", n));
    out
}

fn character_core() -> Outcome {
    let t = Instant::now();
    let mut problems = Vec::new();
    let groups = family_groups();
    for (name, g) in &groups {
        let table = CharacterTable::of_group(g.clone()).unwrap();
        let defects = table.orthogonality_defects();
        if let Some(d) = defects.first() {
            problems.push(format!("{name}: {d}"));
        }
        let squares: i64 = table.degrees().iter().map(|d| d * d).sum();
        if squares != g.order() as i64 {
            problems.push(format!("{name}: sum of squares {squares}"));
        }
        // reciprocity for every cyclic subgroup
        let mut seen = BTreeMap::new();
        for x in g.elements() {
            let h = Subgroup::generated_by(g, &[x]);
            if seen.insert(h.elements().to_vec(), ()).is_some() {
                continue;
            }
            let classes = Classes::of_subgroup(&h);
            let h_table = CharacterTable::compute(classes.clone()).unwrap();
            for psi in h_table.characters() {
                let induced = psi.induce(table.classes());
                for chi in table.characters() {
                    let up: Cyclotomic = induced.inner_product(chi);
                    let down: Cyclotomic = psi.inner_product(&chi.restrict(&classes));
                    if up != down {
                        problems.push(format!("{name}, <{x}>: {up} vs {down}"));
                    }
                }
            }
        }
    }
    let took = t.elapsed();
    if took > Duration::from_secs(10) {
        problems.push(format!("took {}", secs(took)));
    }
    outcome(problems, format!("{} groups of order <= 24 in {}", groups.len(), secs(took)))
}

fn negative_controls() -> Outcome {
    let mut problems = Vec::new();
    let phi = &instance("S3").unwrap().phi;
    let cat = catalog(&DoubleContext::new(phi)).unwrap();
    let options = SuiteOptions { corrupt: Some((7, 13)), ..SuiteOptions::default() };
    let report = hopf_suite(phi, &cat, &options).unwrap();
    let witness = report.get("associativity").and_then(|c| c.witness.clone());
    if report.all_pass() || witness.is_none() {
        problems.push("corrupted constant went unnoticed".into());
    }
    let text = r#"{
        "G": {"kind": "named", "name": "cyclic", "param": 2},
        "F": {"kind": "named", "name": "cyclic", "param": 4},
        "phi": {"images": [0, 1, 0, 1]}
    }"#;
    let rejection = match load_pair(text) {
        Ok(_) => {
            problems.push("non-injective map accepted".into());
            String::new()
        }
        // invalid input is what the CLI turns into exit code 2
        Err(e) if e.is_invalid_input() => e.to_string(),
        Err(e) => {
            problems.push(format!("rejected as a verification failure: {e}"));
            String::new()
        }
    };
    outcome(problems, format!("witness {}; rejection `{rejection}` (exit 2)", witness.unwrap_or_default()))
}

fn main() {
    let cats = catalogs();
    let (fusion, tables) = fusion_against_oracle(&cats);
    let results = [
        ("classification", classification(&cats)),
        ("fusion vs oracle", fusion),
        ("double-coset order", order_insensitivity(&cats, &tables)),
        ("hopf kernel", hopf_kernel()),
        ("clifford multiplicity", clifford(&cats)),
        ("ring map", ring_map(&cats, &tables)),
        ("character core", character_core()),
        ("negative controls", negative_controls()),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        println!("criterion {} {name}: {} ({})", i + 1, if r.pass { "PASS" } else { "FAIL" }, r.detail);
        failed += usize::from(!r.pass);
    }
    if failed > 0 {
        eprintln!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
