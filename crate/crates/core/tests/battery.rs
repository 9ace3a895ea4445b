use std::collections::BTreeSet;
use std::path::Path;

use gqd::battery::battery;
use gqd::double_rep::{catalog, DoubleContext};
use gqd::group::GroupHom;
use gqd::input::load_pair;

/// Number of F-orbits on pairs (g, x) with x fixing g, F acting by
/// y.(g, x) = (y.g, y x y^-1). Counted by brute force.
fn orbit_count(phi: &GroupHom) -> usize {
    let (g, f) = (phi.target(), phi.source());
    let act = |y: usize, a: usize| {
        let p = phi.apply(y);
        g.mul(g.mul(p, a), g.inv(p))
    };
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for a in g.elements() {
        for x in f.elements().filter(|&x| act(x, a) == a) {
            if seen.contains(&(a, x)) {
                continue;
            }
            orbits += 1;
            for y in f.elements() {
                seen.insert((act(y, a), f.mul(f.mul(y, x), f.inv(y))));
            }
        }
    }
    orbits
}

#[test]
fn simple_counts_match_brute_force() {
    let expected = [("C2", 4), ("S3", 8), ("D4", 22), ("Q8", 22), ("S3>C2", 6), ("S3>C3", 10), ("D4>Z", 16), ("C2xC2>C2", 8)];
    for (inst, (name, count)) in battery().into_iter().zip(expected) {
        assert_eq!(inst.name, name);
        let cat = catalog(&DoubleContext::new(&inst.phi)).unwrap();
        assert_eq!(orbit_count(&inst.phi), count, "{name}");
        assert_eq!(cat.len(), count, "{name}");
    }
}

#[test]
fn spec_files_match_battery() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs");
    let files = ["c2", "s3", "d4", "q8", "s3_c2", "s3_c3", "d4_centre", "c2xc2_c2"];
    for (inst, file) in battery().into_iter().zip(files) {
        let text = std::fs::read_to_string(dir.join(format!("{file}.json"))).unwrap();
        let pair = load_pair(&text).unwrap();
        assert_eq!(pair.phi.images(), inst.phi.images(), "{file}");
        assert_eq!(pair.phi.target().table(), inst.phi.target().table(), "{file}");
    }
    let text = std::fs::read_to_string(dir.join("non_injective.json")).unwrap();
    assert!(load_pair(&text).unwrap_err().is_invalid_input());
}
