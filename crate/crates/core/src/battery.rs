//! The standard set of test instances `(G, F, phi)`.

use std::sync::Arc;

use crate::group::{make_named, GroupHom, Subgroup};

/// A named injective homomorphism.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: &'static str,
    pub phi: GroupHom,
}

fn named(family: &str, n: i64) -> Arc<crate::group::FiniteGroup> {
    Arc::new(make_named(family, n).expect("built-in family"))
}

fn identity(name: &'static str, family: &str, n: i64) -> Instance {
    Instance { name, phi: GroupHom::identity(named(family, n)) }
}

fn inclusion(name: &'static str, family: &str, n: i64, generator: usize) -> Instance {
    let g = named(family, n);
    let sub = Subgroup::generated_by(&g, &[generator]);
    Instance { name, phi: GroupHom::inclusion(&sub) }
}

/// `D(C2)`, `D(S3)`, `D(D4)`, `D(Q8)` and the inclusions `<(1,2)> -> S3`,
/// `<(1,2,3)> -> S3`, `Z(D4) -> D4` and `C2 x 1 -> C2 x C2`.
pub fn battery() -> Vec<Instance> {
    vec![
        identity("C2", "cyclic", 2),
        identity("S3", "symmetric", 3),
        identity("D4", "dihedral", 4),
        identity("Q8", "quaternion8", 0),
        // S3 lists (), (1,2), (1,2,3), ...
        inclusion("S3>C2", "symmetric", 3, 1),
        inclusion("S3>C3", "symmetric", 3, 2),
        // r^2 in D4
        inclusion("D4>Z", "dihedral", 4, 2),
        // (1, 0) in C2 x C2
        inclusion("C2xC2>C2", "direct_product", 2, 1),
    ]
}

/// Looks up a battery instance by name.
pub fn instance(name: &str) -> Option<Instance> {
    battery().into_iter().find(|i| i.name == name)
}
