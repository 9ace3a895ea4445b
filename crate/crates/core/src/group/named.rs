use super::{Elem, FiniteGroup, Permutation, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// Families accepted by [`make_named`].
pub const FAMILIES: [&str; 5] = ["cyclic", "dihedral", "symmetric", "quaternion8", "direct_product"];

/// Builds a group from a named family.
///
/// Element orderings (identity is always element 0):
///
/// * `cyclic n` (n >= 1): element `k` is `r^k`.
/// * `dihedral n` (order `2n`, n >= 1): element `k + n*j` is `r^k s^j` with
///   `s r s = r^-1`. For `n >= 3` the group also carries its action on the
///   vertices of the `n`-gon (`r = (1,..,n)`, `s` fixes vertex 1).
/// * `symmetric n` (1 <= n <= 7): closure of `(1,2)` and `(1,..,n)` in
///   breadth-first order, so `S3` lists `(), (1,2), (1,2,3), (2,3), (1,3), (1,3,2)`.
/// * `quaternion8` (parameter ignored): `1, -1, i, -i, j, -j, k, -k`.
/// * `direct_product n` (n >= 1): `C_n x C_n`, the pair `(a, b)` at index `a + n*b`.
pub fn make_named(name: &str, parameter: i64) -> Result<FiniteGroup> {
    let bad = || Error::BadParameter { family: name.to_string(), param: parameter };
    match name {
        "cyclic" => {
            let n = usize::try_from(parameter).ok().filter(|&n| n >= 1).ok_or_else(bad)?;
            Ok(cyclic(n))
        }
        "dihedral" => {
            let n = usize::try_from(parameter).ok().filter(|&n| n >= 1).ok_or_else(bad)?;
            dihedral(n)
        }
        "symmetric" => {
            let n = usize::try_from(parameter).ok().filter(|n| (1..=7).contains(n)).ok_or_else(bad)?;
            symmetric(n)
        }
        "quaternion8" => Ok(quaternion8()),
        "direct_product" => {
            let n = usize::try_from(parameter).ok().filter(|&n| n >= 1).ok_or_else(bad)?;
            let c = cyclic(n);
            Ok(FiniteGroup::direct_product(&c, &c).with_name(format!("C{n}xC{n}")))
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    FiniteGroup::from_flat(table, n, None)
        .expect("cyclic table is a group")
        .with_name(format!("C{n}"))
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let order = 2 * n;
    let decode = |x: Elem| (x % n, x / n);
    let mut table = vec![0; order * order];
    for x in 0..order {
        for y in 0..order {
            let ((a, i), (b, j)) = (decode(x), decode(y));
            // r^a s^i r^b s^j = r^(a +- b) s^(i+j)
            let rot = if i == 0 { (a + b) % n } else { (a + n - b) % n };
            table[x * order + y] = rot + n * ((i + j) % 2);
        }
    }
    let mut group = FiniteGroup::from_flat(table, order, None)?.with_name(format!("D{n}"));
    if n >= 3 {
        let r = Permutation::from_images((0..n).map(|v| (v + 1) % n).collect())?;
        let s = Permutation::from_images((0..n).map(|v| (n - v) % n).collect())?;
        let perms = (0..order)
            .map(|x| {
                let (a, i) = decode(x);
                let mut p = Permutation::identity(n);
                for _ in 0..a {
                    p = p.compose(&r);
                }
                if i == 1 {
                    p = p.compose(&s);
                }
                p
            })
            .collect();
        group.set_perms(perms);
    }
    Ok(group)
}

fn symmetric(n: usize) -> Result<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![1, 2]])?);
        gens.push(Permutation::from_cycles(n, &[(1..=n).collect()])?);
    }
    Ok(FiniteGroup::from_permutation_generators(n, &gens, DEFAULT_ORDER_CAP)?.with_name(format!("S{n}")))
}

fn quaternion8() -> FiniteGroup {
    // index = 2*unit + sign with units 1, i, j, k
    // unit products: (unit, sign flip)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mut table = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (u, v) = (x / 2, y / 2);
            let (w, flip) = UNIT[u][v];
            let sign = (x % 2 + y % 2 + flip) % 2;
            table[x * 8 + y] = 2 * w + sign;
        }
    }
    FiniteGroup::from_flat(table, 8, None)
        .expect("quaternion table is a group")
        .with_name("Q8")
}
