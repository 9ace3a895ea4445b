use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::{add_into, collect, Coeff, CocycleForm, HopfData, SkewPairing, Vector};
use crate::error::{Error, Result};
use crate::group::{Elem, GroupHom};

/// Largest double dimension built by default.
pub const DEFAULT_DIMENSION_CAP: usize = 1024;

fn check_cap(u: &HopfData, h: &HopfData, cap: usize) -> Result<()> {
    let dim = u.dim() * h.dim();
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    Ok(())
}

/// The double on `U (x) H` from the explicit formulas
/// `(u # a)(v # b) = l(v1, a1) l(v3, S^-1 a3) u v2 # a2 b` and
/// `S(u # a) = l(S u3, S a3) l(S u1, a1) S u2 # S a2`,
/// with the coproduct and counit of the tensor product.
pub fn build_double_direct(u: &HopfData, h: &HopfData, pairing: &SkewPairing, cap: usize) -> Result<HopfData> {
    check_cap(u, h, cap)?;
    let (nu, nh) = (u.dim(), h.dim());
    let n = nu * nh;
    let s_inv_h = h.antipode_inverse()?;
    let d2u: Vec<_> = (0..nu).map(|i| u.comul2_basis(i)).collect();
    let d2h: Vec<_> = (0..nh).map(|i| h.comul2_basis(i)).collect();

    // exchange[a][v] = sum l(v1, a1) l(v3, S^-1 a3) v2 (x) a2
    let mut exchange: Vec<Vec<Vec<((usize, usize), Coeff)>>> = vec![vec![Vec::new(); nu]; nh];
    for a in 0..nh {
        for v in 0..nu {
            let mut acc = BTreeMap::new();
            for (a1, a2, a3, c) in &d2h[a] {
                for (v1, v2, v3, d) in &d2u[v] {
                    let l1 = pairing.value(*v1, *a1);
                    if l1.is_zero() {
                        continue;
                    }
                    let l3: Coeff = s_inv_h[*a3].iter().map(|(k, e)| e * pairing.value(*v3, *k)).sum();
                    add_into(&mut acc, (*v2, *a2), c * d * l1 * l3);
                }
            }
            exchange[a][v] = collect(acc);
        }
    }

    let base = HopfData::tensor(u, h);
    let mut mult = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xu, xa) = (x / nh, x % nh);
        for y in 0..n {
            let (yv, yb) = (y / nh, y % nh);
            let mut acc = BTreeMap::new();
            for ((v2, a2), c) in &exchange[xa][yv] {
                for (p, d) in u.mul_basis(xu, *v2) {
                    for (q, e) in h.mul_basis(*a2, yb) {
                        add_into(&mut acc, p * nh + q, c * d * e);
                    }
                }
            }
            mult.push(collect(acc));
        }
    }

    let mut antipode = Vec::with_capacity(n);
    for x in 0..n {
        let (xu, xa) = (x / nh, x % nh);
        let mut acc = BTreeMap::new();
        for (u1, u2, u3, c) in &d2u[xu] {
            for (a1, a2, a3, d) in &d2h[xa] {
                let l1 = pairing.eval(u.antipode_basis(*u1), &[(*a1, Coeff::from_integer(1))]);
                if l1.is_zero() {
                    continue;
                }
                let l3 = pairing.eval(u.antipode_basis(*u3), h.antipode_basis(*a3));
                let k = c * d * l1 * l3;
                if k.is_zero() {
                    continue;
                }
                for (p, e) in u.antipode_basis(*u2) {
                    for (q, f) in h.antipode_basis(*a2) {
                        add_into(&mut acc, p * nh + q, k * e * f);
                    }
                }
            }
        }
        antipode.push(collect(acc));
    }

    Ok(HopfData {
        labels: base.labels.clone(),
        mult,
        unit: base.unit.clone(),
        comult: base.comult.clone(),
        counit: base.counit.clone(),
        antipode,
    })
}

/// The double as the cocycle twist of `U (x) H`:
/// `x . y = sigma(x1, y1) x2 y2 sigma^-1(x3, y3)`, with antipode
/// `S'(x) = U(x1) S(x2) U^-1(x3)` where `U(x) = sigma(x1, S x2)`.
pub fn build_double_by_twist(u: &HopfData, h: &HopfData, cocycle: &CocycleForm, cap: usize) -> Result<HopfData> {
    check_cap(u, h, cap)?;
    let a = HopfData::tensor(u, h);
    let n = a.dim();
    assert_eq!(cocycle.dim(), n, "cocycle must live on U (x) H");
    let d2: Vec<_> = (0..n).map(|i| a.comul2_basis(i)).collect();
    // second-factor terms grouped by the first leg
    let by_first: Vec<HashMap<usize, Vec<(usize, usize, Coeff)>>> = d2
        .iter()
        .map(|terms| {
            let mut m: HashMap<usize, Vec<(usize, usize, Coeff)>> = HashMap::new();
            for (y1, y2, y3, c) in terms {
                m.entry(*y1).or_default().push((*y2, *y3, *c));
            }
            m
        })
        .collect();

    let mut mult = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut acc = BTreeMap::new();
            for (x1, x2, x3, c) in &d2[x] {
                for (y1, s) in cocycle.sigma_row(*x1) {
                    let Some(terms) = by_first[y].get(y1) else { continue };
                    for (y2, y3, d) in terms {
                        let t = cocycle.sigma_inverse(*x3, *y3);
                        if t.is_zero() {
                            continue;
                        }
                        let k = c * d * s * t;
                        for (p, e) in a.mul_basis(*x2, *y2) {
                            add_into(&mut acc, *p, k * e);
                        }
                    }
                }
            }
            mult.push(collect(acc));
        }
    }

    let twist = cocycle.twist_unit(&a);
    let twist_inv = cocycle.twist_unit_inverse(&a);
    let mut antipode: Vec<Vector> = Vec::with_capacity(n);
    for x in 0..n {
        let mut acc = BTreeMap::new();
        for (x1, x2, x3, c) in &d2[x] {
            let k = c * twist[*x1] * twist_inv[*x3];
            if k.is_zero() {
                continue;
            }
            for (p, e) in a.antipode_basis(*x2) {
                add_into(&mut acc, *p, k * e);
            }
        }
        antipode.push(collect(acc));
    }
    Ok(HopfData { mult, antipode, ..a })
}

/// The double `D(k^G, kF)` of an injective homomorphism `phi: F -> G`
/// together with its tensor factors. Basis element `p_a # x` has index
/// `a * |F| + x`.
#[derive(Clone, Debug)]
pub struct GroupDouble {
    pub hom: GroupHom,
    pub u: HopfData,
    pub h: HopfData,
    pub pairing: SkewPairing,
    pub algebra: HopfData,
}

impl GroupDouble {
    pub fn index(&self, a: Elem, x: Elem) -> usize {
        a * self.hom.source().order() + x
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Builds the double of `phi` with the explicit formulas.
pub fn double_from_hom(phi: &GroupHom, cap: usize) -> Result<GroupDouble> {
    let (u, h, pairing) = super::pairing_from_hom(phi)?;
    let algebra = build_double_direct(&u, &h, &pairing, cap)?;
    Ok(GroupDouble { hom: phi.clone(), u, h, pairing, algebra })
}
