//! The Grothendieck ring of the double, graded by orbits, and its map onto
//! orbit sums in the integral group ring.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use num_traits::Zero;

use crate::double_rep::{DoubleContext, IrrepCatalog, SimpleLabel};
use crate::error::{Error, Result};
use crate::fusion::{conjugate_label, coset_representatives, m_gh, CosetOrder, FusionTable};
use crate::group::{Elem, FiniteGroup};
use crate::linalg::{q, Echelon, Q};
use crate::report::{Check, Report};

/// An element of `ZG`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Arc<FiniteGroup>,
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        GroupRingElement { group: group.clone(), coeffs: vec![0; group.order()] }
    }

    pub fn basis(group: &Arc<FiniteGroup>, g: Elem) -> Self {
        let mut out = Self::zero(group);
        out.coeffs[g] = 1;
        out
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::basis(group, group.identity())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coefficient(&self, g: Elem) -> i64 {
        self.coeffs[g]
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn scale(&self, k: i64) -> Self {
        GroupRingElement { group: self.group.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn add_scaled(&mut self, other: &GroupRingElement, k: i64) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += k * b;
        }
    }

    /// Nonzero coefficients keyed by element label.
    pub fn to_map(&self) -> BTreeMap<String, i64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(g, c)| (self.group.element_label(g), *c))
            .collect()
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = if g == 0 { "e".to_string() } else { self.group.element_label(g) };
            match (first, c) {
                (true, 1) => write!(f, "{name}")?,
                (true, _) => write!(f, "{c}*{name}")?,
                (false, 1) => write!(f, " + {name}")?,
                (false, _) if c < 0 => write!(f, " - {}*{name}", -c)?,
                (false, _) => write!(f, " + {c}*{name}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, other: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        out.add_scaled(other, 1);
        out
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, other: &GroupRingElement) -> GroupRingElement {
        let g = &self.group;
        let mut out = GroupRingElement::zero(g);
        for (a, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (b, &d) in other.coeffs.iter().enumerate() {
                if d != 0 {
                    out.coeffs[g.mul(a, b)] += c * d;
                }
            }
        }
        out
    }
}

/// `s(g)`: the sum of the orbit of `g` under `x . g = phi(x) g phi(x)^-1`.
pub fn orbit_sum(ctx: &DoubleContext, g: Elem) -> GroupRingElement {
    let mut out = GroupRingElement::zero(ctx.g());
    for &a in ctx.action().orbit(g) {
        out.coeffs[a] = 1;
    }
    out
}

/// Checks `s(g) s(h) = sum_x [F_{x.g h} : F_{x.g} & F_h] s(x.g h)` for all
/// `g, h` in Gamma, expanding the left side directly in `ZG`.
pub fn verify_orbit_sum_products(ctx: &DoubleContext) -> Report {
    let mut report = Report::new();
    let mut witness = None;
    'pairs: for &g in ctx.gamma() {
        for &h in ctx.gamma() {
            let direct = &orbit_sum(ctx, g) * &orbit_sum(ctx, h);
            let mut formula = GroupRingElement::zero(ctx.g());
            for x in coset_representatives(ctx, g, h, CosetOrder::default()) {
                let xg = ctx.act(x, g);
                let k = ctx.g().mul(xg, h);
                let meet = ctx.stabilizer(xg).intersection(ctx.stabilizer(h)).order();
                let index = ctx.stabilizer(k).order() / meet;
                formula.add_scaled(&orbit_sum(ctx, k), index as i64);
            }
            if direct != formula {
                witness = Some(format!("s({g}) s({h}): {direct} vs {formula}"));
                break 'pairs;
            }
        }
    }
    report.push(Check::from_witness("orbit_sum_products", witness));
    report
}

/// Structure constants `N_ij^k` of the Grothendieck ring on the simples.
#[derive(Clone, Debug)]
pub struct FusionRing {
    labels: Vec<SimpleLabel>,
    unit: usize,
    /// `constants[i][j]` lists `(k, N_ij^k)` with `N > 0`, increasing in `k`.
    constants: Vec<Vec<Vec<(usize, u64)>>>,
    /// Orbit index of each label's `g`.
    grading: Vec<usize>,
}

impl FusionRing {
    pub fn labels(&self) -> &[SimpleLabel] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.constants[i][j]
    }

    pub fn grading(&self) -> &[usize] {
        &self.grading
    }
}

/// Assembles the ring from a verified fusion table and checks the unit and
/// the grading: a product of blocks `g` and `h` lies in the blocks of the
/// elements `(x . g) h`.
pub fn build_ring(catalog: &IrrepCatalog, table: &FusionTable) -> Result<FusionRing> {
    let ctx = catalog.context();
    let n = catalog.len();
    if table.size() != n {
        return Err(Error::Fusion(format!("table of size {} for {n} simples", table.size())));
    }
    let labels = catalog.labels().to_vec();
    let position = |l: &SimpleLabel| catalog.position(l.g, l.m).expect("label from this catalog");
    let constants: Vec<Vec<Vec<(usize, u64)>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut terms: Vec<(usize, u64)> =
                        table.get(i, j).terms.iter().map(|(l, m)| (position(l), *m)).collect();
                    terms.sort_unstable();
                    terms
                })
                .collect()
        })
        .collect();
    let grading: Vec<usize> = labels.iter().map(|l| ctx.action().orbit_index(l.g)).collect();
    let unit = catalog.unit();
    for i in 0..n {
        if constants[unit][i] != [(i, 1)] || constants[i][unit] != [(i, 1)] {
            return Err(Error::Fusion(format!("{} is not a unit for {}", labels[unit], labels[i])));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (g, h) = (labels[i].g, labels[j].g);
            let allowed: BTreeSet<usize> =
                ctx.f().elements().map(|x| ctx.action().orbit_index(ctx.g().mul(ctx.act(x, g), h))).collect();
            if let Some((k, _)) = constants[i][j].iter().find(|(k, _)| !allowed.contains(&grading[*k])) {
                return Err(Error::Fusion(format!(
                    "{} x {} has a constituent {} outside the allowed blocks",
                    labels[i], labels[j], labels[*k]
                )));
            }
        }
    }
    Ok(FusionRing { labels, unit, constants, grading })
}

/// `Phi(S_{g,M}) = deg(M) s(g)`.
pub fn phi_image(ctx: &DoubleContext, label: &SimpleLabel) -> GroupRingElement {
    orbit_sum(ctx, label.g).scale(label.m_degree as i64)
}

fn group_ring_row(x: &GroupRingElement) -> Vec<Q> {
    x.coeffs.iter().map(|&c| q(c)).collect()
}

/// Basis of `{f in QG : c f = f c for all c in centralizing}`.
fn commutant(group: &Arc<FiniteGroup>, centralizing: &[Elem]) -> Echelon {
    let n = group.order();
    let mut eqs = Echelon::new(n);
    for &c in centralizing {
        // coefficient of y in c f - f c is f(c^-1 y) - f(y c^-1)
        let ci = group.inv(c);
        for y in group.elements() {
            let mut row = vec![Q::zero(); n];
            row[group.mul(ci, y)] += q(1);
            row[group.mul(y, ci)] -= q(1);
            eqs.insert(row);
        }
    }
    Echelon::from_rows(n, eqs.nullspace())
}

/// `Phi` is a unital ring homomorphism whose image is the span of the orbit
/// sums, and the orbit sums span the commutant of `phi(F)` in `QG`. When
/// `phi` is the identity the image is also compared with the centre.
pub fn verify_ring_surjection(ring: &FusionRing, ctx: &DoubleContext) -> Report {
    let mut report = Report::new();
    let images: Vec<GroupRingElement> = ring.labels.iter().map(|l| phi_image(ctx, l)).collect();
    let g = ctx.g();

    report.push(Check::from_witness(
        "unital",
        (images[ring.unit] != GroupRingElement::one(g)).then(|| images[ring.unit].to_string()),
    ));

    let mut witness = None;
    'pairs: for i in 0..ring.rank() {
        for j in 0..ring.rank() {
            let lhs = &images[i] * &images[j];
            let mut rhs = GroupRingElement::zero(g);
            for &(k, m) in ring.product(i, j) {
                rhs.add_scaled(&images[k], m as i64);
            }
            if lhs != rhs {
                witness = Some(format!("{} x {}: {lhs} vs {rhs}", ring.labels[i], ring.labels[j]));
                break 'pairs;
            }
        }
    }
    report.push(Check::from_witness("multiplicative", witness));

    // image = Z-span of orbit sums: every image is constant on orbits, and
    // each s(g) is the image of (g, trivial)
    let orbit_sums: Vec<GroupRingElement> = ctx.gamma().iter().map(|&h| orbit_sum(ctx, h)).collect();
    let mut witness = None;
    for (l, img) in ring.labels.iter().zip(&images) {
        let constant_on_orbits =
            ctx.action().orbits().iter().all(|o| o.iter().all(|&a| img.coeffs[a] == img.coeffs[o[0]]));
        if !constant_on_orbits {
            witness = Some(format!("image of {l} is not constant on orbits"));
            break;
        }
    }
    if witness.is_none() {
        for (s, &h) in orbit_sums.iter().zip(ctx.gamma()) {
            let hit = ring.labels.iter().zip(&images).any(|(l, img)| l.g == h && img == s);
            if !hit {
                witness = Some(format!("s({h}) is not an image"));
                break;
            }
        }
    }
    report.push(Check::from_witness("onto_orbit_sums", witness));

    let span = Echelon::from_rows(g.order(), orbit_sums.iter().map(group_ring_row));
    let image_of_f: Vec<Elem> = ctx.f().elements().map(|x| ctx.phi().apply(x)).collect();
    let centralizer = commutant(g, &image_of_f);
    report.push(Check::from_witness("orbit_sums_span_centralizer", compare_spans(&span, &centralizer)));

    if ctx.phi().is_identity() {
        let all: Vec<Elem> = g.elements().collect();
        let centre = commutant(g, &all);
        report.push(Check::from_witness("image_is_centre", compare_spans(&span, &centre)));
    }
    report
}

fn compare_spans(a: &Echelon, b: &Echelon) -> Option<String> {
    if a.rank() != b.rank() {
        return Some(format!("ranks {} and {}", a.rank(), b.rank()));
    }
    a.rows().iter().position(|r| !b.contains(r.clone())).map(|i| format!("basis vector {i} outside the span"))
}

/// The conjugation maps `c_{x,g}: Irr(F_g) -> Irr(F_{x.g})`, as row indices.
pub fn conjugation_map(ctx: &DoubleContext, x: Elem, g: Elem) -> Result<Vec<usize>> {
    let source = ctx.stabilizer_table(g)?;
    let xg = ctx.act(x, g);
    let target = ctx.stabilizer_table(xg)?;
    source
        .characters()
        .iter()
        .map(|m| {
            let (_, xm) = conjugate_label(ctx, x, g, m);
            target.index_of(&xm).ok_or_else(|| Error::Fusion(format!("conjugate of a simple of F_{g} is not simple")))
        })
        .collect()
}

/// Structure maps between the graded pieces: `c_{y, x.g} c_{x,g} = c_{yx,g}`,
/// `c_{x,g}` is the identity for `x` in `F_g`, and every `m_gh(M, N)` with
/// `g` in Gamma is a genuine character of `F_{gh}`.
pub fn verify_conjugation_maps(ctx: &DoubleContext) -> Report {
    let mut report = Report::new();
    let f = ctx.f();
    let mut witness = None;
    'comp: for &g in ctx.gamma() {
        for x in f.elements() {
            let cx = match conjugation_map(ctx, x, g) {
                Ok(c) => c,
                Err(e) => {
                    witness = Some(e.to_string());
                    break 'comp;
                }
            };
            if ctx.stabilizer(g).contains(x) && cx.iter().enumerate().any(|(i, &j)| i != j) {
                witness = Some(format!("c_{{{x},{g}}} is not the identity"));
                break 'comp;
            }
            let xg = ctx.act(x, g);
            for y in f.elements() {
                let cy = conjugation_map(ctx, y, xg);
                let cyx = conjugation_map(ctx, f.mul(y, x), g);
                match (cy, cyx) {
                    (Ok(cy), Ok(cyx)) if cx.iter().map(|&i| cy[i]).eq(cyx.iter().copied()) => {}
                    _ => {
                        witness = Some(format!("x={x} y={y} g={g}"));
                        break 'comp;
                    }
                }
            }
        }
    }
    report.push(Check::from_witness("conjugation_action", witness));

    let mut witness = None;
    'mgh: for &g in ctx.gamma() {
        for h in ctx.g().elements() {
            let (Ok(tg), Ok(th)) = (ctx.stabilizer_table(g), ctx.stabilizer_table(h)) else {
                witness = Some(format!("tables for g={g} h={h}"));
                break 'mgh;
            };
            let gh = ctx.g().mul(g, h);
            let Ok(tgh) = ctx.stabilizer_table(gh) else {
                witness = Some(format!("table for {gh}"));
                break 'mgh;
            };
            for m in tg.characters() {
                for n in th.characters() {
                    let ok = m_gh(ctx, g, h, m, n).and_then(|p| p.decompose(&tgh)).is_ok();
                    if !ok {
                        witness = Some(format!("g={g} h={h}"));
                        break 'mgh;
                    }
                }
            }
        }
    }
    report.push(Check::from_witness("m_gh_genuine", witness));
    report
}

#[cfg(test)]
mod tests;
