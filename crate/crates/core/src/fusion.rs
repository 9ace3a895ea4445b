//! Tensor products of simples, by the double-coset formula and by solving for
//! multiplicities in the character basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::character::Character;
use crate::cyclotomic::Cyclotomic;
use crate::double_rep::{DoubleCharacter, DoubleContext, IrrepCatalog, SimpleLabel};
use crate::error::{Error, Result};
use crate::group::{double_cosets, Elem};
use crate::linalg::{as_nonnegative_integer, solve_integer_system, to_big, Echelon, Solution, Q};
use crate::report::{Check, Report};

/// Which side of the double coset space indexes the summands of `S_{g,M} (x)
/// S_{h,N}`. In both cases the representative `x` conjugates the left factor.
///
/// The `F`-orbits on pairs of cosets `(tF_g, t'F_h)` are represented by
/// `(xF_g, F_h)` with `x` running over `F_h \ F / F_g`, so `RightLeft` is the
/// default. `LeftRight` agrees with it whenever the two double coset spaces
/// share representatives (e.g. when `F_g = F_h` or one of them is normal),
/// but not in general: on `D(S4)` it differs for 108 of the 441 products.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CosetOrder {
    /// `F_g \ F / F_h`.
    LeftRight,
    /// `F_h \ F / F_g`.
    #[default]
    RightLeft,
}

/// `(x . g, xM)` with `xM(y) = M(x^-1 y x)` on `F_{x.g} = x F_g x^-1`.
pub fn conjugate_label(ctx: &DoubleContext, x: Elem, g: Elem, m: &Character) -> (Elem, Character) {
    let xg = ctx.act(x, g);
    let target = ctx.classes_of(ctx.stabilizer(xg));
    (xg, m.conjugate_by(x, &target))
}

/// `(M restricted to F_g & F_h) * (N restricted likewise)`, induced to
/// `F_{gh}`.
pub fn m_gh(ctx: &DoubleContext, g: Elem, h: Elem, m: &Character, n: &Character) -> Result<Character> {
    let (fg, fh) = (ctx.stabilizer(g), ctx.stabilizer(h));
    let gh = ctx.g().mul(g, h);
    let fgh = ctx.stabilizer(gh);
    let meet = fg.intersection(fh);
    if !meet.is_subgroup_of(fgh) {
        return Err(Error::Fusion(format!("F_{g} & F_{h} is not contained in F_{gh}")));
    }
    let meet = ctx.classes_of(&meet);
    let product = m.restrict(&meet).product(&n.restrict(&meet));
    Ok(product.induce(&ctx.classes_of(fgh)))
}

/// A tensor product decomposed into simples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionOutcome {
    pub left: SimpleLabel,
    pub right: SimpleLabel,
    /// Sorted by label, multiplicities positive.
    pub terms: Vec<(SimpleLabel, u64)>,
}

impl FusionOutcome {
    pub fn multiplicity(&self, label: &SimpleLabel) -> u64 {
        self.terms.iter().find(|(l, _)| l == label).map_or(0, |(_, m)| *m)
    }

    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|(l, m)| l.degree * m).sum()
    }
}

impl fmt::Display for FusionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {} =", self.left, self.right)?;
        if self.terms.is_empty() {
            return write!(f, " 0");
        }
        for (i, (l, m)) in self.terms.iter().enumerate() {
            let sep = if i == 0 { " " } else { " + " };
            if *m == 1 {
                write!(f, "{sep}{l}")?;
            } else {
                write!(f, "{sep}{m}*{l}")?;
            }
        }
        Ok(())
    }
}

fn outcome(catalog: &IrrepCatalog, left: usize, right: usize, counts: BTreeMap<usize, u64>) -> FusionOutcome {
    FusionOutcome {
        left: catalog.labels()[left],
        right: catalog.labels()[right],
        terms: counts.into_iter().filter(|(_, m)| *m > 0).map(|(i, m)| (catalog.labels()[i], m)).collect(),
    }
}

/// Representatives `x` of the double cosets used for `(g, h)`.
pub fn coset_representatives(ctx: &DoubleContext, g: Elem, h: Elem, order: CosetOrder) -> Vec<Elem> {
    let (fg, fh) = (ctx.stabilizer(g), ctx.stabilizer(h));
    match order {
        CosetOrder::LeftRight => double_cosets(fg, fh).reps,
        CosetOrder::RightLeft => double_cosets(fh, fg).reps,
    }
}

/// The double-coset formula for arbitrary `g, h` in `G` with characters `m`
/// of `F_g` and `n` of `F_h`: for each representative `x`, decompose
/// `m_gh(x.g, h, xM, N)` over `F_{x.g h}` and move each constituent to its
/// canonical orbit representative. Returns catalog indices with
/// multiplicities.
pub fn fuse_characters(
    catalog: &IrrepCatalog,
    (g, m): (Elem, &Character),
    (h, n): (Elem, &Character),
    order: CosetOrder,
) -> Result<BTreeMap<usize, u64>> {
    let ctx = catalog.context();
    let mut counts = BTreeMap::new();
    for x in coset_representatives(ctx, g, h, order) {
        let (xg, xm) = conjugate_label(ctx, x, g, m);
        let p = m_gh(ctx, xg, h, &xm, n)?;
        let k = ctx.g().mul(xg, h);
        let y = ctx.action().transporter(k);
        let (r, q) = conjugate_label(ctx, y, k, &p);
        let table = ctx.stabilizer_table(r)?;
        for (j, mult) in q.decompose(&table)? {
            let idx = catalog
                .position(r, j)
                .ok_or_else(|| Error::Fusion(format!("no simple with label {r}:{j}")))?;
            *counts.entry(idx).or_insert(0) += mult;
        }
    }
    Ok(counts)
}

/// `S_left (x) S_right` by the double-coset formula.
pub fn fuse(catalog: &IrrepCatalog, left: usize, right: usize, order: CosetOrder) -> Result<FusionOutcome> {
    let ctx = catalog.context();
    let (l, r) = (catalog.labels()[left], catalog.labels()[right]);
    let m = ctx.stabilizer_table(l.g)?.characters()[l.m].clone();
    let n = ctx.stabilizer_table(r.g)?.characters()[r.m].clone();
    let counts = fuse_characters(catalog, (l.g, &m), (r.g, &n), order)?;
    let out = outcome(catalog, left, right, counts);
    if out.degree() != l.degree * r.degree {
        return Err(Error::Fusion(format!("{out}: degrees {} vs {}", out.degree(), l.degree * r.degree)));
    }
    Ok(out)
}

/// Exact solver for `sum_S m_S chi_S = chi` in the basis of simple characters.
///
/// The cyclotomic values are expanded in a common power basis, giving one
/// rational equation per coordinate. A square subsystem of maximal rank is
/// solved by fraction-free elimination and the solution is then checked
/// against every coordinate.
pub struct Oracle<'a> {
    catalog: &'a IrrepCatalog,
    conductor: usize,
    rows: Vec<usize>,
    matrix: Vec<Vec<Q>>,
}

fn coordinates(chi: &DoubleCharacter, conductor: usize) -> Vec<Q> {
    chi.values().iter().flat_map(|v| v.embed(conductor).coefficients().iter().map(to_big).collect::<Vec<_>>()).collect()
}

impl<'a> Oracle<'a> {
    pub fn new(catalog: &'a IrrepCatalog) -> Result<Self> {
        let conductor = catalog
            .characters()
            .iter()
            .flat_map(|c| c.values().iter().map(Cyclotomic::conductor))
            .fold(1, num_integer::lcm);
        let cols: Vec<Vec<Q>> = catalog.characters().iter().map(|c| coordinates(c, conductor)).collect();
        let n = cols.len();
        let width = cols.first().map_or(0, Vec::len);
        let mut ech = Echelon::new(n);
        let mut rows = Vec::new();
        let mut matrix = Vec::new();
        for k in 0..width {
            let row: Vec<Q> = cols.iter().map(|c| c[k].clone()).collect();
            if row.iter().all(Zero::is_zero) {
                continue;
            }
            if ech.insert(row.clone()) {
                rows.push(k);
                matrix.push(row);
                if rows.len() == n {
                    break;
                }
            }
        }
        if rows.len() != n {
            return Err(Error::Fusion(format!("simple characters have rank {} < {n}", rows.len())));
        }
        Ok(Oracle { catalog, conductor, rows, matrix })
    }

    /// Nonnegative integer multiplicities of `chi`, verified exactly.
    pub fn decompose(&self, chi: &DoubleCharacter) -> Result<BTreeMap<usize, u64>> {
        let target = coordinates(chi, lcm_conductor(chi, self.conductor)?);
        let mut a = Vec::with_capacity(self.rows.len());
        let mut b = Vec::with_capacity(self.rows.len());
        for (row, &k) in self.matrix.iter().zip(&self.rows) {
            let denom = row.iter().chain([&target[k]]).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let scale = Q::from_integer(denom);
            a.push(row.iter().map(|x| (x * &scale).to_integer()).collect::<Vec<_>>());
            b.push((&target[k] * &scale).to_integer());
        }
        let x = match solve_integer_system(&a, &b) {
            Solution::Unique(x) => x,
            other => return Err(Error::Fusion(format!("oracle system: {other:?}"))),
        };
        let mut counts = BTreeMap::new();
        let mut rebuilt = DoubleCharacter::zero(self.catalog.context().g().order(), self.catalog.context().f().order());
        for (i, v) in x.iter().enumerate() {
            let m = as_nonnegative_integer(v)
                .ok_or_else(|| Error::Fusion(format!("multiplicity {v} of {}", self.catalog.labels()[i])))?;
            if m > 0 {
                counts.insert(i, m);
                rebuilt.add_scaled(&self.catalog.characters()[i], m);
            }
        }
        if rebuilt != *chi {
            return Err(Error::Fusion("oracle solution does not reproduce the character".into()));
        }
        Ok(counts)
    }

    /// `S_left (x) S_right` from the product character.
    pub fn fuse(&self, left: usize, right: usize) -> Result<FusionOutcome> {
        let chars = self.catalog.characters();
        let product = chars[left].tensor(&chars[right], self.catalog.context().g());
        Ok(outcome(self.catalog, left, right, self.decompose(&product)?))
    }
}

fn lcm_conductor(chi: &DoubleCharacter, conductor: usize) -> Result<usize> {
    let c = chi.values().iter().map(Cyclotomic::conductor).fold(1, num_integer::lcm);
    if !conductor.is_multiple_of(c) {
        return Err(Error::Fusion(format!("character values need conductor {c}, basis has {conductor}")));
    }
    Ok(conductor)
}

/// One-off oracle product.
pub fn oracle_fuse(catalog: &IrrepCatalog, left: usize, right: usize) -> Result<FusionOutcome> {
    Oracle::new(catalog)?.fuse(left, right)
}

/// All ordered products, row-major in catalog order.
#[derive(Clone, Debug)]
pub struct FusionTable {
    size: usize,
    outcomes: Vec<FusionOutcome>,
}

impl FusionTable {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &FusionOutcome {
        &self.outcomes[i * self.size + j]
    }

    pub fn outcomes(&self) -> &[FusionOutcome] {
        &self.outcomes
    }

    /// `N_{ij}^k`.
    pub fn coefficient(&self, i: usize, j: usize, k: &SimpleLabel) -> u64 {
        self.get(i, j).multiplicity(k)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j).terms == self.get(j, i).terms))
    }

    /// Square matrix `N_{left, j}^k` with rows `j` and columns `k`.
    pub fn matrix_csv(&self, catalog: &IrrepCatalog, left: usize) -> String {
        let labels = catalog.labels();
        let mut out = String::from("right");
        for l in labels {
            out.push(',');
            out.push_str(&l.to_string());
        }
        out.push('\n');
        for (j, r) in labels.iter().enumerate() {
            out.push_str(&r.to_string());
            for k in labels {
                out.push(',');
                out.push_str(&self.coefficient(left, j, k).to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// The table by the double-coset formula.
pub fn fusion_table(catalog: &IrrepCatalog, order: CosetOrder) -> Result<FusionTable> {
    let n = catalog.len();
    let mut outcomes = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            outcomes.push(fuse(catalog, i, j, order)?);
        }
    }
    Ok(FusionTable { size: n, outcomes })
}

/// Compares the double-coset formula in both coset orders with the oracle on
/// every ordered pair, and checks the index balance, the unit law and
/// independence of the input representatives. Returns the verified table when
/// every product could be computed.
pub fn verify_fusion_table(catalog: &IrrepCatalog) -> (Report, Option<FusionTable>) {
    let mut report = Report::new();
    let ctx = catalog.context();
    let n = catalog.len();
    let oracle = match Oracle::new(catalog) {
        Ok(o) => o,
        Err(e) => {
            report.push(Check::fail("oracle", e.to_string()));
            return (report, None);
        }
    };
    let mut outcomes = Vec::with_capacity(n * n);
    let mut oracle_witness = None;
    let mut order_witness = None;
    let mut failed = None;
    for i in 0..n {
        for j in 0..n {
            let formula = fuse(catalog, i, j, CosetOrder::RightLeft);
            let other = fuse(catalog, i, j, CosetOrder::LeftRight);
            let expected = oracle.fuse(i, j);
            match (formula, other, expected) {
                (Ok(f), Ok(o), Ok(e)) => {
                    if oracle_witness.is_none() && f != e {
                        oracle_witness = Some(format!("formula {f}; oracle {e}"));
                    }
                    if order_witness.is_none() && f != o {
                        order_witness = Some(format!("{f}; other order {o}"));
                    }
                    outcomes.push(f);
                }
                (f, o, e) => {
                    let err = [f.err(), o.err(), e.err()].into_iter().flatten().next().expect("one failed");
                    failed.get_or_insert_with(|| format!("{}:{} ({err})", catalog.labels()[i], catalog.labels()[j]));
                }
            }
        }
    }
    report.push(Check::from_witness("products_computed", failed.clone()));
    report.push(Check::from_witness("formula_matches_oracle", oracle_witness));
    report.push(Check::from_witness("coset_order_insensitive", order_witness));

    // sum over representatives of [F : F_{x.g} & F_h] = [F : F_g][F : F_h]
    let f_order = ctx.f().order();
    let mut witness = None;
    'balance: for &g in ctx.gamma() {
        for &h in ctx.gamma() {
            for order in [CosetOrder::LeftRight, CosetOrder::RightLeft] {
                let lhs: usize = coset_representatives(ctx, g, h, order)
                    .into_iter()
                    .map(|x| f_order / ctx.stabilizer(ctx.act(x, g)).intersection(ctx.stabilizer(h)).order())
                    .sum();
                let rhs = (f_order / ctx.stabilizer(g).order()) * (f_order / ctx.stabilizer(h).order());
                if lhs != rhs {
                    witness = Some(format!("g={g} h={h} {order:?}: {lhs} vs {rhs}"));
                    break 'balance;
                }
            }
        }
    }
    report.push(Check::from_witness("index_balance", witness));

    if failed.is_some() {
        return (report, None);
    }
    let table = FusionTable { size: n, outcomes };
    let unit = catalog.unit();
    let witness = (0..n)
        .find(|&i| {
            let alone = vec![(catalog.labels()[i], 1)];
            table.get(unit, i).terms != alone || table.get(i, unit).terms != alone
        })
        .map(|i| catalog.labels()[i].to_string());
    report.push(Check::from_witness("unit_law", witness));

    // replacing the left input by a conjugate (x.g, xM) must not change the product
    let mut witness = None;
    'canon: for (i, l) in catalog.labels().iter().enumerate() {
        let Ok(table_g) = ctx.stabilizer_table(l.g) else { continue };
        let m = &table_g.characters()[l.m];
        for x in ctx.f().elements() {
            let (xg, xm) = conjugate_label(ctx, x, l.g, m);
            for (j, r) in catalog.labels().iter().enumerate() {
                let n_char = ctx.stabilizer_table(r.g).map(|t| t.characters()[r.m].clone());
                let got = n_char.and_then(|nc| fuse_characters(catalog, (xg, &xm), (r.g, &nc), CosetOrder::default()));
                match got {
                    Ok(counts) if outcome(catalog, i, j, counts.clone()).terms == table.get(i, j).terms => {}
                    _ => {
                        witness = Some(format!("{l} conjugated by {x}, right {r}"));
                        break 'canon;
                    }
                }
            }
        }
    }
    report.push(Check::from_witness("conjugate_inputs", witness));
    (report, Some(table))
}

#[cfg(test)]
mod tests;
