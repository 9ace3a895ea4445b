//! Irreducible modules of the double `D(k^G, kF)` of an injective `phi: F -> G`.
//!
//! Simples are indexed by pairs `(g, M)` with `g` a canonical representative
//! of a twisted-conjugation orbit and `M` an irreducible character of the
//! stabilizer `F_g`. The module is `Ind_{F_g}^F M`, graded so that `t (x) m`
//! sits in degree `t . g`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::character::{Character, CharacterTable, Classes};
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{Action, Elem, FiniteGroup, GroupHom, Subgroup};
use crate::hopf::{haar_integral, HopfData};
use crate::linalg::{rank, to_big, Q};
use crate::report::{Check, Report};

/// Orbit data and cached subgroup character tables for one `phi`.
pub struct DoubleContext {
    action: Action,
    classes: Mutex<HashMap<Vec<Elem>, Arc<Classes>>>,
    tables: Mutex<HashMap<Vec<Elem>, Arc<CharacterTable>>>,
}

impl fmt::Debug for DoubleContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DoubleContext")
            .field("g_order", &self.g().order())
            .field("f_order", &self.f().order())
            .field("gamma", &self.gamma())
            .finish()
    }
}

impl DoubleContext {
    pub fn new(phi: &GroupHom) -> Arc<Self> {
        Arc::new(DoubleContext {
            action: Action::new(phi),
            classes: Mutex::new(HashMap::new()),
            tables: Mutex::new(HashMap::new()),
        })
    }

    pub fn phi(&self) -> &GroupHom {
        self.action.phi()
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        self.phi().target()
    }

    pub fn f(&self) -> &Arc<FiniteGroup> {
        self.phi().source()
    }

    /// `|G| |F|`.
    pub fn dim(&self) -> usize {
        self.g().order() * self.f().order()
    }

    /// Canonical orbit representatives, increasing.
    pub fn gamma(&self) -> &[Elem] {
        self.action.representatives()
    }

    pub fn stabilizer(&self, g: Elem) -> &Subgroup {
        self.action.stabilizer(g)
    }

    /// `x . g`.
    pub fn act(&self, x: Elem, g: Elem) -> Elem {
        self.action.act(x, g)
    }

    pub fn classes_of(&self, sub: &Subgroup) -> Arc<Classes> {
        let mut cache = self.classes.lock().expect("class cache");
        cache.entry(sub.elements().to_vec()).or_insert_with(|| Classes::of_subgroup(sub)).clone()
    }

    pub fn table_of(&self, sub: &Subgroup) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.tables.lock().expect("table cache").get(sub.elements()) {
            return Ok(t.clone());
        }
        let table = Arc::new(CharacterTable::compute(self.classes_of(sub))?);
        self.tables.lock().expect("table cache").insert(sub.elements().to_vec(), table.clone());
        Ok(table)
    }

    pub fn stabilizer_table(&self, g: Elem) -> Result<Arc<CharacterTable>> {
        self.table_of(self.stabilizer(g))
    }
}

/// A simple module `S_{g,M}`: `g` in Gamma and `m` a row of the table of `F_g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleLabel {
    pub g: Elem,
    pub m: usize,
    pub m_degree: u64,
    pub degree: u64,
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.g, self.m)
    }
}

/// A class function on the basis `p_a # x` of the double, dense with index
/// `a * |F| + x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCharacter {
    f_order: usize,
    values: Vec<Cyclotomic>,
}

impl DoubleCharacter {
    pub fn zero(g_order: usize, f_order: usize) -> Self {
        DoubleCharacter { f_order, values: vec![Cyclotomic::zero(1); g_order * f_order] }
    }

    pub fn value(&self, a: Elem, x: Elem) -> &Cyclotomic {
        &self.values[a * self.f_order + x]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Extends linearly to an element of the double.
    pub fn eval(&self, v: &[(usize, Rational)]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(1);
        for (i, c) in v {
            acc += &self.values[*i].scale(*c);
        }
        acc
    }

    /// Degree, i.e. the value at the unit `sum_a p_a # e`.
    pub fn degree(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(1);
        for a in 0..self.values.len() / self.f_order {
            acc += self.value(a, 0);
        }
        acc
    }

    pub fn add_scaled(&mut self, other: &DoubleCharacter, k: u64) {
        for (x, y) in self.values.iter_mut().zip(&other.values) {
            if !y.is_zero() {
                *x += &y.scale(Rational::from_integer(k as i64));
            }
        }
    }

    /// Character of `V (x) W`, using the tensor coproduct
    /// `Delta(p_a # x) = sum_{bc = a} (p_b # x) (x) (p_c # x)`.
    pub fn tensor(&self, other: &DoubleCharacter, g: &FiniteGroup) -> DoubleCharacter {
        let nf = self.f_order;
        let mut out = DoubleCharacter::zero(g.order(), nf);
        for b in g.elements() {
            for c in g.elements() {
                let a = g.mul(b, c);
                for x in 0..nf {
                    let (u, v) = (self.value(b, x), other.value(c, x));
                    if u.is_zero() || v.is_zero() {
                        continue;
                    }
                    out.values[a * nf + x] += &(u * v);
                }
            }
        }
        out
    }
}

/// `chi(p_a # x) = sum over t in reps with t . g = a and t^-1 x t in F_g of
/// chi_M(t^-1 x t)`, where `reps` is any system of left coset
/// representatives of `F_g` in `F`.
pub fn simple_character_with_reps(ctx: &DoubleContext, g: Elem, m: &Character, reps: &[Elem]) -> DoubleCharacter {
    let f = ctx.f();
    let stab = ctx.stabilizer(g);
    let mut out = DoubleCharacter::zero(ctx.g().order(), f.order());
    for &t in reps {
        let a = ctx.act(t, g);
        let ti = f.inv(t);
        for x in f.elements() {
            let y = f.mul(f.mul(ti, x), t);
            if stab.contains(y) {
                out.values[a * f.order() + x] += m.value_at(y).expect("y lies in F_g");
            }
        }
    }
    out
}

pub fn simple_character(ctx: &DoubleContext, label: &SimpleLabel) -> Result<DoubleCharacter> {
    let table = ctx.stabilizer_table(label.g)?;
    let m = table.get(label.m).ok_or_else(|| Error::InvalidLabel(label.to_string()))?;
    Ok(simple_character_with_reps(ctx, label.g, m, &ctx.stabilizer(label.g).left_coset_reps()))
}

/// All simples of the double with their characters.
#[derive(Debug)]
pub struct IrrepCatalog {
    context: Arc<DoubleContext>,
    labels: Vec<SimpleLabel>,
    characters: Vec<DoubleCharacter>,
    index: HashMap<(Elem, usize), usize>,
}

/// Enumerates `(g, M)` in Gamma order, then table order, and checks
/// `sum deg^2 = |G||F|`.
pub fn catalog(ctx: &Arc<DoubleContext>) -> Result<IrrepCatalog> {
    let f_order = ctx.f().order() as u64;
    let mut labels = Vec::new();
    let mut characters = Vec::new();
    for &g in ctx.gamma() {
        let table = ctx.stabilizer_table(g)?;
        let index = f_order / ctx.stabilizer(g).order() as u64;
        let reps = ctx.stabilizer(g).left_coset_reps();
        for (m, chi) in table.characters().iter().enumerate() {
            let m_degree = chi
                .integer_degree()
                .and_then(|d| u64::try_from(d).ok())
                .ok_or_else(|| Error::CharacterTable("non-integral degree".into()))?;
            labels.push(SimpleLabel { g, m, m_degree, degree: index * m_degree });
            characters.push(simple_character_with_reps(ctx, g, chi, &reps));
        }
    }
    let got: u64 = labels.iter().map(|l| l.degree * l.degree).sum();
    let expected = ctx.dim() as u64;
    if got != expected {
        return Err(Error::IncompleteCatalog { got, expected });
    }
    let index = labels.iter().enumerate().map(|(i, l)| ((l.g, l.m), i)).collect();
    Ok(IrrepCatalog { context: ctx.clone(), labels, characters, index })
}

impl IrrepCatalog {
    pub fn context(&self) -> &Arc<DoubleContext> {
        &self.context
    }

    pub fn labels(&self) -> &[SimpleLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn character(&self, i: usize) -> &DoubleCharacter {
        &self.characters[i]
    }

    pub fn characters(&self) -> &[DoubleCharacter] {
        &self.characters
    }

    pub fn position(&self, g: Elem, m: usize) -> Option<usize> {
        self.index.get(&(g, m)).copied()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.labels.iter().map(|l| l.degree).collect()
    }

    /// Index of `S_{e, trivial}`.
    pub fn unit(&self) -> usize {
        self.position(0, 0).expect("identity orbit and trivial character come first")
    }

    /// Parses `g:M` with `g` an element index or label of `G` (which must be a
    /// canonical representative) and `M` a row index.
    pub fn parse_label(&self, text: &str) -> Result<usize> {
        let bad = || Error::InvalidLabel(format!("`{text}` (expected g:M)"));
        let (g, m) = text.rsplit_once(':').ok_or_else(bad)?;
        let g = match g.trim().parse::<usize>() {
            Ok(i) if i < self.context.g().order() => i,
            Ok(_) => return Err(bad()),
            Err(_) => self.context.g().parse_element(g.trim())?,
        };
        let m: usize = m.trim().parse().map_err(|_| bad())?;
        if self.context.action().representative(g) != g {
            return Err(Error::InvalidLabel(format!(
                "{} is not a canonical orbit representative (use {})",
                g,
                self.context.action().representative(g)
            )));
        }
        self.position(g, m).ok_or_else(bad)
    }

    /// Rank of the characters as vectors over `Q`.
    pub fn character_rank(&self) -> usize {
        let rows = rational_rows(&self.characters);
        let width = rows.first().map_or(0, Vec::len);
        rank(&rows, width)
    }
}

/// Expands cyclotomic vectors over a common power basis into rational rows.
pub(crate) fn rational_rows(chars: &[DoubleCharacter]) -> Vec<Vec<Q>> {
    let conductor = chars
        .iter()
        .flat_map(|c| c.values.iter().map(Cyclotomic::conductor))
        .fold(1, num_integer::lcm);
    chars
        .iter()
        .map(|c| {
            c.values
                .iter()
                .flat_map(|v| v.embed(conductor).coefficients().iter().map(to_big).collect::<Vec<_>>())
                .collect()
        })
        .collect()
}

/// `m(V, W) = sum chi_V(S L1) chi_W(L2)` for the Haar integral `L`; checks
/// that the catalog is orthonormal for this form.
pub fn verify_orthonormality(catalog: &IrrepCatalog, double: &HopfData) -> Report {
    let mut report = Report::new();
    let haar = match haar_integral(double) {
        Ok(h) => h,
        Err(e) => {
            report.push(Check::fail("orthonormality", e.to_string()));
            return report;
        }
    };
    // (S L1, L2) as pairs of vectors
    let split: Vec<(Vec<(usize, Rational)>, usize, Rational)> = double
        .comul(&haar)
        .into_iter()
        .map(|((i, j), c)| (double.antipode_basis(i).clone(), j, c))
        .collect();
    let mut witness = None;
    'outer: for (i, v) in catalog.characters.iter().enumerate() {
        let left: Vec<Cyclotomic> = split.iter().map(|(s, _, _)| v.eval(s)).collect();
        for (j, w) in catalog.characters.iter().enumerate() {
            let mut acc = Cyclotomic::zero(1);
            for ((_, k, c), l) in split.iter().zip(&left) {
                let r = &w.values[*k];
                if l.is_zero() || r.is_zero() {
                    continue;
                }
                acc += &(l * r).scale(*c);
            }
            let expected = Cyclotomic::from_integer(i64::from(i == j));
            if acc != expected {
                witness = Some(format!("m({}, {}) = {acc}", catalog.labels[i], catalog.labels[j]));
                break 'outer;
            }
        }
    }
    report.push(Check::from_witness("orthonormality", witness));
    report
}

/// Values `chi(p_a # e)` of a simple, which must be supported on the orbit of
/// its `g` and constant there with value `deg M`.
pub fn restrict_to_ku(catalog: &IrrepCatalog, i: usize) -> Result<Vec<(Elem, Cyclotomic)>> {
    let ctx = &catalog.context;
    let label = catalog.labels[i];
    let chi = &catalog.characters[i];
    let orbit = ctx.action().orbit(label.g);
    let mut out = Vec::new();
    for a in ctx.g().elements() {
        let v = chi.value(a, 0);
        if v.is_zero() {
            continue;
        }
        if orbit.binary_search(&a).is_err() {
            return Err(Error::Hopf(format!("{label}: support at {a} outside the orbit of {}", label.g)));
        }
        out.push((a, v.clone()));
    }
    let expected = Cyclotomic::from_integer(label.m_degree as i64);
    if out.len() != orbit.len() || out.iter().any(|(_, v)| *v != expected) {
        return Err(Error::Hopf(format!("{label}: restriction is not deg(M) times the orbit indicator")));
    }
    Ok(out)
}

/// Both sides of the multiplicity identity for the one-dimensional
/// `k^G`-module at `g`: `m(g, g induced then restricted)` read off the catalog
/// as `sum_S chi_S(p_g # e)^2`, against `(dim A)|F_g| / (|F||G|)`.
pub fn clifford_multiplicities(catalog: &IrrepCatalog, g: Elem) -> (Rational, Rational) {
    let ctx = &catalog.context;
    let mut through_double = Cyclotomic::zero(1);
    for chi in &catalog.characters {
        let v = chi.value(g, 0);
        through_double += &(v * v);
    }
    let through_double = through_double.as_rational().expect("values at p_g # e are integers");
    let (ng, nf) = (ctx.g().order() as i64, ctx.f().order() as i64);
    let stab = ctx.stabilizer(g).order() as i64;
    (through_double, Rational::new(ctx.dim() as i64 * stab, nf * ng))
}

pub fn clifford_multiplicity_check(catalog: &IrrepCatalog) -> Report {
    let ctx = &catalog.context;
    let mut report = Report::new();
    let mut witness = None;
    for &g in ctx.gamma() {
        let (lhs, rhs) = clifford_multiplicities(catalog, g);
        // the induced module kF (x) k_g has a g-isotypic part of size |F_g|
        let direct = ctx.f().elements().filter(|&x| ctx.act(x, g) == g).count() as i64;
        if lhs != rhs || lhs != Rational::from_integer(direct) {
            witness = Some(format!("g={}: {lhs} vs {rhs} (direct {direct})", ctx.g().element_label(g)));
            break;
        }
    }
    report.push(Check::from_witness("clifford_multiplicity", witness));

    let mut witness = None;
    'orbit: for (i, label) in catalog.labels.iter().enumerate() {
        if let Err(e) = restrict_to_ku(catalog, i) {
            witness = Some(e.to_string());
            break 'orbit;
        }
        // the k^G-weights occurring in S_{g,M} form exactly the orbit of g
        let support: Vec<Elem> =
            ctx.g().elements().filter(|&a| !catalog.characters[i].value(a, 0).is_zero()).collect();
        if support != ctx.action().orbit(label.g) {
            witness = Some(format!("{label}: weights {support:?}"));
            break 'orbit;
        }
    }
    report.push(Check::from_witness("restriction_to_function_algebra", witness));

    let total: u64 = catalog.labels.iter().map(|l| l.degree * l.degree).sum();
    report.push(Check::from_witness(
        "completeness",
        (total != ctx.dim() as u64).then(|| format!("sum of squared degrees {total}, expected {}", ctx.dim())),
    ));
    let r = catalog.character_rank();
    report.push(Check::from_witness(
        "linear_independence",
        (r != catalog.len()).then(|| format!("rank {r} for {} characters", catalog.len())),
    ));
    report
}

/// Values of `chi` on the basis, as a map for JSON export.
pub fn character_entries(catalog: &IrrepCatalog, i: usize) -> Vec<(Elem, Elem, String)> {
    let ctx = &catalog.context;
    let chi = &catalog.characters[i];
    let mut out = Vec::new();
    for a in ctx.g().elements() {
        for x in ctx.f().elements() {
            let v = chi.value(a, x);
            if !v.is_zero() {
                out.push((a, x, v.to_string()));
            }
        }
    }
    out
}
