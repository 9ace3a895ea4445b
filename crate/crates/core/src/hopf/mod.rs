//! Finite-dimensional Hopf algebras given by exact sparse structure constants,
//! and the generalized quantum double built from a skew pairing.

mod double;
mod pairing;
mod verify;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use double::{build_double_by_twist, build_double_direct, double_from_hom, GroupDouble, DEFAULT_DIMENSION_CAP};
pub use pairing::{pairing_from_hom, CocycleForm, SkewPairing};
pub use verify::{haar_integral, verify_hopf_axioms, verify_normality_ku, verify_swap_duality};

/// Exact rational coefficient.
pub type Coeff = Rational;

/// Sparse vector: sorted basis indices with nonzero coefficients.
pub type Vector = Vec<(usize, Coeff)>;

/// Sparse element of `A (x) A`.
pub type Vector2 = Vec<((usize, usize), Coeff)>;

fn collect<K: Ord>(acc: BTreeMap<K, Coeff>) -> Vec<(K, Coeff)> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub(crate) fn add_into<K: Ord + Copy>(acc: &mut BTreeMap<K, Coeff>, k: K, c: Coeff) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(k).or_insert_with(Coeff::zero);
    *slot += c;
}

pub fn basis_vector(i: usize) -> Vector {
    vec![(i, Coeff::one())]
}

/// A Hopf algebra on the basis `e_0 .. e_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    labels: Vec<String>,
    /// `mult[i*n + j]` is `e_i e_j`.
    mult: Vec<Vector>,
    unit: Vector,
    comult: Vec<Vector2>,
    counit: Vec<Coeff>,
    /// Column `i` is `S(e_i)`.
    antipode: Vec<Vector>,
}

impl HopfData {
    /// Assembles a Hopf algebra from raw structure constants without checking
    /// the axioms; see [`verify_hopf_axioms`].
    pub fn from_parts(
        labels: Vec<String>,
        mult: Vec<Vector>,
        unit: Vector,
        comult: Vec<Vector2>,
        counit: Vec<Coeff>,
        antipode: Vec<Vector>,
    ) -> Self {
        let n = labels.len();
        assert_eq!(mult.len(), n * n);
        assert_eq!(comult.len(), n);
        assert_eq!(counit.len(), n);
        assert_eq!(antipode.len(), n);
        HopfData { labels, mult, unit, comult, counit, antipode }
    }

    /// `kF` with grouplike basis.
    pub fn group_algebra(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut mult = Vec::with_capacity(n * n);
        for a in group.elements() {
            for b in group.elements() {
                mult.push(basis_vector(group.mul(a, b)));
            }
        }
        HopfData {
            labels: group.elements().map(|g| group.element_label(g)).collect(),
            mult,
            unit: basis_vector(0),
            comult: group.elements().map(|g| vec![((g, g), Coeff::one())]).collect(),
            counit: vec![Coeff::one(); n],
            antipode: group.elements().map(|g| basis_vector(group.inv(g))).collect(),
        }
    }

    /// `k^G` with basis of point functions `p_g`.
    pub fn function_algebra(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut mult = vec![Vec::new(); n * n];
        for a in group.elements() {
            mult[a * n + a] = basis_vector(a);
        }
        let mut comult = vec![Vec::new(); n];
        for a in group.elements() {
            for b in group.elements() {
                comult[group.mul(a, b)].push(((a, b), Coeff::one()));
            }
        }
        for c in &mut comult {
            c.sort();
        }
        HopfData {
            labels: group.elements().map(|g| format!("p[{}]", group.element_label(g))).collect(),
            mult,
            unit: group.elements().map(|g| (g, Coeff::one())).collect(),
            comult,
            counit: group.elements().map(|g| if g == 0 { Coeff::one() } else { Coeff::zero() }).collect(),
            antipode: group.elements().map(|g| basis_vector(group.inv(g))).collect(),
        }
    }

    /// Tensor product Hopf algebra; `e_i (x) f_j` has index `i * dim(B) + j`.
    pub fn tensor(a: &HopfData, b: &HopfData) -> Self {
        let (na, nb) = (a.dim(), b.dim());
        let n = na * nb;
        let idx = |i: usize, j: usize| i * nb + j;
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let (i1, i2) = (i / nb, i % nb);
                let (j1, j2) = (j / nb, j % nb);
                let mut acc = BTreeMap::new();
                for (k1, c1) in a.mul_basis(i1, j1) {
                    for (k2, c2) in b.mul_basis(i2, j2) {
                        add_into(&mut acc, idx(*k1, *k2), c1 * c2);
                    }
                }
                mult.push(collect(acc));
            }
        }
        let mut unit = BTreeMap::new();
        for (i, c) in &a.unit {
            for (j, d) in &b.unit {
                add_into(&mut unit, idx(*i, *j), c * d);
            }
        }
        let mut comult = Vec::with_capacity(n);
        let mut antipode = Vec::with_capacity(n);
        let mut counit = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        for i in 0..n {
            let (i1, i2) = (i / nb, i % nb);
            let mut acc = BTreeMap::new();
            for ((p, q), c) in &a.comult[i1] {
                for ((r, s), d) in &b.comult[i2] {
                    add_into(&mut acc, (idx(*p, *r), idx(*q, *s)), c * d);
                }
            }
            comult.push(collect(acc));
            let mut acc = BTreeMap::new();
            for (p, c) in &a.antipode[i1] {
                for (r, d) in &b.antipode[i2] {
                    add_into(&mut acc, idx(*p, *r), c * d);
                }
            }
            antipode.push(collect(acc));
            counit.push(a.counit[i1] * b.counit[i2]);
            labels.push(format!("{}#{}", a.labels[i1], b.labels[i2]));
        }
        HopfData { labels, mult, unit: collect(unit), comult, counit, antipode }
    }

    /// Opposite algebra; the antipode becomes `S^-1`.
    pub fn op(&self) -> Result<Self> {
        let n = self.dim();
        let mut mult = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = self.mult[j * n + i].clone();
            }
        }
        Ok(HopfData { mult, antipode: self.antipode_inverse()?, ..self.clone() })
    }

    /// Columns of `S^-1`, by exact matrix inversion.
    pub fn antipode_inverse(&self) -> Result<Vec<Vector>> {
        use crate::linalg::{to_big, to_small, Echelon, Q};
        let n = self.dim();
        // rows of [S | I] where S has columns S(e_i)
        let mut rows = vec![vec![Q::zero(); 2 * n]; n];
        for (i, col) in self.antipode.iter().enumerate() {
            for (k, c) in col {
                rows[*k][i] = to_big(c);
            }
            rows[i][n + i] = Q::one();
        }
        let e = Echelon::from_rows(2 * n, rows);
        if e.pivots().iter().take(n).copied().ne(0..n) {
            return Err(Error::Hopf("antipode is not invertible".into()));
        }
        let mut cols = vec![Vec::new(); n];
        for (r, row) in e.rows().iter().enumerate() {
            // row r of S^-1 sits in the right half
            for (j, v) in row[n..].iter().enumerate() {
                if !v.is_zero() {
                    let c = to_small(v).ok_or_else(|| Error::Hopf("coefficient overflow".into()))?;
                    cols[j].push((r, c));
                }
            }
        }
        Ok(cols)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i * self.dim() + j]
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn comul_basis(&self, i: usize) -> &Vector2 {
        &self.comult[i]
    }

    pub fn counit_basis(&self, i: usize) -> Coeff {
        self.counit[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &Vector {
        &self.antipode[i]
    }

    pub fn mul(&self, a: &[(usize, Coeff)], b: &[(usize, Coeff)]) -> Vector {
        let mut acc = BTreeMap::new();
        for (i, c) in a {
            for (j, d) in b {
                let cd = c * d;
                for (k, e) in self.mul_basis(*i, *j) {
                    add_into(&mut acc, *k, cd * e);
                }
            }
        }
        collect(acc)
    }

    pub fn comul(&self, a: &[(usize, Coeff)]) -> Vector2 {
        let mut acc = BTreeMap::new();
        for (i, c) in a {
            for (k, d) in &self.comult[*i] {
                add_into(&mut acc, *k, c * d);
            }
        }
        collect(acc)
    }

    pub fn counit(&self, a: &[(usize, Coeff)]) -> Coeff {
        a.iter().map(|(i, c)| c * self.counit[*i]).sum()
    }

    pub fn antipode(&self, a: &[(usize, Coeff)]) -> Vector {
        let mut acc = BTreeMap::new();
        for (i, c) in a {
            for (k, d) in &self.antipode[*i] {
                add_into(&mut acc, *k, c * d);
            }
        }
        collect(acc)
    }

    /// `(Delta (x) id) Delta (e_i)` as `(i1, i2, i3, c)`.
    pub fn comul2_basis(&self, i: usize) -> Vec<(usize, usize, usize, Coeff)> {
        let mut acc = BTreeMap::new();
        for ((a, b), c) in &self.comult[i] {
            for ((p, q), d) in &self.comult[*a] {
                add_into(&mut acc, (*p, *q, *b), c * d);
            }
        }
        collect(acc).into_iter().map(|((p, q, r), c)| (p, q, r, c)).collect()
    }

    /// Relabels the basis: old index `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> HopfData {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let map_v = |v: &Vector| -> Vector {
            let mut w: Vector = v.iter().map(|(i, c)| (perm[*i], *c)).collect();
            w.sort();
            w
        };
        let mut labels = vec![String::new(); n];
        let mut mult = vec![Vec::new(); n * n];
        let mut comult = vec![Vec::new(); n];
        let mut counit = vec![Coeff::zero(); n];
        let mut antipode = vec![Vec::new(); n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
            for j in 0..n {
                mult[perm[i] * n + perm[j]] = map_v(&self.mult[i * n + j]);
            }
            let mut c: Vector2 = self.comult[i].iter().map(|((a, b), c)| ((perm[*a], perm[*b]), *c)).collect();
            c.sort();
            comult[perm[i]] = c;
            counit[perm[i]] = self.counit[i];
            antipode[perm[i]] = map_v(&self.antipode[i]);
        }
        HopfData { labels, mult, unit: map_v(&self.unit), comult, counit, antipode }
    }

    /// First structure constant where two algebras on the same basis differ.
    pub fn first_difference(&self, other: &HopfData) -> Option<String> {
        let n = self.dim();
        if n != other.dim() {
            return Some(format!("dimensions {n} and {}", other.dim()));
        }
        if self.unit != other.unit {
            return Some("unit".into());
        }
        for i in 0..n {
            for j in 0..n {
                if self.mul_basis(i, j) != other.mul_basis(i, j) {
                    return Some(format!(
                        "product e{i}*e{j}: {} vs {}",
                        self.format_vector(self.mul_basis(i, j)),
                        other.format_vector(other.mul_basis(i, j))
                    ));
                }
            }
        }
        for i in 0..n {
            if self.comult[i] != other.comult[i] {
                return Some(format!("coproduct of e{i}"));
            }
            if self.counit[i] != other.counit[i] {
                return Some(format!("counit of e{i}"));
            }
            if self.antipode[i] != other.antipode[i] {
                return Some(format!(
                    "antipode of e{i}: {} vs {}",
                    self.format_vector(&self.antipode[i]),
                    other.format_vector(&other.antipode[i])
                ));
            }
        }
        None
    }

    /// Copy with one product coefficient negated (or, if `e_i e_j = 0`, set
    /// to `e_0`). Used as a negative control for the axiom checker.
    pub fn corrupted(&self, i: usize, j: usize) -> HopfData {
        let mut out = self.clone();
        let n = self.dim();
        let slot = &mut out.mult[i * n + j];
        match slot.first_mut() {
            Some((_, c)) => *c = -*c,
            None => *slot = basis_vector(0),
        }
        out
    }

    pub fn format_vector(&self, v: &[(usize, Coeff)]) -> String {
        if v.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (i, c)) in v.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            if !c.is_one() {
                let _ = write!(s, "{c}*");
            }
            s.push_str(&self.labels[*i]);
        }
        s
    }

    /// Labels and sparse structure constants with coefficients as `"p/q"`.
    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let q = |c: &Coeff| c.to_string();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j) {
                    mult.push(json!([i, j, k, q(c)]));
                }
            }
        }
        let mut comult = Vec::new();
        for (i, terms) in self.comult.iter().enumerate() {
            for ((j, k), c) in terms {
                comult.push(json!([i, j, k, q(c)]));
            }
        }
        let mut antipode = Vec::new();
        for (i, col) in self.antipode.iter().enumerate() {
            for (k, c) in col {
                antipode.push(json!([k, i, q(c)]));
            }
        }
        json!({
            "dim": n,
            "labels": self.labels,
            "mult": mult,
            "unit": self.unit.iter().map(|(i, c)| json!([i, q(c)])).collect::<Vec<_>>(),
            "comult": comult,
            "counit": self.counit.iter().map(q).collect::<Vec<_>>(),
            "antipode": antipode,
        })
    }
}

#[cfg(test)]
mod tests;
