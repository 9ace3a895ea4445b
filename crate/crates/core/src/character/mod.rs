//! Ordinary character theory of finite groups with exact cyclotomic values.
//!
//! Every character lives on a [`Classes`] value, which describes a subgroup
//! `K` of some parent group `P` (possibly `K = P`). Keeping the parent around
//! lets restriction, induction and conjugation move characters between
//! subgroups of a common ambient group without relabeling by hand.

mod dixon;
mod export;

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, Elem, FiniteGroup, Subgroup};

pub use dixon::{dixon_prime, CharacterTable};
pub use export::{table_to_csv, table_to_json};

/// Conjugacy class data of a subgroup `K <= P`.
///
/// Local indices refer to `K` realized as a standalone group, so local element
/// `i` is the parent element `elements()[i]`.
pub struct Classes {
    parent: Arc<FiniteGroup>,
    elements: Vec<Elem>,
    local: Arc<FiniteGroup>,
    local_of_parent: Vec<Option<usize>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    exponent: usize,
}

impl fmt::Debug for Classes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Classes")
            .field("order", &self.order())
            .field("parent_order", &self.parent.order())
            .field("sizes", &self.sizes())
            .finish()
    }
}

impl Classes {
    /// Classes of a whole group, which is its own parent.
    pub fn of_group(group: Arc<FiniteGroup>) -> Arc<Classes> {
        let elements: Vec<Elem> = group.elements().collect();
        Self::build(group.clone(), elements, group)
    }

    /// Classes of a subgroup, computed independently of the parent's classes.
    pub fn of_subgroup(sub: &Subgroup) -> Arc<Classes> {
        Self::build(sub.parent().clone(), sub.elements().to_vec(), Arc::new(sub.as_group()))
    }

    fn build(parent: Arc<FiniteGroup>, elements: Vec<Elem>, local: Arc<FiniteGroup>) -> Arc<Classes> {
        let mut local_of_parent = vec![None; parent.order()];
        for (i, &g) in elements.iter().enumerate() {
            local_of_parent[g] = Some(i);
        }
        let classes = conjugacy_classes(&local);
        let mut class_of = vec![0; local.order()];
        for (c, members) in classes.iter().enumerate() {
            for &x in members {
                class_of[x] = c;
            }
        }
        let inverse_class = classes.iter().map(|c| class_of[local.inv(c[0])]).collect();
        let exponent = local.exponent();
        Arc::new(Classes { parent, elements, local, local_of_parent, classes, class_of, inverse_class, exponent })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// The subgroup as a standalone group.
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.local
    }

    /// Parent elements of the subgroup, sorted.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Classes as sets of local indices.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Local index of the minimal element of each class.
    pub fn local_rep(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    /// Parent element representing each class.
    pub fn rep(&self, class: usize) -> Elem {
        self.elements[self.classes[class][0]]
    }

    pub fn class_of_local(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Class of a parent element, if it lies in the subgroup.
    pub fn class_of(&self, g: Elem) -> Option<usize> {
        self.local_of_parent[g].map(|i| self.class_of[i])
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.local_of_parent[g].is_some()
    }

    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Class of `rep(class)^k`.
    pub fn power_class(&self, class: usize, k: usize) -> usize {
        self.class_of[self.local.pow(self.local_rep(class), k)]
    }

    /// Whether both describe the same subgroup of the same parent.
    pub fn same_subgroup(&self, other: &Classes) -> bool {
        (Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent) && self.elements == other.elements
    }

    fn contains_all(&self, other: &Classes) -> bool {
        other.elements.iter().all(|&g| self.contains(g))
    }
}

/// A class function with exact cyclotomic values, one per class.
#[derive(Clone)]
pub struct Character {
    classes: Arc<Classes>,
    values: Vec<Cyclotomic>,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values.iter().map(ToString::to_string)).finish()
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.classes.same_subgroup(&other.classes) && self.values == other.values
    }
}

impl Character {
    pub fn new(classes: Arc<Classes>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), classes.num_classes(), "one value per class");
        Character { classes, values }
    }

    pub fn trivial(classes: Arc<Classes>) -> Self {
        let values = vec![Cyclotomic::one(); classes.num_classes()];
        Character { classes, values }
    }

    /// `|K|` at the identity, zero elsewhere.
    pub fn regular(classes: Arc<Classes>) -> Self {
        let mut values = vec![Cyclotomic::from_integer(0); classes.num_classes()];
        values[0] = Cyclotomic::from_integer(classes.order() as i64);
        Character { classes, values }
    }

    pub fn classes(&self) -> &Arc<Classes> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at_class(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at a parent element of the subgroup.
    pub fn value_at(&self, g: Elem) -> Option<&Cyclotomic> {
        self.classes.class_of(g).map(|c| &self.values[c])
    }

    /// Value at the identity.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// The degree as an integer, if it is one.
    pub fn integer_degree(&self) -> Option<i64> {
        self.values[0].as_integer()
    }

    pub fn conjugate(&self) -> Character {
        Character { classes: self.classes.clone(), values: self.values.iter().map(Cyclotomic::conjugate).collect() }
    }

    /// Pointwise product; both characters must live on the same subgroup.
    pub fn product(&self, other: &Character) -> Character {
        assert!(self.classes.same_subgroup(&other.classes), "pointwise product needs a common subgroup");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Character { classes: self.classes.clone(), values }
    }

    pub fn sum(&self, other: &Character) -> Character {
        assert!(self.classes.same_subgroup(&other.classes), "sum needs a common subgroup");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Character { classes: self.classes.clone(), values }
    }

    pub fn scale(&self, k: i64) -> Character {
        let values = self.values.iter().map(|v| v.scale(Rational::from_integer(k))).collect();
        Character { classes: self.classes.clone(), values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// `(1/|K|) sum_g chi(g) conj(psi(g))`.
    pub fn inner_product(&self, other: &Character) -> Cyclotomic {
        assert!(self.classes.same_subgroup(&other.classes), "inner product needs a common subgroup");
        let mut acc = Cyclotomic::zero(1);
        for (c, members) in self.classes.classes.iter().enumerate() {
            let term = &self.values[c] * &other.values[c].conjugate();
            acc += &term.scale(Rational::from_integer(members.len() as i64));
        }
        acc.scale(Rational::new(1, self.classes.order() as i64))
    }

    /// Inner product of genuine characters, which must be a nonnegative integer.
    pub fn multiplicity(&self, other: &Character) -> Result<u64> {
        let ip = self.inner_product(other);
        ip.as_integer()
            .and_then(|n| u64::try_from(n).ok())
            .ok_or_else(|| Error::NotGenuine(format!("inner product {ip} is not a nonnegative integer")))
    }

    /// Restriction to a subgroup of the same parent.
    pub fn restrict(&self, target: &Arc<Classes>) -> Character {
        assert!(self.classes.contains_all(target), "restriction target must be a subgroup");
        let values = (0..target.num_classes())
            .map(|c| self.value_at(target.rep(c)).expect("subgroup element").clone())
            .collect();
        Character { classes: target.clone(), values }
    }

    /// Frobenius induction to an overgroup in the same parent:
    /// `a^(g) = (1/|K|) sum_{t in G, t^-1 g t in K} a(t^-1 g t)`.
    pub fn induce(&self, target: &Arc<Classes>) -> Character {
        assert!(target.contains_all(&self.classes), "induction target must be an overgroup");
        let parent = &target.parent;
        let k = self.classes.order() as i64;
        let values = (0..target.num_classes())
            .map(|c| {
                let g = target.rep(c);
                let mut counts: Vec<i64> = vec![0; self.classes.num_classes()];
                for &t in &target.elements {
                    let y = parent.conj(parent.inv(t), g);
                    if let Some(cl) = self.classes.class_of(y) {
                        counts[cl] += 1;
                    }
                }
                let mut acc = Cyclotomic::zero(1);
                for (cl, &n) in counts.iter().enumerate() {
                    if n != 0 {
                        acc += &self.values[cl].scale(Rational::from_integer(n));
                    }
                }
                acc.scale(Rational::new(1, k))
            })
            .collect();
        Character { classes: target.clone(), values }
    }

    /// The conjugate character on `x K x^-1`: `y -> a(x^-1 y x)`.
    ///
    /// `target` must describe `x K x^-1` inside the same parent.
    pub fn conjugate_by(&self, x: Elem, target: &Arc<Classes>) -> Character {
        let parent = &self.classes.parent;
        let xi = parent.inv(x);
        let values = (0..target.num_classes())
            .map(|c| {
                let y = parent.conj(xi, target.rep(c));
                self.value_at(y).expect("target is the conjugate subgroup").clone()
            })
            .collect();
        Character { classes: target.clone(), values }
    }

    /// Integer multiplicities against a character table, checked to rebuild
    /// the character exactly.
    pub fn decompose(&self, table: &CharacterTable) -> Result<Vec<(usize, u64)>> {
        let mut out = Vec::new();
        let mut rebuilt: Option<Character> = None;
        for (i, chi) in table.characters().iter().enumerate() {
            let m = self.multiplicity(chi)?;
            if m > 0 {
                out.push((i, m));
                let term = chi.scale(m as i64);
                rebuilt = Some(match rebuilt {
                    Some(r) => r.sum(&term),
                    None => term,
                });
            }
        }
        let rebuilt = rebuilt.unwrap_or_else(|| self.scale(0));
        if rebuilt != *self {
            return Err(Error::NotGenuine("not an integer combination of irreducibles".into()));
        }
        Ok(out)
    }
}
