use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::{Elem, FiniteGroup};
use crate::error::{Error, Result};

/// A subgroup, kept as the sorted list of its elements inside the parent.
///
/// In the double constructions a subgroup `F_g <= F` also stands for the Hopf
/// subalgebra `L(g)` it spans inside `kF`.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<Elem>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Subgroup").field(&self.elements).finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Validates that `elements` is a subgroup of `parent`.
    pub fn new(parent: &Arc<FiniteGroup>, elements: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let set: BTreeSet<Elem> = elements.into_iter().collect();
        if !set.contains(&0) {
            return Err(Error::InvalidGroup("subgroup must contain the identity".into()));
        }
        if let Some(&bad) = set.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::InvalidElement(bad.to_string()));
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(Error::InvalidGroup(format!("not closed under inverse at {a}")));
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(Error::InvalidGroup(format!("not closed under product at ({a},{b})")));
                }
            }
        }
        Ok(Subgroup { parent: parent.clone(), elements: set.into_iter().collect() })
    }

    /// Trusted constructor for sets known to be subgroups.
    pub(crate) fn from_sorted(parent: &Arc<FiniteGroup>, elements: Vec<Elem>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&0));
        Subgroup { parent: parent.clone(), elements }
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Subgroup { parent: parent.clone(), elements: parent.elements().collect() }
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Subgroup { parent: parent.clone(), elements: vec![0] }
    }

    /// Subgroup generated by the given elements.
    pub fn generated_by(parent: &Arc<FiniteGroup>, gens: &[Elem]) -> Self {
        let mut set = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = parent.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup { parent: parent.clone(), elements: set.into_iter().collect() }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of `g` in the sorted element list, which is its index in
    /// [`Subgroup::as_group`].
    pub fn position(&self, g: Elem) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elements = self.elements.iter().copied().filter(|&g| other.contains(g)).collect();
        Subgroup { parent: self.parent.clone(), elements }
    }

    /// `x K x^-1`.
    pub fn conjugate(&self, x: Elem) -> Subgroup {
        let mut elements: Vec<Elem> = self.elements.iter().map(|&k| self.parent.conj(x, k)).collect();
        elements.sort_unstable();
        Subgroup { parent: self.parent.clone(), elements }
    }

    /// Minimal-index representatives of the left cosets `tK`, sorted.
    pub fn left_coset_reps(&self) -> Vec<Elem> {
        let mut seen = vec![false; self.parent.order()];
        let mut reps = Vec::with_capacity(self.index());
        for t in self.parent.elements() {
            if seen[t] {
                continue;
            }
            reps.push(t);
            for &k in &self.elements {
                seen[self.parent.mul(t, k)] = true;
            }
        }
        reps
    }

    /// The subgroup as a standalone group; element `i` is `elements()[i]`.
    pub fn as_group(&self) -> FiniteGroup {
        let n = self.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in &self.elements {
            for &b in &self.elements {
                table.push(self.position(self.parent.mul(a, b)).expect("closed under product"));
            }
        }
        let mut group = FiniteGroup::from_flat(table, n, None).expect("subgroup table is a group");
        if let Some(perms) = self.parent.permutations() {
            group.set_perms(self.elements.iter().map(|&g| perms[g].clone()).collect());
        }
        group
    }
}

/// `C_G(g) = {x : xg = gx}`.
pub fn centralizer(group: &Arc<FiniteGroup>, g: Elem) -> Subgroup {
    let elements = group.elements().filter(|&x| group.mul(x, g) == group.mul(g, x)).collect();
    Subgroup::from_sorted(group, elements)
}
