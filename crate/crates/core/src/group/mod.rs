//! Finite groups given by multiplication tables, together with the
//! combinatorics the double constructions consume: conjugacy classes,
//! centralizers, the twisted conjugation action of `F` on `G`, stabilizers,
//! orbits and double cosets.

mod action;
mod hom;
mod named;
mod perm;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub use action::{double_cosets, orbit_and_stabilizer, orbit_representatives, phi_conjugate, Action, DoubleCosetDecomposition};
pub use hom::GroupHom;
pub use named::{make_named, FAMILIES};
pub use perm::Permutation;
pub use subgroup::{centralizer, Subgroup};

/// Element of a [`FiniteGroup`], identified by its row in the table.
pub type Elem = usize;

/// Default cap on the order of a permutation closure.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Associativity is checked on every triple up to this order and by sampling
/// above it.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 512;
const ASSOC_SAMPLES: usize = 200_000;

/// A finite group stored as its full multiplication table. Element 0 is the
/// identity.
#[derive(Clone)]
pub struct FiniteGroup {
    name: Option<String>,
    order: usize,
    table: Vec<Elem>,
    inverses: Vec<Elem>,
    perms: Option<Vec<Permutation>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    pub fn from_table(mul: Vec<Vec<Elem>>) -> crate::Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(crate::Error::InvalidGroup("empty multiplication table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(crate::Error::InvalidGroup(format!(
                    "row {a} has length {}, expected {n}",
                    row.len()
                )));
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(table, n, None)
    }

    pub(crate) fn from_flat(
        table: Vec<Elem>,
        n: usize,
        perms: Option<Vec<Permutation>>,
    ) -> crate::Result<Self> {
        let invalid = |msg: String| Err(crate::Error::InvalidGroup(msg));
        if table.iter().any(|&x| x >= n) {
            return invalid("table entry out of range".into());
        }
        for a in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for b in 0..n {
                let r = table[a * n + b];
                let c = table[b * n + a];
                if row_seen[r] || col_seen[c] {
                    return invalid(format!("not a Latin square at row/column {a}"));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
            if table[a] != a || table[a * n] != a {
                return invalid(format!("element 0 is not the identity (fails at {a})"));
            }
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = mul(a, b);
                    for c in 0..n {
                        if mul(ab, c) != mul(a, mul(b, c)) {
                            return invalid(format!("associativity fails at ({a},{b},{c})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0001);
            for _ in 0..ASSOC_SAMPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return invalid(format!("associativity fails at ({a},{b},{c})"));
                }
            }
        }
        let mut inverses = vec![0; n];
        for a in 0..n {
            let b = (0..n).find(|&b| mul(a, b) == 0).expect("Latin square row contains 0");
            if mul(b, a) != 0 {
                return invalid(format!("element {a} has no two-sided inverse"));
            }
            inverses[a] = b;
        }
        Ok(FiniteGroup { name: None, order: n, table, inverses, perms })
    }

    /// Closure of a set of permutations, with elements ordered by first
    /// discovery in a breadth-first search from the identity (right
    /// multiplication by each generator in turn).
    pub fn from_permutation_generators(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> crate::Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(crate::Error::InvalidPermutation(format!(
                    "generator {g} does not act on {degree} points"
                )));
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for gen in generators {
                let next = elements[i].compose(gen);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(crate::Error::OrderCap(cap));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&elements[a].compose(&elements[b])];
            }
        }
        Self::from_flat(table, n, Some(elements))
    }

    /// Direct product `A x B`; the pair `(a, b)` has index `a + |A| * b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x % na, x / na);
                let (ya, yb) = (y % na, y / na);
                table[x * n + y] = a.mul(xa, ya) + na * b.mul(xb, yb);
            }
        }
        let mut inverses = vec![0; n];
        for x in 0..n {
            inverses[x] = a.inv(x % na) + na * b.inv(x / na);
        }
        let name = match (&a.name, &b.name) {
            (Some(p), Some(q)) => Some(format!("{p}x{q}")),
            _ => None,
        };
        FiniteGroup { name, order: n, table, inverses, perms: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    /// `x g x^-1`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(x, g), self.inverses[x])
    }

    pub fn pow(&self, g: Elem, k: usize) -> Elem {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Rows of the multiplication table.
    pub fn table(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Permutation realization, when the group was built from permutations.
    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.perms.as_deref()
    }

    /// Human-readable element name: cycle notation for permutation groups,
    /// the index otherwise.
    pub fn element_label(&self, g: Elem) -> String {
        match &self.perms {
            Some(p) => p[g].to_string(),
            None => g.to_string(),
        }
    }

    /// Parses an element index or, for permutation groups, cycle notation.
    pub fn parse_element(&self, text: &str) -> crate::Result<Elem> {
        let text = text.trim();
        if let Ok(i) = text.parse::<usize>() {
            return if i < self.order {
                Ok(i)
            } else {
                Err(crate::Error::InvalidElement(text.to_string()))
            };
        }
        let perms = self
            .perms
            .as_ref()
            .ok_or_else(|| crate::Error::InvalidElement(text.to_string()))?;
        let degree = perms[0].degree();
        let p = Permutation::parse_cycles(degree, text)
            .map_err(|_| crate::Error::InvalidElement(text.to_string()))?;
        perms
            .iter()
            .position(|q| *q == p)
            .ok_or_else(|| crate::Error::InvalidElement(format!("{text} is not in the group")))
    }

    pub(crate) fn set_perms(&mut self, perms: Vec<Permutation>) {
        debug_assert_eq!(perms.len(), self.order);
        self.perms = Some(perms);
    }
}

/// Partition of `G` into conjugacy classes. The identity class comes first and
/// classes are ordered by their minimal element; each class is sorted.
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<Vec<Elem>> {
    let n = group.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for g in 0..n {
        if assigned[g] {
            continue;
        }
        let mut class: Vec<Elem> = group.elements().map(|x| group.conj(x, g)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    classes
}
