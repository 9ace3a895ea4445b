use std::collections::BTreeSet;

use super::{Elem, GroupHom, Subgroup};

/// `x . g = phi(x) g phi(x)^-1`.
pub fn phi_conjugate(phi: &GroupHom, x: Elem, g: Elem) -> Elem {
    phi.target().conj(phi.apply(x), g)
}

/// Orbit of `g` under the twisted conjugation action (sorted) and its
/// stabilizer `F_g = {x : phi(x) in C_G(g)}`.
pub fn orbit_and_stabilizer(phi: &GroupHom, g: Elem) -> (Vec<Elem>, Subgroup) {
    let f = phi.source();
    let orbit: BTreeSet<Elem> = f.elements().map(|x| phi_conjugate(phi, x, g)).collect();
    let stab = f.elements().filter(|&x| phi_conjugate(phi, x, g) == g).collect();
    (orbit.into_iter().collect(), Subgroup::from_sorted(f, stab))
}

/// One representative per orbit: the minimal element index, in increasing
/// order.
pub fn orbit_representatives(phi: &GroupHom) -> Vec<Elem> {
    Action::new(phi).representatives().to_vec()
}

/// Precomputed orbit structure of the twisted conjugation action of `F` on `G`.
#[derive(Clone, Debug)]
pub struct Action {
    phi: GroupHom,
    reps: Vec<Elem>,
    orbits: Vec<Vec<Elem>>,
    orbit_of: Vec<usize>,
    stabilizers: Vec<Subgroup>,
    transporter: Vec<Elem>,
}

impl Action {
    pub fn new(phi: &GroupHom) -> Self {
        let g_order = phi.target().order();
        let f = phi.source();
        let mut orbit_of = vec![usize::MAX; g_order];
        let mut transporter = vec![0; g_order];
        let mut reps = Vec::new();
        let mut orbits = Vec::new();
        for g in 0..g_order {
            if orbit_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            let mut orbit = Vec::new();
            for x in f.elements() {
                let h = phi_conjugate(phi, x, g);
                if orbit_of[h] == usize::MAX {
                    orbit_of[h] = id;
                    orbit.push(h);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        // minimal y with y . h = rep(h)
        for h in 0..g_order {
            let rep = reps[orbit_of[h]];
            transporter[h] = f
                .elements()
                .find(|&y| phi_conjugate(phi, y, h) == rep)
                .expect("h lies in the orbit of its representative");
        }
        let stabilizers = (0..g_order).map(|g| orbit_and_stabilizer(phi, g).1).collect();
        Action { phi: phi.clone(), reps, orbits, orbit_of, stabilizers, transporter }
    }

    pub fn phi(&self) -> &GroupHom {
        &self.phi
    }

    /// The set `Gamma` of canonical orbit representatives.
    pub fn representatives(&self) -> &[Elem] {
        &self.reps
    }

    pub fn orbits(&self) -> &[Vec<Elem>] {
        &self.orbits
    }

    /// Index into [`Action::representatives`] of the orbit containing `g`.
    pub fn orbit_index(&self, g: Elem) -> usize {
        self.orbit_of[g]
    }

    pub fn orbit(&self, g: Elem) -> &[Elem] {
        &self.orbits[self.orbit_of[g]]
    }

    pub fn representative(&self, g: Elem) -> Elem {
        self.reps[self.orbit_of[g]]
    }

    pub fn stabilizer(&self, g: Elem) -> &Subgroup {
        &self.stabilizers[g]
    }

    /// Minimal `y in F` with `y . g` equal to the representative of its orbit.
    pub fn transporter(&self, g: Elem) -> Elem {
        self.transporter[g]
    }

    pub fn act(&self, x: Elem, g: Elem) -> Elem {
        phi_conjugate(&self.phi, x, g)
    }
}

/// Partition of the parent group into double cosets `K x L`.
#[derive(Clone, Debug)]
pub struct DoubleCosetDecomposition {
    pub left: Subgroup,
    pub right: Subgroup,
    /// Minimal element of each block, increasing.
    pub reps: Vec<Elem>,
    /// Sorted blocks, aligned with `reps`.
    pub blocks: Vec<Vec<Elem>>,
}

/// Double cosets `K \ parent / L`.
pub fn double_cosets(left: &Subgroup, right: &Subgroup) -> DoubleCosetDecomposition {
    let parent = left.parent();
    let mut seen = vec![false; parent.order()];
    let mut reps = Vec::new();
    let mut blocks = Vec::new();
    for x in parent.elements() {
        if seen[x] {
            continue;
        }
        let mut block = BTreeSet::new();
        for &k in left.elements() {
            let kx = parent.mul(k, x);
            for &l in right.elements() {
                block.insert(parent.mul(kx, l));
            }
        }
        for &y in &block {
            seen[y] = true;
        }
        reps.push(x);
        blocks.push(block.into_iter().collect());
    }
    DoubleCosetDecomposition { left: left.clone(), right: right.clone(), reps, blocks }
}
