use num_traits::{One, Zero};

use super::{Coeff, HopfData, Vector};
use crate::error::{Error, Result};
use crate::group::GroupHom;
use crate::report::{Check, Report};

/// A bilinear form `lambda: U (x) H -> k`, stored densely as `values[u][h]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPairing {
    values: Vec<Vec<Coeff>>,
}

impl SkewPairing {
    /// Builds the form and checks the skew-pairing identities against `u` and
    /// `h`.
    pub fn new(u: &HopfData, h: &HopfData, values: Vec<Vec<Coeff>>) -> Result<Self> {
        let p = Self::unchecked(values);
        let report = p.verify(u, h);
        if let Some(f) = report.failures().next() {
            return Err(Error::Hopf(format!("{} fails at {}", f.name, f.witness.as_deref().unwrap_or("?"))));
        }
        Ok(p)
    }

    pub fn unchecked(values: Vec<Vec<Coeff>>) -> Self {
        SkewPairing { values }
    }

    pub fn value(&self, u: usize, h: usize) -> Coeff {
        self.values[u][h]
    }

    pub fn values(&self) -> &[Vec<Coeff>] {
        &self.values
    }

    pub fn eval(&self, u: &[(usize, Coeff)], h: &[(usize, Coeff)]) -> Coeff {
        let mut acc = Coeff::zero();
        for (i, c) in u {
            for (j, d) in h {
                acc += c * d * self.values[*i][*j];
            }
        }
        acc
    }

    /// `lambda^T(h, u) = lambda(u, h)`.
    pub fn transposed(&self) -> SkewPairing {
        let rows = self.values.len();
        let cols = self.values.first().map_or(0, Vec::len);
        let values = (0..cols).map(|j| (0..rows).map(|i| self.values[i][j]).collect()).collect();
        SkewPairing { values }
    }

    /// The four skew-pairing identities, each checked on all basis elements:
    /// `l(u, ab) = l(u2, a) l(u1, b)`, `l(uv, a) = l(u, a1) l(v, a2)`,
    /// `l(1, a) = e(a)` and `l(u, 1) = e(u)`.
    pub fn verify(&self, u: &HopfData, h: &HopfData) -> Report {
        let (nu, nh) = (u.dim(), h.dim());
        let mut report = Report::new();

        let mut witness = None;
        'outer: for x in 0..nu {
            for a in 0..nh {
                for b in 0..nh {
                    let lhs = self.eval(&[(x, Coeff::one())], h.mul_basis(a, b));
                    let rhs: Coeff =
                        u.comul_basis(x).iter().map(|((x1, x2), c)| c * self.values[*x2][a] * self.values[*x1][b]).sum();
                    if lhs != rhs {
                        witness = Some(format!("u={} a={} b={}", u.labels()[x], h.labels()[a], h.labels()[b]));
                        break 'outer;
                    }
                }
            }
        }
        report.push(Check::from_witness("pairing_product_in_h", witness));

        let mut witness = None;
        'outer: for x in 0..nu {
            for y in 0..nu {
                for a in 0..nh {
                    let lhs = self.eval(u.mul_basis(x, y), &[(a, Coeff::one())]);
                    let rhs: Coeff =
                        h.comul_basis(a).iter().map(|((a1, a2), c)| c * self.values[x][*a1] * self.values[y][*a2]).sum();
                    if lhs != rhs {
                        witness = Some(format!("u={} v={} a={}", u.labels()[x], u.labels()[y], h.labels()[a]));
                        break 'outer;
                    }
                }
            }
        }
        report.push(Check::from_witness("pairing_product_in_u", witness));

        let witness = (0..nh)
            .find(|&a| self.eval(u.unit(), &[(a, Coeff::one())]) != h.counit_basis(a))
            .map(|a| format!("a={}", h.labels()[a]));
        report.push(Check::from_witness("pairing_unit_of_u", witness));

        let witness = (0..nu)
            .find(|&x| self.eval(&[(x, Coeff::one())], h.unit()) != u.counit_basis(x))
            .map(|x| format!("u={}", u.labels()[x]));
        report.push(Check::from_witness("pairing_unit_of_h", witness));
        report
    }
}

/// The pairing of a group homomorphism `phi: F -> G` between `U = k^G` and
/// `H = kF`: `lambda(p_g, x) = 1` exactly when `g = phi(x)^-1`.
///
/// This orientation satisfies the skew-pairing identities on the standard
/// coproduct of `k^G` and makes `x p_g x^-1 = p_{phi(x) g phi(x)^-1}` in the
/// double.
pub fn pairing_from_hom(phi: &GroupHom) -> Result<(HopfData, HopfData, SkewPairing)> {
    let g = phi.target();
    let f = phi.source();
    let u = HopfData::function_algebra(g);
    let h = HopfData::group_algebra(f);
    let mut values = vec![vec![Coeff::zero(); f.order()]; g.order()];
    for x in f.elements() {
        values[g.inv(phi.apply(x))][x] = Coeff::one();
    }
    let pairing = SkewPairing::new(&u, &h, values)?;
    Ok((u, h, pairing))
}

/// A bilinear form on `A (x) A` for `A = U (x) H`, with its convolution
/// inverse, stored sparsely by rows.
#[derive(Clone, Debug)]
pub struct CocycleForm {
    dim: usize,
    sigma: Vec<Vector>,
    inverse: Vec<Vector>,
}

fn lookup(row: &[(usize, Coeff)], j: usize) -> Coeff {
    row.binary_search_by_key(&j, |(k, _)| *k).map_or_else(|_| Coeff::zero(), |pos| row[pos].1)
}

impl CocycleForm {
    /// `sigma(u (x) h, u' (x) h') = e(u) lambda(u', h) e(h')` with inverse
    /// `e(u) lambda(S u', h) e(h')`.
    pub fn from_pairing(u: &HopfData, h: &HopfData, pairing: &SkewPairing) -> Self {
        let (nu, nh) = (u.dim(), h.dim());
        let dim = nu * nh;
        let mut sigma = vec![Vec::new(); dim];
        let mut inverse = vec![Vec::new(); dim];
        for x in 0..dim {
            let (xu, xh) = (x / nh, x % nh);
            let eu = u.counit_basis(xu);
            if eu.is_zero() {
                continue;
            }
            for y in 0..dim {
                let (yu, yh) = (y / nh, y % nh);
                let eh = h.counit_basis(yh);
                if eh.is_zero() {
                    continue;
                }
                let s = eu * pairing.value(yu, xh) * eh;
                if !s.is_zero() {
                    sigma[x].push((y, s));
                }
                let t = eu * pairing.eval(u.antipode_basis(yu), &[(xh, Coeff::one())]) * eh;
                if !t.is_zero() {
                    inverse[x].push((y, t));
                }
            }
        }
        CocycleForm { dim, sigma, inverse }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self, x: usize, y: usize) -> Coeff {
        lookup(&self.sigma[x], y)
    }

    pub fn sigma_inverse(&self, x: usize, y: usize) -> Coeff {
        lookup(&self.inverse[x], y)
    }

    /// Nonzero values `sigma(x, _)`.
    pub fn sigma_row(&self, x: usize) -> &[(usize, Coeff)] {
        &self.sigma[x]
    }

    pub fn sigma_on(&self, x: &[(usize, Coeff)], y: &[(usize, Coeff)]) -> Coeff {
        let mut acc = Coeff::zero();
        for (i, c) in x {
            for (j, d) in y {
                acc += c * d * self.sigma(*i, *j);
            }
        }
        acc
    }

    pub fn sigma_inverse_on(&self, x: &[(usize, Coeff)], y: &[(usize, Coeff)]) -> Coeff {
        let mut acc = Coeff::zero();
        for (i, c) in x {
            for (j, d) in y {
                acc += c * d * self.sigma_inverse(*i, *j);
            }
        }
        acc
    }

    /// Convolution inverse, normalization and the left 2-cocycle identity
    /// `sigma(x1, y1) sigma(x2 y2, z) = sigma(y1, z1) sigma(x, y2 z2)`, on all
    /// basis elements of `a`.
    pub fn verify(&self, a: &HopfData) -> Report {
        let n = a.dim();
        let mut report = Report::new();

        let mut witness = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let expected = a.counit_basis(x) * a.counit_basis(y);
                let mut left = Coeff::zero();
                let mut right = Coeff::zero();
                for ((x1, x2), c) in a.comul_basis(x) {
                    for ((y1, y2), d) in a.comul_basis(y) {
                        left += c * d * self.sigma(*x1, *y1) * self.sigma_inverse(*x2, *y2);
                        right += c * d * self.sigma_inverse(*x1, *y1) * self.sigma(*x2, *y2);
                    }
                }
                if left != expected || right != expected {
                    witness = Some(format!("({}, {})", a.labels()[x], a.labels()[y]));
                    break 'outer;
                }
            }
        }
        report.push(Check::from_witness("cocycle_convolution_inverse", witness));

        let witness = (0..n)
            .find(|&x| {
                let e = [(x, Coeff::one())];
                self.sigma_on(a.unit(), &e) != a.counit_basis(x) || self.sigma_on(&e, a.unit()) != a.counit_basis(x)
            })
            .map(|x| a.labels()[x].clone());
        report.push(Check::from_witness("cocycle_normalized", witness));

        let mut witness = None;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut lhs = Coeff::zero();
                    for ((x1, x2), c) in a.comul_basis(x) {
                        for ((y1, y2), d) in a.comul_basis(y) {
                            let s = self.sigma(*x1, *y1);
                            if s.is_zero() {
                                continue;
                            }
                            lhs += c * d * s * self.sigma_on(a.mul_basis(*x2, *y2), &[(z, Coeff::one())]);
                        }
                    }
                    let mut rhs = Coeff::zero();
                    for ((y1, y2), c) in a.comul_basis(y) {
                        for ((z1, z2), d) in a.comul_basis(z) {
                            let s = self.sigma(*y1, *z1);
                            if s.is_zero() {
                                continue;
                            }
                            rhs += c * d * s * self.sigma_on(&[(x, Coeff::one())], a.mul_basis(*y2, *z2));
                        }
                    }
                    if lhs != rhs {
                        witness = Some(format!("({}, {}, {})", a.labels()[x], a.labels()[y], a.labels()[z]));
                        break 'outer;
                    }
                }
            }
        }
        report.push(Check::from_witness("cocycle_identity", witness));
        report
    }

    /// `U(x) = sigma(x1, S x2)`, evaluated on every basis element.
    pub(crate) fn twist_unit(&self, a: &HopfData) -> Vec<Coeff> {
        (0..a.dim())
            .map(|x| {
                a.comul_basis(x)
                    .iter()
                    .map(|((x1, x2), c)| c * self.sigma_on(&[(*x1, Coeff::one())], a.antipode_basis(*x2)))
                    .sum()
            })
            .collect()
    }

    /// `U^-1(x) = sigma^-1(S x1, x2)`.
    pub(crate) fn twist_unit_inverse(&self, a: &HopfData) -> Vec<Coeff> {
        (0..a.dim())
            .map(|x| {
                a.comul_basis(x)
                    .iter()
                    .map(|((x1, x2), c)| c * self.sigma_inverse_on(a.antipode_basis(*x1), &[(*x2, Coeff::one())]))
                    .sum()
            })
            .collect()
    }
}
