//! Dixon's method: simultaneous eigenvectors of the class multiplication
//! matrices over a prime field, lifted back to cyclotomic integers.

use std::cmp::Ordering;
use std::sync::Arc;

use super::{Character, Classes};
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Candidates `1 + k*modulus` are scanned for this many steps of `k`.
const PRIME_SEARCH_STEPS: u64 = 1_000_000;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Least prime `p = 1 (mod modulus)` with `lower < p <= bound`.
pub fn dixon_prime(modulus: u64, lower: u64, bound: u64) -> Result<u64> {
    let mut p = lower - lower % modulus + 1;
    while p <= lower {
        p += modulus;
    }
    while p <= bound {
        if is_prime(p) {
            return Ok(p);
        }
        p += modulus;
    }
    Err(Error::NoAdmissiblePrime { modulus, lower, bound })
}

/// Reduced row echelon form mod `p`; returns pivot columns.
fn rref_mod(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let sub = mul_mod(f, rows[r][j], p);
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn nullspace_mod(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivots = rref_mod(&mut rows, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0; ncols];
            v[f] = 1;
            for (row, &c) in rows.iter().zip(&pivots) {
                v[c] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial mod `p`, lowest degree first, via reduction to
/// upper Hessenberg form.
fn charpoly_mod(mut h: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = h.len();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in (m + 1)..n {
            if h[i][m - 1] == 0 {
                continue;
            }
            let u = mul_mod(h[i][m - 1], inv, p);
            for j in 0..n {
                let sub = mul_mod(u, h[m][j], p);
                h[i][j] = (h[i][j] + p - sub) % p;
            }
            for row in h.iter_mut() {
                let add = mul_mod(u, row[i], p);
                row[m] = (row[m] + add) % p;
            }
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i t_i h_{m-i,m} p_{m-i-1}, 1-based
    let at = |a: usize, b: usize| h[a - 1][b - 1];
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - mul_mod(at(m, m), c, p)) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = mul_mod(t, at(m - i + 1, m - i), p);
            let f = mul_mod(t, at(m - i, m), p);
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                next[k] = (next[k] + p - mul_mod(f, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}

fn eval_mod(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// Splits an invariant subspace (given by an RREF basis) into eigenspaces of
/// `m`.
fn split(basis: &[Vec<u64>], m: &[Vec<u64>], p: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let r = m.len();
    let pivots: Vec<usize> = basis.iter().map(|b| b.iter().position(|&x| x != 0).expect("nonzero")).collect();
    // a[l][j] = coordinate l of m * b_j
    let mut a = vec![vec![0u64; d]; d];
    for (j, b) in basis.iter().enumerate() {
        let image: Vec<u64> = (0..r)
            .map(|row| (0..r).fold(0, |acc, k| (acc + mul_mod(m[row][k], b[k], p)) % p))
            .collect();
        for (l, &pc) in pivots.iter().enumerate() {
            a[l][j] = image[pc];
        }
    }
    let poly = charpoly_mod(a.clone(), p);
    let mut spaces = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        if eval_mod(&poly, lambda, p) != 0 {
            continue;
        }
        let shifted: Vec<Vec<u64>> = a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut row = row.clone();
                row[i] = (row[i] + p - lambda) % p;
                row
            })
            .collect();
        let coords = nullspace_mod(shifted, d, p);
        let mut vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..r)
                    .map(|k| c.iter().zip(basis).fold(0, |acc, (&cj, b)| (acc + mul_mod(cj, b[k], p)) % p))
                    .collect()
            })
            .collect();
        rref_mod(&mut vectors, p);
        total += vectors.len();
        spaces.push(vectors);
    }
    if total != d {
        return Err(Error::CharacterTable(format!(
            "class matrix is not diagonalizable over F_{p} on a subspace of dimension {d}"
        )));
    }
    Ok(spaces)
}

/// The irreducible characters of a group, with exact values in `Q(zeta_e)` for
/// `e` the exponent.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: Arc<Classes>,
    characters: Vec<Character>,
    prime: u64,
}

impl CharacterTable {
    pub fn of_group(group: Arc<FiniteGroup>) -> Result<Self> {
        Self::compute(Classes::of_group(group))
    }

    /// Runs Dixon's algorithm on the given class data.
    pub fn compute(classes: Arc<Classes>) -> Result<Self> {
        let order = classes.order() as u64;
        let e = classes.exponent() as u64;
        let lower = 2 * order;
        let p = dixon_prime(e, lower, lower + e * PRIME_SEARCH_STEPS)?;
        Self::compute_with_prime(classes, p)
    }

    fn compute_with_prime(classes: Arc<Classes>, p: u64) -> Result<Self> {
        let r = classes.num_classes();
        let group = classes.group().clone();
        let n = group.order();
        let sizes = classes.sizes();

        // a[i][j][k] = #{x in C_i : x^-1 g_k in C_j}
        let mut a = vec![vec![vec![0u64; r]; r]; r];
        for k in 0..r {
            let g = classes.local_rep(k);
            for x in group.elements() {
                let y = group.mul(group.inv(x), g);
                a[classes.class_of_local(x)][classes.class_of_local(y)][k] += 1;
            }
        }

        let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
        let mut spaces = vec![identity];
        for mi in a.iter().skip(1) {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let mut next = Vec::new();
            for s in spaces {
                if s.len() == 1 {
                    next.push(s);
                } else {
                    next.extend(split(&s, mi, p)?);
                }
            }
            spaces = next;
        }
        if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
            return Err(Error::CharacterTable(format!(
                "found {} common eigenspaces, expected {r} one-dimensional ones",
                spaces.len()
            )));
        }

        let e = classes.exponent();
        let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
        let z_inv = inv_mod(z, p);
        let n_mod = n as u64 % p;
        let root = (n as f64).sqrt() as u64 + 1;
        let mut characters = Vec::with_capacity(r);
        for space in spaces {
            let v = &space[0];
            if v[0] == 0 {
                return Err(Error::CharacterTable("eigenvector vanishes at the identity class".into()));
            }
            let scale = inv_mod(v[0], p);
            let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, scale, p)).collect();
            let s = (0..r).fold(0, |acc, k| {
                let term = mul_mod(mul_mod(omega[k], omega[classes.inverse_class(k)], p), inv_mod(sizes[k] as u64, p), p);
                (acc + term) % p
            });
            if s == 0 {
                return Err(Error::CharacterTable("degenerate degree equation".into()));
            }
            let d2 = mul_mod(n_mod, inv_mod(s, p), p);
            let degree = (1..=root)
                .find(|&d| d * d <= n as u64 && (d * d) % p == d2)
                .ok_or_else(|| Error::CharacterTable("no integer degree solves the degree equation".into()))?;
            let theta: Vec<u64> =
                (0..r).map(|k| mul_mod(mul_mod(omega[k], degree, p), inv_mod(sizes[k] as u64, p), p)).collect();

            let mut values = Vec::with_capacity(r);
            for k in 0..r {
                let o = group.element_order(classes.local_rep(k));
                let step = e / o;
                let o_inv = inv_mod(o as u64, p);
                let mut counts = vec![0i64; e];
                let mut total = 0u64;
                for j in 0..o {
                    let w = pow_mod(z_inv, (step * j) as u64, p);
                    let mut acc = 0u64;
                    let mut wl = 1u64;
                    for l in 0..o {
                        acc = (acc + mul_mod(theta[classes.power_class(k, l)], wl, p)) % p;
                        wl = mul_mod(wl, w, p);
                    }
                    let m = mul_mod(acc, o_inv, p);
                    if m > degree {
                        return Err(Error::CharacterTable(format!(
                            "eigenvalue multiplicity {m} exceeds degree {degree}"
                        )));
                    }
                    counts[step * j] = m as i64;
                    total += m;
                }
                if total != degree {
                    return Err(Error::CharacterTable("eigenvalue multiplicities do not sum to the degree".into()));
                }
                values.push(Cyclotomic::from_exponent_counts(e, &counts));
            }
            characters.push(Character::new(classes.clone(), values));
        }

        characters.sort_by(compare_rows);
        let table = CharacterTable { classes, characters, prime: p };
        if let Some(defect) = table.orthogonality_defects().into_iter().next() {
            return Err(Error::CharacterTable(defect));
        }
        Ok(table)
    }

    pub fn classes(&self) -> &Arc<Classes> {
        &self.classes
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Character> {
        self.characters.get(i)
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.characters.iter().map(|c| c.integer_degree().expect("integer degree")).collect()
    }

    /// Conductor shared by all values, the group exponent.
    pub fn conductor(&self) -> usize {
        self.classes.exponent()
    }

    /// Position of a character in the table.
    pub fn index_of(&self, chi: &Character) -> Option<usize> {
        self.characters.iter().position(|c| c == chi)
    }

    /// Every failure of exact row or column orthogonality, described.
    pub fn orthogonality_defects(&self) -> Vec<String> {
        let cls = &self.classes;
        let n = cls.order() as i64;
        let sizes = cls.sizes();
        let mut defects = Vec::new();
        let conj: Vec<Vec<Cyclotomic>> =
            self.characters.iter().map(|c| c.values().iter().map(Cyclotomic::conjugate).collect()).collect();
        for (i, ci) in self.characters.iter().enumerate() {
            for j in 0..self.characters.len() {
                let mut acc = Cyclotomic::zero(1);
                for (k, &sz) in sizes.iter().enumerate() {
                    acc += &(ci.value_at_class(k) * &conj[j][k]).scale(Rational::from_integer(sz as i64));
                }
                let expected = if i == j { n } else { 0 };
                if acc != Cyclotomic::from_integer(expected) {
                    defects.push(format!("rows {i},{j}: sum {acc}, expected {expected}"));
                }
            }
        }
        for k in 0..sizes.len() {
            for l in 0..sizes.len() {
                let mut acc = Cyclotomic::zero(1);
                for (chi, cc) in self.characters.iter().zip(&conj) {
                    acc += &(chi.value_at_class(k) * &cc[l]);
                }
                let expected = if k == l { n / sizes[k] as i64 } else { 0 };
                if acc != Cyclotomic::from_integer(expected) {
                    defects.push(format!("columns {k},{l}: sum {acc}, expected {expected}"));
                }
            }
        }
        defects
    }
}

/// Trivial character first, then by degree, then lexicographically by values
/// in class order.
fn compare_rows(x: &Character, y: &Character) -> Ordering {
    let trivial = |c: &Character| c.values().iter().all(|v| *v == Cyclotomic::one());
    trivial(y)
        .cmp(&trivial(x))
        .then_with(|| x.integer_degree().cmp(&y.integer_degree()))
        .then_with(|| {
            x.values()
                .iter()
                .zip(y.values())
                .map(|(a, b)| a.cmp_lex(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_helpers() {
        assert_eq!(pow_mod(3, 4, 7), 4);
        assert_eq!(mul_mod(inv_mod(5, 13), 5, 13), 1);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(dixon_prime(4, 16, 1000).unwrap(), 17);
        assert_eq!(dixon_prime(6, 12, 1000).unwrap(), 13);
        assert!(matches!(dixon_prime(6, 14, 18), Err(Error::NoAdmissiblePrime { .. })));
    }

    #[test]
    fn charpoly_of_small_matrices() {
        // [[0,1],[1,0]] has x^2 - 1
        let p = 101;
        assert_eq!(charpoly_mod(vec![vec![0, 1], vec![1, 0]], p), vec![p - 1, 0, 1]);
        // a 3x3 companion-like matrix with eigenvalues 1, 2, 3
        let m = vec![vec![1, 5, 7], vec![0, 2, 9], vec![0, 0, 3]];
        let poly = charpoly_mod(m, p);
        for lambda in [1, 2, 3] {
            assert_eq!(eval_mod(&poly, lambda, p), 0);
        }
        assert_eq!(eval_mod(&poly, 4, p), 6);
        // dense matrix whose reduction needs a row swap
        let m = vec![vec![2, 1, 1], vec![0, 2, 1], vec![1, 0, 2]];
        let poly = charpoly_mod(m, p);
        // det(xI - M) = y^3 - y - 1 with y = x - 2
        assert_eq!(poly, vec![p - 7, 11, p - 6, 1]);
    }
}
