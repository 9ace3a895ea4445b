//! Exact linear algebra over `Q` and fraction-free elimination over `Z`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Widens a machine rational.
pub fn to_big(x: &crate::cyclotomic::Rational) -> Q {
    Q::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// Narrows to a machine rational when both parts fit.
pub fn to_small(x: &Q) -> Option<crate::cyclotomic::Rational> {
    let n: i64 = x.numer().try_into().ok()?;
    let d: i64 = x.denom().try_into().ok()?;
    Some(crate::cyclotomic::Rational::new(n, d))
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Q>>>(ncols: usize, rows: I) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    /// Remainder of `row` after eliminating every pivot column.
    pub fn reduce(&self, mut row: Vec<Q>) -> Vec<Q> {
        assert_eq!(row.len(), self.ncols);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        row
    }

    pub fn contains(&self, row: Vec<Q>) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: Vec<Q>) -> bool {
        let mut row = self.reduce(row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].recip();
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for r in self.rows.iter_mut() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    /// Basis of `{v : r . v = 0 for every row r}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Q::zero(); self.ncols];
                v[f] = Q::one();
                for (r, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -r[f].clone();
                }
                v
            })
            .collect()
    }
}

pub fn rank(rows: &[Vec<Q>], ncols: usize) -> usize {
    Echelon::from_rows(ncols, rows.iter().cloned()).rank()
}

pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    Echelon::from_rows(ncols, rows.iter().cloned()).nullspace()
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Q>),
    Inconsistent,
    /// The system is consistent but has a nontrivial kernel.
    Underdetermined,
}

/// Solves an integer system, possibly overdetermined, by Bareiss
/// fraction-free elimination. Only the final back substitution divides.
pub fn solve_integer_system(a: &[Vec<BigInt>], b: &[BigInt]) -> Solution {
    assert_eq!(a.len(), b.len());
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(sel) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        for i in (r + 1)..rows {
            for j in (c + 1)..=n {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivot_cols.len() < n {
        return Solution::Underdetermined;
    }
    let mut x = vec![Q::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Q::from_integer(m[i][n].clone());
        for j in (i + 1)..n {
            if !m[i][j].is_zero() {
                acc -= Q::from_integer(m[i][j].clone()) * &x[j];
            }
        }
        x[i] = acc / Q::from_integer(m[i][i].clone());
    }
    Solution::Unique(x)
}

/// Whether a rational is a nonnegative integer; returns it if so.
pub fn as_nonnegative_integer(x: &Q) -> Option<u64> {
    if !x.is_integer() || x.is_negative() {
        return None;
    }
    u64::try_from(x.to_integer()).ok()
}
