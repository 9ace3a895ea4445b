//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! An element is a polynomial in `zeta_m` of degree below `phi(m)`, reduced
//! modulo the cyclotomic polynomial `Phi_m`. Binary operations first embed both
//! operands into the field of the least common multiple of their conductors.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::Ratio<i64>;

struct Field {
    degree: usize,
    /// `zeta^k` reduced, for `0 <= k < conductor`.
    powers: Vec<Vec<i64>>,
}

fn cyclotomic_poly_cache() -> &'static Mutex<HashMap<usize, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Phi_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: usize) -> Vec<i64> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(p) = cyclotomic_poly_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; m + 1];
    num[0] = -1;
    num[m] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    cyclotomic_poly_cache().lock().unwrap().insert(m, num.clone());
    num
}

/// Division by a monic polynomial that is known to be exact.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn field(m: usize) -> Arc<Field> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&m) {
        return f.clone();
    }
    let phi = cyclotomic_polynomial(m);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(m);
    let mut cur = vec![0i64; degree];
    cur[0] = 1;
    for _ in 0..m {
        powers.push(cur.clone());
        // multiply by x and reduce the overflow coefficient
        let top = cur[degree - 1];
        for i in (1..degree).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..degree {
            cur[i] -= top * phi[i];
        }
    }
    let f = Arc::new(Field { degree, powers });
    cache.lock().unwrap().insert(m, f.clone());
    f
}

/// Euler's totient, the degree of `Q(zeta_m)`.
pub fn totient(m: usize) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

/// An exact element of `Q(zeta_m)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(conductor: usize) -> Self {
        Cyclotomic { conductor, coeffs: vec![Rational::zero(); totient(conductor)] }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `zeta_m^k`.
    pub fn root_of_unity(conductor: usize, k: i64) -> Self {
        let f = field(conductor);
        let e = k.rem_euclid(conductor as i64) as usize;
        Cyclotomic {
            conductor,
            coeffs: f.powers[e].iter().map(|&c| Rational::from_integer(c)).collect(),
        }
    }

    /// `sum_k mult[k] zeta_m^k` for an exponent histogram of length `m`.
    pub fn from_exponent_counts(conductor: usize, counts: &[i64]) -> Self {
        let f = field(conductor);
        let mut acc = vec![0i64; f.degree];
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                for (a, &p) in acc.iter_mut().zip(&f.powers[k % conductor]) {
                    *a += c * p;
                }
            }
        }
        Cyclotomic { conductor, coeffs: acc.into_iter().map(Rational::from_integer).collect() }
    }

    /// Builds an element from reduced coefficients in the power basis.
    pub fn from_coefficients(conductor: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), totient(conductor), "coefficient count must equal phi(m)");
        Cyclotomic { conductor, coeffs }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-expresses the element in `Q(zeta_target)`; `target` must be a
    /// multiple of the conductor.
    pub fn embed(&self, target: usize) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        assert!(target.is_multiple_of(self.conductor), "cannot embed Q(zeta_{}) into Q(zeta_{target})", self.conductor);
        let f = field(target);
        let step = target / self.conductor;
        let mut acc = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, &p) in acc.iter_mut().zip(&f.powers[(i * step) % target]) {
                if p != 0 {
                    *a += c * p;
                }
            }
        }
        Cyclotomic { conductor: target, coeffs: acc }
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        let l = a.conductor.lcm(&b.conductor);
        (a.embed(l), b.embed(l))
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        let m = self.conductor;
        let f = field(m);
        let mut acc = vec![Rational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, &p) in acc.iter_mut().zip(&f.powers[(m - i) % m]) {
                if p != 0 {
                    *a += c * p;
                }
            }
        }
        Cyclotomic { conductor: m, coeffs: acc }
    }

    pub fn scale(&self, q: Rational) -> Self {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when only the constant coefficient is nonzero.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0])
    }

    pub fn is_rational_integer(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_integer())
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Whether all coefficients are integers (an element of `Z[zeta]`).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Lexicographic comparison of coefficient vectors at a common conductor.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        let (a, b) = Self::unify(self, other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor != rhs.conductor {
            let (a, b) = Cyclotomic::unify(self, rhs);
            return &a + &b;
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        if self.conductor != rhs.conductor {
            let (a, b) = Cyclotomic::unify(self, rhs);
            return &a * &b;
        }
        let m = self.conductor;
        let f = field(m);
        let d = f.degree;
        let mut wide = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut acc: Vec<Rational> = wide[..d].to_vec();
        for (k, c) in wide.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (t, &p) in acc.iter_mut().zip(&f.powers[k % m]) {
                if p != 0 {
                    *t += c * p;
                }
            }
        }
        Cyclotomic { conductor: m, coeffs: acc }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Formats as `a0+a1*z3+a2*z3^2`, omitting zero terms and unit coefficients.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.conductor;
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = match i {
                0 => String::new(),
                1 => format!("z{m}"),
                _ => format!("z{m}^{i}"),
            };
            let term = if i == 0 {
                fmt_rational(c)
            } else if c.is_one() {
                power
            } else if (-c).is_one() {
                format!("-{power}")
            } else {
                format!("{}*{power}", fmt_rational(c))
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Sign of a rational as -1, 0, 1; used by callers checking nonnegativity.
pub fn rational_sign(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(105), 48);
        // Phi_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn basic_identities() {
        let z3 = Cyclotomic::root_of_unity(3, 1);
        let z3sq = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(&z3 + &z3sq, Cyclotomic::from_integer(-1));
        let z4 = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&z4 * &z4, Cyclotomic::from_integer(-1));
        assert_eq!(Cyclotomic::root_of_unity(5, 1).conjugate(), Cyclotomic::root_of_unity(5, 4));
        assert!((&z4 * &z4).is_rational_integer());
        assert!(!z3.is_rational());
    }

    #[test]
    fn conductor_unification() {
        // zeta_6 = -zeta_3^2, and zeta_2 = -1
        assert_eq!(Cyclotomic::root_of_unity(6, 1), -&Cyclotomic::root_of_unity(3, 2));
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::from_integer(-1));
        let sum = &Cyclotomic::root_of_unity(4, 1) + &Cyclotomic::root_of_unity(3, 1);
        assert_eq!(sum.conductor(), 12);
        assert_eq!(Cyclotomic::root_of_unity(12, 3), Cyclotomic::root_of_unity(4, 1));
    }

    #[test]
    fn display() {
        assert_eq!(Cyclotomic::zero(3).to_string(), "0");
        assert_eq!(Cyclotomic::root_of_unity(3, 2).to_string(), "-1-z3");
        assert_eq!(Cyclotomic::from_rational(Rational::new(1, 2)).to_string(), "1/2");
        let x = Cyclotomic::from_coefficients(5, vec![2.into(), 0.into(), Rational::new(-3, 2), 1.into()]);
        assert_eq!(x.to_string(), "2-3/2*z5^2+z5^3");
    }

    #[test]
    fn root_products() {
        // zeta_m^a * zeta_m^b = zeta_m^(a+b) for every pair, across several conductors
        for m in [1usize, 2, 3, 4, 5, 6, 8, 9, 12, 15] {
            for a in 0..m as i64 {
                for b in 0..m as i64 {
                    let lhs = &Cyclotomic::root_of_unity(m, a) * &Cyclotomic::root_of_unity(m, b);
                    assert_eq!(lhs, Cyclotomic::root_of_unity(m, a + b), "m={m} a={a} b={b}");
                }
            }
            // sum of all m-th roots of unity vanishes for m > 1
            let total = (0..m as i64).fold(Cyclotomic::zero(m), |acc, k| &acc + &Cyclotomic::root_of_unity(m, k));
            assert_eq!(total.is_zero(), m > 1);
        }
    }
}
