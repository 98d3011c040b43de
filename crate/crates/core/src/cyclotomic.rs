//! Exact arithmetic in `Z[zeta_m]`.
//!
//! Elements are kept in the power basis `1, z, ..., z^{phi(m)-1}`: any
//! group-ring vector over `mu_m` is reduced modulo the cyclotomic polynomial
//! `Phi_m`, which generates exactly the relations `sum_j z^{j m/p} = 0` (and
//! their multiples) for the primes `p | m`. Two values are equal iff their
//! reduced coefficient vectors are equal.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};


use crate::util::{divisors, gcd};

/// `Phi_m` and the data derived from it.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    /// `Phi_m`, monic, low degree first.
    phi: Vec<i64>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<CyclotomicField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        Arc::new(CyclotomicField {
            order,
            phi: cyclotomic_polynomial(order),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `phi(m)`, the rank of `Z[zeta_m]`.
    pub fn rank(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    /// Reduces a group-ring vector (indexed by exponent mod `m`, any length)
    /// to power-basis coefficients.
    fn reduce(&self, mut v: Vec<i64>) -> Vec<i64> {
        let d = self.rank();
        let m = self.order as usize;
        if v.len() > m {
            // fold exponents mod m first
            for i in m..v.len() {
                let c = v[i];
                v[i % m] += c;
            }
            v.truncate(m);
        }
        for top in (d..v.len()).rev() {
            let c = v[top];
            if c == 0 {
                continue;
            }
            for (i, &pc) in self.phi.iter().enumerate() {
                v[top - d + i] -= c * pc;
            }
        }
        v.resize(d, 0);
        v
    }
}

fn poly_mul_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient of integer polynomials by a monic divisor.
fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![0; a.len() - db];
    for top in (db..rem.len()).rev() {
        let c = rem[top];
        quot[top - db] = c;
        for (i, &bc) in b.iter().enumerate() {
            rem[top - db + i] -= c * bc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// `Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    let mut den = vec![1i64];
    for d in divisors(m as u64) {
        if d < m as u64 {
            den = poly_mul_int(&den, &cyclotomic_polynomial(d as u32));
        }
    }
    poly_div_exact(&num, &den)
}

/// An element of `Z[zeta_m]`.
#[derive(Clone)]
pub struct CycInt {
    field: Arc<CyclotomicField>,
    coeffs: Vec<i64>,
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt({})", self.render())
    }
}

impl CycInt {
    pub fn zero(field: &Arc<CyclotomicField>) -> CycInt {
        CycInt {
            field: field.clone(),
            coeffs: vec![0; field.rank()],
        }
    }

    pub fn from_int(field: &Arc<CyclotomicField>, c: i64) -> CycInt {
        let mut z = CycInt::zero(field);
        if let Some(first) = z.coeffs.first_mut() {
            *first = c;
        }
        z
    }

    pub fn one(field: &Arc<CyclotomicField>) -> CycInt {
        CycInt::from_int(field, 1)
    }

    /// `zeta_m^e`.
    pub fn root_power(field: &Arc<CyclotomicField>, e: u64) -> CycInt {
        CycInt::from_group_ring(field, &[(e, 1)])
    }

    /// `sum c_j zeta^{e_j}` for `(e_j, c_j)` pairs.
    pub fn from_group_ring(field: &Arc<CyclotomicField>, terms: &[(u64, i64)]) -> CycInt {
        let m = field.order as u64;
        let mut v = vec![0i64; field.order as usize];
        for &(e, c) in terms {
            v[(e % m) as usize] += c;
        }
        CycInt {
            field: field.clone(),
            coeffs: field.reduce(v),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Power-basis coefficients.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The integer value, if this element lies in `Z`.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> CycInt {
        let m = self.field.order as u64;
        let terms: Vec<(u64, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| ((m - j as u64) % m, c))
            .collect();
        CycInt::from_group_ring(&self.field, &terms)
    }

    pub fn scale(&self, k: i64) -> CycInt {
        CycInt {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Exact division by an integer, if every coefficient is divisible.
    pub fn div_exact(&self, k: i64) -> Option<CycInt> {
        if k == 0 || self.coeffs.iter().any(|&c| c % k != 0) {
            return None;
        }
        Some(CycInt {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|&c| c / k).collect(),
        })
    }

    /// Gcd of the coefficients (0 for zero).
    pub fn content(&self) -> u64 {
        self.coeffs
            .iter()
            .fold(0, |g, &c| gcd(g, c.unsigned_abs()))
    }

    /// Numeric value at `zeta = exp(2 pi i / m)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.field.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let angle = 2.0 * core::f64::consts::PI * j as f64 / m;
            re += c as f64 * libm::cos(angle);
            im += c as f64 * libm::sin(angle);
        }
        (re, im)
    }

    /// Absolute value at `zeta = exp(2 pi i / m)`.
    pub fn abs(&self) -> f64 {
        let (re, im) = self.to_complex();
        libm::hypot(re, im)
    }

    /// `c0 + c1*z(m)^1 + ...`, signs folded into the joins.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if s.is_empty() {
                if c < 0 {
                    s.push('-');
                }
            } else if c < 0 {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            if j == 0 {
                let _ = write!(s, "{mag}");
            } else if mag == 1 {
                let _ = write!(s, "z({})^{j}", self.field.order);
            } else {
                let _ = write!(s, "{mag}*z({})^{j}", self.field.order);
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    fn check_same(&self, other: &CycInt) {
        assert_eq!(
            self.field.order, other.field.order,
            "cyclotomic orders differ"
        );
    }
}

/// Numeric absolute value of an exact cyclotomic integer.
pub fn cyc_abs(v: &CycInt) -> f64 {
    v.abs()
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.check_same(rhs);
        CycInt {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.check_same(rhs);
        CycInt {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check_same(rhs);
        let d = self.field.rank();
        if d == 0 {
            return self.clone();
        }
        let mut v = vec![0i64; 2 * d - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        CycInt {
            field: self.field.clone(),
            coeffs: self.field.reduce(v),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl core::iter::Sum for CycInt {
    fn sum<I: Iterator<Item = CycInt>>(mut iter: I) -> CycInt {
        let first = iter.next().expect("sum of an empty CycInt iterator");
        iter.fold(first, |acc, x| &acc + &x)
    }
}

/// An element of `Q(zeta_m)` with integer numerator and positive denominator,
/// kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycRational {
    pub num: CycInt,
    pub den: u64,
}

impl CycRational {
    pub fn new(num: CycInt, den: i64) -> CycRational {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (num.scale(-1), -den) } else { (num, den) };
        let g = gcd(num.content(), den as u64);
        let g = if g == 0 { den as u64 } else { g };
        CycRational {
            num: num.div_exact(g as i64).expect("content divides"),
            den: den as u64 / g,
        }
    }

    pub fn is_integer(&self, k: i64) -> bool {
        self.den == 1 && self.num.as_integer() == Some(k)
    }
}
