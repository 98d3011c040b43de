//! Finite fields `GF(p^d)` with exp/log tables.
//!
//! An element is a `u32` code: the base-`p` digits of the code are the
//! coordinates over `F_p`. A field built with [`Gf::extend`] over a base of
//! order `q` encodes `c_0 + c_1 y + ... + c_{n-1} y^{n-1}` as
//! `c_0 + c_1 q + ... + c_{n-1} q^{n-1}`, so base-field codes are literally the
//! codes of the embedded subfield and addition is digit-wise mod `p` at every
//! level of a tower.
//!
//! The generator is always the class of the adjoined variable, and the
//! defining polynomial is the smallest monic primitive polynomial in code
//! order. Both choices are deterministic.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::CommRing;
use crate::util::{is_prime, prime_power};
use crate::{Error, Result};

/// Field addition tables are materialized up to this order.
const ADD_TABLE_MAX: u32 = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf {
    p: u32,
    order: u32,
    base_order: u32,
    degree_over_base: u32,
    /// Defining polynomial over the base field, monic, low degree first.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl Gf {
    /// `GF(q)` for a prime power `q`, built over its prime field.
    pub fn new(q: u64) -> Result<Gf> {
        let (p, e) = prime_power(q)?;
        if q > u32::MAX as u64 / 2 {
            return Err(Error::Overflow);
        }
        let prime = Gf::prime(p as u32)?;
        if e == 1 {
            Ok(prime)
        } else {
            Gf::extend(&prime, e)
        }
    }

    pub fn prime(p: u32) -> Result<Gf> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let order = p;
        let g = (1..p)
            .find(|&g| multiplicative_order_mod(g, p) == p - 1)
            .unwrap_or(1);
        let mut exp = Vec::with_capacity((p - 1) as usize);
        let mut log = vec![0; p as usize];
        let mut x = 1u32;
        for i in 0..p - 1 {
            exp.push(x);
            log[x as usize] = i;
            x = x * g % p;
        }
        let mut f = Gf {
            p,
            order,
            base_order: p,
            degree_over_base: 1,
            modulus: vec![p - g % p, 1],
            exp,
            log,
            add_table: None,
        };
        if p == 2 {
            f.modulus = vec![1, 1];
        }
        f.build_add_table();
        Ok(f)
    }

    /// Degree-`n` extension of `base` by the smallest monic primitive
    /// polynomial (lowest code `sum_{i<n} c_i q^i`).
    pub fn extend(base: &Gf, n: u32) -> Result<Gf> {
        if n == 0 {
            return Err(Error::InvalidParameter("extension degree must be positive"));
        }
        let q = base.order as u64;
        let order = q.checked_pow(n).ok_or(Error::Overflow)?;
        if order > (1 << 24) {
            return Err(Error::Overflow);
        }
        let order = order as u32;
        if n == 1 {
            let mut f = base.clone();
            f.base_order = base.order;
            f.degree_over_base = 1;
            f.modulus = vec![base.neg(base.generator()), 1];
            return Ok(f);
        }
        let candidates = q.pow(n);
        for code in 0..candidates {
            let mut m = Vec::with_capacity(n as usize + 1);
            let mut c = code;
            for _ in 0..n {
                m.push((c % q) as u32);
                c /= q;
            }
            if m[0] == 0 {
                continue;
            }
            m.push(1);
            if let Some(exp) = power_table(base, &m, order) {
                let mut log = vec![0; order as usize];
                for (i, &x) in exp.iter().enumerate() {
                    log[x as usize] = i as u32;
                }
                let mut f = Gf {
                    p: base.p,
                    order,
                    base_order: base.order,
                    degree_over_base: n,
                    modulus: m,
                    exp,
                    log,
                    add_table: None,
                };
                f.build_add_table();
                return Ok(f);
            }
        }
        Err(Error::InvalidParameter("no primitive polynomial found"))
    }

    fn build_add_table(&mut self) {
        if self.order <= ADD_TABLE_MAX && self.p != 2 {
            let q = self.order;
            let mut table = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] = self.add_digits(a, b);
                }
            }
            self.add_table = Some(table);
        }
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Order of the field this one was built over (itself for prime fields).
    pub fn base_order(&self) -> u32 {
        self.base_order
    }

    pub fn degree_over_base(&self) -> u32 {
        self.degree_over_base
    }

    /// Defining polynomial over the base field, monic, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed multiplicative generator.
    pub fn generator(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if let Some(t) = &self.add_table {
            t[(a * self.order + b) as usize]
        } else {
            self.add_digits(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.order - 1;
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(if s >= m { s - m } else { s }) as usize]
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let m = self.order - 1;
        self.exp[((m - self.log[a as usize]) % m) as usize]
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let m = (self.order - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % m)) % m) as usize]
    }

    /// `g^j` for the fixed generator `g`.
    pub fn exp(&self, j: u64) -> u32 {
        self.exp[(j % (self.order as u64 - 1)) as usize]
    }

    /// Discrete logarithm to the fixed generator.
    pub fn log(&self, a: u32) -> Result<u32> {
        if a == 0 {
            Err(Error::ZeroElement)
        } else {
            Ok(self.log[a as usize])
        }
    }

    /// Image of an integer under the prime-field embedding.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    /// `x^{q_base}`: the Frobenius over the base field.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.base_order as u64)
    }

    /// Whether `a` lies in the base field.
    pub fn in_base(&self, a: u32) -> bool {
        a < self.base_order
    }

    /// Coordinates over the base field (digits base `q_base`).
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let q = self.base_order;
        let mut a = a;
        (0..self.degree_over_base)
            .map(|_| {
                let c = a % q;
                a /= q;
                c
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[u32]) -> u32 {
        coords.iter().rev().fold(0, |acc, &c| acc * self.base_order + c)
    }

    pub fn elements(&self) -> core::ops::Range<u32> {
        0..self.order
    }

    pub fn units(&self) -> core::ops::Range<u32> {
        1..self.order
    }
}

impl CommRing for Gf {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        Gf::add(self, *a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        Gf::sub(self, *a, *b)
    }
    fn neg(&self, a: &u32) -> u32 {
        Gf::neg(self, *a)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        Gf::mul(self, *a, *b)
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn from_int(&self, k: i64) -> u32 {
        Gf::from_int(self, k)
    }
}

fn multiplicative_order_mod(g: u32, p: u32) -> u32 {
    let mut x = g % p;
    let mut k = 1;
    while x != 1 {
        x = x * g % p;
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}

/// Powers of `y` in `base[y]/(m)`, or `None` if `y` is not of order
/// `order - 1` (so `m` is not primitive).
fn power_table(base: &Gf, m: &[u32], order: u32) -> Option<Vec<u32>> {
    let n = m.len() - 1;
    let q = base.order;
    let mut coords = vec![0u32; n];
    coords[0] = 1;
    let encode = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &x| acc * q + x);
    let mut exp = Vec::with_capacity(order as usize - 1);
    for i in 0..order - 1 {
        let code = encode(&coords);
        if i > 0 && code == 1 {
            return None;
        }
        exp.push(code);
        // multiply by y
        let top = coords[n - 1];
        for j in (1..n).rev() {
            coords[j] = base.sub(coords[j - 1], base.mul(top, m[j]));
        }
        coords[0] = base.neg(base.mul(top, m[0]));
    }
    if encode(&coords) != 1 {
        return None;
    }
    Some(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &Gf) {
        for a in f.elements() {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(a, 1), a);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in [0, 1, f.order() - 1] {
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c)),
                        "distributivity in GF({})",
                        f.order()
                    );
                }
            }
        }
    }

    #[test]
    fn small_fields_satisfy_axioms() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = Gf::new(q).unwrap();
            assert_eq!(f.order() as u64, q);
            check_axioms(&f);
        }
    }

    #[test]
    fn towers_embed_base_field() {
        let f4 = Gf::new(4).unwrap();
        let f16 = Gf::extend(&f4, 2).unwrap();
        // base codes are closed under the big field's operations and agree
        for a in f4.elements() {
            assert!(f16.in_base(f16.frobenius(a)));
            assert_eq!(f16.frobenius(a), a);
            for b in f4.elements() {
                assert_eq!(f16.add(a, b), f4.add(a, b));
                assert_eq!(f16.mul(a, b), f4.mul(a, b));
            }
        }
        check_axioms(&f16);
    }

    #[test]
    fn generator_is_primitive() {
        for (q, n) in [(2, 2), (3, 2), (2, 3), (5, 2), (3, 3)] {
            let base = Gf::new(q).unwrap();
            let ext = Gf::extend(&base, n).unwrap();
            let g = ext.generator();
            let m = ext.order() as u64 - 1;
            let mut x = 1;
            for j in 1..=m {
                x = ext.mul(x, g);
                assert_eq!(x == 1, j == m);
            }
            assert_eq!(g, q as u32);
        }
    }

    #[test]
    fn not_prime_power() {
        assert_eq!(Gf::new(6), Err(Error::NotPrimePower(6)));
    }
}
