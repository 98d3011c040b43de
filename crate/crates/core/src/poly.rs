//! Dense univariate polynomials over a [`CommRing`], stored low degree first.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Gf;

/// A commutative ring whose elements are plain values and whose operations
/// go through a context object (a field table, a truncation level, ...).
pub trait CommRing {
    type Elem: Clone + PartialEq + Eq + core::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Image of an integer under `Z -> R`.
    fn from_int(&self, k: i64) -> Self::Elem;
}

pub fn trim<R: CommRing>(ring: &R, p: &mut Vec<R::Elem>) {
    while p.last().is_some_and(|c| ring.is_zero(c)) {
        p.pop();
    }
}

/// Degree, with `None` for the zero polynomial.
pub fn degree<R: CommRing>(ring: &R, p: &[R::Elem]) -> Option<usize> {
    p.iter().rposition(|c| !ring.is_zero(c))
}

pub fn eval<R: CommRing>(ring: &R, p: &[R::Elem], x: &R::Elem) -> R::Elem {
    p.iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

pub fn add<R: CommRing>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let len = a.len().max(b.len());
    let zero = ring.zero();
    let mut out: Vec<_> = (0..len)
        .map(|i| ring.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(ring, &mut out);
    out
}

pub fn sub<R: CommRing>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let len = a.len().max(b.len());
    let zero = ring.zero();
    let mut out: Vec<_> = (0..len)
        .map(|i| ring.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(ring, &mut out);
    out
}

pub fn mul<R: CommRing>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    trim(ring, &mut out);
    out
}

pub fn derivative<R: CommRing>(ring: &R, p: &[R::Elem]) -> Vec<R::Elem> {
    let mut out: Vec<_> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ring.mul(&ring.from_int(i as i64), c))
        .collect();
    trim(ring, &mut out);
    out
}

/// Maps coefficients through `f`.
pub fn map<R: CommRing, S: CommRing>(
    target: &S,
    p: &[R::Elem],
    f: impl Fn(&R::Elem) -> S::Elem,
) -> Vec<S::Elem> {
    let mut out: Vec<_> = p.iter().map(f).collect();
    trim(target, &mut out);
    out
}

// Polynomials over a finite field.

/// Division with remainder by a nonzero polynomial.
pub fn divrem(field: &Gf, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(field, b).expect("division by zero polynomial");
    let lead_inv = field.inv(b[db]);
    let mut rem: Vec<u32> = a.to_vec();
    trim(field, &mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0; rem.len() - db];
    while let Some(dr) = degree(field, &rem) {
        if dr < db {
            break;
        }
        let c = field.mul(rem[dr], lead_inv);
        quot[dr - db] = c;
        for (i, &bc) in b.iter().enumerate().take(db + 1) {
            let idx = dr - db + i;
            rem[idx] = field.sub(rem[idx], field.mul(c, bc));
        }
        trim(field, &mut rem);
    }
    trim(field, &mut quot);
    (quot, rem)
}

/// All monic polynomials of the given degree, in increasing code order
/// (`sum c_i q^i` over the non-leading coefficients).
pub fn monic_of_degree(field: &Gf, deg: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    let q = field.order() as u64;
    let count = q.pow(deg as u32);
    (0..count).map(move |mut code| {
        let mut p = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            p.push((code % q) as u32);
            code /= q;
        }
        p.push(1);
        p
    })
}

pub fn is_irreducible(field: &Gf, p: &[u32]) -> bool {
    let Some(d) = degree(field, p) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    for e in 1..=d / 2 {
        for f in monic_of_degree(field, e) {
            if divrem(field, p, &f).1.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Factorization of a monic polynomial into monic irreducibles with
/// multiplicities, sorted by (degree, code).
pub fn factor(field: &Gf, p: &[u32]) -> Vec<(Vec<u32>, u32)> {
    let mut rest: Vec<u32> = p.to_vec();
    trim(field, &mut rest);
    let mut out = Vec::new();
    let mut e = 1;
    while degree(field, &rest).is_some_and(|d| d >= 1) {
        let d = degree(field, &rest).unwrap();
        if e > d {
            out.push((rest.clone(), 1));
            break;
        }
        if 2 * e > d {
            // what is left has no factor of degree <= d/2
            out.push((rest.clone(), 1));
            break;
        }
        for f in monic_of_degree(field, e) {
            let mut mult = 0;
            loop {
                let (qt, r) = divrem(field, &rest, &f);
                if !r.is_empty() {
                    break;
                }
                rest = qt;
                mult += 1;
            }
            if mult > 0 {
                out.push((f, mult));
            }
        }
        e += 1;
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.iter().rev().cmp(b.0.iter().rev())));
    out
}
