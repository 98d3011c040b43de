//! Truncated local rings over the equal-characteristic field `F = F_q((t))`.
//!
//! * base: `O_F/t^k = F_q[t]/(t^k)`
//! * unramified: `O_E/p_E^k = F_{q^n}[t]/(t^k)`
//! * ramified: `O_E/p_E^k = F_q[u]/(u^k)` with `t = u^n` (Eisenstein model)
//!
//! An element is its vector of `k` digits in the residue field, lowest power
//! first. The level is the truncation exponent in the uniformizer of the
//! ring itself (`t` for base and unramified, `u` for ramified).

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::Gf;
use crate::poly::{self, CommRing};
use crate::towerfield::make_tower;
use crate::util::is_prime;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    Base,
    Unramified,
    Ramified,
}

/// Element of a [`TruncRing`]: residue-field digits, lowest power first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElem(pub Vec<u32>);

impl RingElem {
    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn residue(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }
}

/// Polynomial with [`RingElem`] coefficients, lowest degree first.
pub type RingPoly = Vec<RingElem>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncRing {
    kind: RingKind,
    q: u64,
    n: u32,
    level: usize,
    residue: Arc<Gf>,
    base_residue: Arc<Gf>,
}

/// Builds `O_F/t^k`, or `O_E/p_E^k` for `E/F` unramified or totally
/// ramified of prime degree `n`. `n` is ignored for the base ring.
pub fn make_ring(kind: RingKind, q: u64, n: u32, k: usize) -> Result<TruncRing> {
    if k == 0 {
        return Err(Error::InvalidParameter("truncation level must be positive"));
    }
    let base_residue = Arc::new(Gf::new(q)?);
    let (n, residue) = match kind {
        RingKind::Base => (1, base_residue.clone()),
        RingKind::Unramified => {
            let tower = make_tower(q, n)?;
            (n, tower.ext().clone())
        }
        RingKind::Ramified => {
            if !is_prime(n as u64) {
                return Err(Error::NotPrime(n as u64));
            }
            (n, base_residue.clone())
        }
    };
    Ok(TruncRing {
        kind,
        q,
        n,
        level: k,
        residue,
        base_residue,
    })
}

impl TruncRing {
    /// The same ring at another truncation level.
    pub fn with_level(&self, level: usize) -> TruncRing {
        assert!(level >= 1, "truncation level must be positive");
        TruncRing {
            level,
            ..self.clone()
        }
    }

    /// `O_F/t^level` over the same `F_q`.
    pub fn base_ring(&self, level: usize) -> TruncRing {
        TruncRing {
            kind: RingKind::Base,
            n: 1,
            level,
            residue: self.base_residue.clone(),
            base_residue: self.base_residue.clone(),
            q: self.q,
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Residue field: `F_q`, or `F_{q^n}` for the unramified ring.
    pub fn residue_field(&self) -> &Arc<Gf> {
        &self.residue
    }

    pub fn base_field(&self) -> &Arc<Gf> {
        &self.base_residue
    }

    /// Ramification index of the ring over `O_F` (1 for base and unramified).
    pub fn ramification(&self) -> usize {
        match self.kind {
            RingKind::Ramified => self.n as usize,
            _ => 1,
        }
    }

    /// Number of elements.
    pub fn size(&self) -> u128 {
        (self.residue.order() as u128).pow(self.level as u32)
    }

    /// Closed-form unit count `(Q-1) Q^{k-1}`, `Q` the residue field order.
    pub fn unit_count(&self) -> u128 {
        let big_q = self.residue.order() as u128;
        (big_q - 1) * big_q.pow(self.level as u32 - 1)
    }

    pub fn from_residue(&self, c: u32) -> RingElem {
        let mut d = vec![0; self.level];
        d[0] = c;
        RingElem(d)
    }

    /// The uniformizer (`t`, or `u` for the ramified ring).
    pub fn uniformizer(&self) -> RingElem {
        let mut d = vec![0; self.level];
        if self.level > 1 {
            d[1] = 1;
        }
        RingElem(d)
    }

    /// `pi^s`.
    pub fn uniformizer_pow(&self, s: usize) -> RingElem {
        let mut d = vec![0; self.level];
        if s < self.level {
            d[s] = 1;
        }
        RingElem(d)
    }

    /// Image of `sum a_i t^i` (digits in `F_q`, any length).
    pub fn embed_base(&self, digits: &[u32]) -> RingElem {
        let e = self.ramification();
        let mut d = vec![0; self.level];
        for (i, &a) in digits.iter().enumerate() {
            let idx = i * e;
            if idx >= self.level {
                break;
            }
            d[idx] = a;
        }
        RingElem(d)
    }

    /// Builds an element from digits, padding or truncating to the level.
    pub fn elem(&self, digits: &[u32]) -> RingElem {
        let mut d = digits.to_vec();
        d.resize(self.level, 0);
        RingElem(d)
    }

    /// Element with index `idx` in base-`Q` digit order.
    pub fn element_at(&self, mut idx: u128) -> RingElem {
        let big_q = self.residue.order() as u128;
        let d = (0..self.level)
            .map(|_| {
                let c = (idx % big_q) as u32;
                idx /= big_q;
                c
            })
            .collect();
        RingElem(d)
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElem> + '_ {
        (0..self.size()).map(move |i| self.element_at(i))
    }

    pub fn units(&self) -> impl Iterator<Item = RingElem> + '_ {
        self.elements().filter(|x| x.0[0] != 0)
    }

    /// Valuation in the ring's uniformizer; `None` for zero.
    pub fn valuation(&self, x: &RingElem) -> Option<usize> {
        x.0.iter().position(|&c| c != 0)
    }

    pub fn is_unit(&self, x: &RingElem) -> bool {
        x.0[0] != 0
    }

    /// Inverse of a unit.
    pub fn inv(&self, x: &RingElem) -> Result<RingElem> {
        if !self.is_unit(x) {
            return Err(Error::NotInvertible);
        }
        let f = &*self.residue;
        let c0_inv = f.inv(x.0[0]);
        let mut y = vec![0u32; self.level];
        y[0] = c0_inv;
        for j in 1..self.level {
            let mut s = 0;
            for i in 1..=j {
                s = f.add(s, f.mul(x.0[i], y[j - i]));
            }
            y[j] = f.neg(f.mul(c0_inv, s));
        }
        Ok(RingElem(y))
    }

    pub fn pow(&self, x: &RingElem, mut e: u64) -> RingElem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = CommRing::mul(self, &acc, &base);
            }
            base = CommRing::mul(self, &base, &base);
            e >>= 1;
        }
        acc
    }

    /// `x / pi^s`, assuming `val(x) >= s`; the top `s` digits become zero
    /// (they are not determined by `x`).
    pub fn shift_down(&self, x: &RingElem, s: usize) -> RingElem {
        let mut d = vec![0; self.level];
        for i in s..self.level {
            d[i - s] = x.0[i];
        }
        RingElem(d)
    }

    /// `x * pi^s`.
    pub fn shift_up(&self, x: &RingElem, s: usize) -> RingElem {
        let mut d = vec![0; self.level];
        for i in 0..self.level.saturating_sub(s) {
            d[i + s] = x.0[i];
        }
        RingElem(d)
    }

    /// Reduction to a lower level (or zero-padded lift to a higher one).
    pub fn reduce_to(&self, x: &RingElem, level: usize) -> RingElem {
        let mut d = x.0.clone();
        d.resize(level, 0);
        RingElem(d)
    }

    pub fn scale_residue(&self, c: u32, x: &RingElem) -> RingElem {
        let f = &*self.residue;
        RingElem(x.0.iter().map(|&a| f.mul(c, a)).collect())
    }
}

impl CommRing for TruncRing {
    type Elem = RingElem;

    fn zero(&self) -> RingElem {
        RingElem(vec![0; self.level])
    }

    fn one(&self) -> RingElem {
        self.from_residue(1)
    }

    fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = &*self.residue;
        RingElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.add(x, y)).collect())
    }

    fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = &*self.residue;
        RingElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    fn neg(&self, a: &RingElem) -> RingElem {
        let f = &*self.residue;
        RingElem(a.0.iter().map(|&x| f.neg(x)).collect())
    }

    fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = &*self.residue;
        let k = self.level;
        let mut out = vec![0u32; k];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate().take(k - i) {
                if y != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(x, y));
                }
            }
        }
        RingElem(out)
    }

    fn is_zero(&self, a: &RingElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    fn from_int(&self, k: i64) -> RingElem {
        self.from_residue(self.residue.from_int(k))
    }
}

/// Unit roots of a monic polynomial, with a flag for fallback search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HenselRoots {
    /// Sorted, distinct.
    pub roots: Vec<RingElem>,
    /// Set when some residue root was multiple, so its fiber was searched
    /// exhaustively instead of lifted uniquely.
    pub fallback: bool,
}

/// All unit roots of the monic polynomial `p` (coefficients in `ring`).
///
/// Residue roots are found by exhaustive search. Simple residue roots lift
/// uniquely by Newton iteration; multiple ones are lifted digit by digit
/// through an exhaustive fiber search, and `fallback` is set.
pub fn hensel_roots(p: &[RingElem], ring: &TruncRing) -> HenselRoots {
    let f = &**ring.residue_field();
    let mut p = p.to_vec();
    poly::trim(ring, &mut p);
    assert!(
        p.last().is_some_and(|c| *c == ring.one()),
        "hensel_roots expects a monic polynomial"
    );
    let residue_poly: Vec<u32> = p.iter().map(|c| c.residue()).collect();
    let residue_deriv = poly::derivative(f, &residue_poly);
    let dp = poly::derivative(ring, &p);

    let mut roots = Vec::new();
    let mut fallback = false;
    for r0 in f.units() {
        if poly::eval(f, &residue_poly, &r0) != 0 {
            continue;
        }
        if poly::eval(f, &residue_deriv, &r0) != 0 {
            let mut r = ring.from_residue(r0);
            for _ in 0..ring.level() + 1 {
                let value = poly::eval(ring, &p, &r);
                if ring.is_zero(&value) {
                    break;
                }
                let slope = poly::eval(ring, &dp, &r);
                let step = CommRing::mul(ring, &value, &ring.inv(&slope).expect("simple root"));
                r = CommRing::sub(ring, &r, &step);
            }
            debug_assert!(ring.is_zero(&poly::eval(ring, &p, &r)));
            roots.push(r);
        } else {
            fallback = true;
            let mut frontier = vec![ring.from_residue(r0)];
            for j in 1..ring.level() {
                let mut next = Vec::new();
                for cand in &frontier {
                    for c in f.elements() {
                        let mut x = cand.clone();
                        x.0[j] = c;
                        let v = poly::eval(ring, &p, &x);
                        if ring.valuation(&v).is_none_or(|val| val > j) {
                            next.push(x);
                        }
                    }
                }
                frontier = next;
            }
            roots.extend(frontier);
        }
    }
    roots.sort();
    roots.dedup();
    HenselRoots { roots, fallback }
}

/// Unit roots of a monic polynomial with coefficients in `O_F` (given as
/// `t`-digit vectors over `F_q`), embedded into `ring`.
pub fn hensel_roots_base(p: &[Vec<u32>], ring: &TruncRing) -> HenselRoots {
    let embedded: Vec<RingElem> = p.iter().map(|c| ring.embed_base(c)).collect();
    hensel_roots(&embedded, ring)
}

/// Roots of `x^n - eta` for a unit `eta`. The fallback flag is always raised
/// when `n` equals the residual characteristic.
pub fn nth_power_roots(eta: &RingElem, ring: &TruncRing, n: u32) -> Result<HenselRoots> {
    if !ring.is_unit(eta) {
        return Err(Error::NotInvertible);
    }
    let mut p = vec![ring.zero(); n as usize + 1];
    p[0] = CommRing::neg(ring, eta);
    p[n as usize] = ring.one();
    let mut roots = hensel_roots(&p, ring);
    if n % ring.residue_field().characteristic() == 0 {
        roots.fallback = true;
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_sizes() {
        assert_eq!(make_ring(RingKind::Base, 2, 1, 1).unwrap().size(), 2);
        assert_eq!(make_ring(RingKind::Unramified, 2, 2, 2).unwrap().size(), 16);
        assert_eq!(make_ring(RingKind::Ramified, 3, 2, 3).unwrap().size(), 27);
        assert!(make_ring(RingKind::Base, 2, 1, 0).is_err());
    }

    #[test]
    fn unit_counts_match_brute_force() {
        for (kind, q, n, k) in [
            (RingKind::Base, 3, 1, 3),
            (RingKind::Unramified, 2, 2, 3),
            (RingKind::Unramified, 3, 2, 2),
            (RingKind::Ramified, 2, 3, 4),
            (RingKind::Ramified, 5, 2, 2),
        ] {
            let r = make_ring(kind, q, n, k).unwrap();
            assert_eq!(r.units().count() as u128, r.unit_count());
        }
    }

    #[test]
    fn ramified_valuation_of_t() {
        let r = make_ring(RingKind::Ramified, 3, 2, 5).unwrap();
        let t = r.embed_base(&[0, 1]);
        assert_eq!(r.valuation(&t), Some(2));
        let r3 = make_ring(RingKind::Ramified, 2, 3, 5).unwrap();
        assert_eq!(r3.valuation(&r3.embed_base(&[0, 1])), Some(3));
    }

    #[test]
    fn valuation_is_additive() {
        let r = make_ring(RingKind::Unramified, 2, 2, 4).unwrap();
        for a in r.elements().step_by(7) {
            for b in r.elements().step_by(11) {
                let (Some(va), Some(vb)) = (r.valuation(&a), r.valuation(&b)) else {
                    continue;
                };
                if va + vb < r.level() {
                    assert_eq!(r.valuation(&CommRing::mul(&r, &a, &b)), Some(va + vb));
                }
            }
        }
    }

    #[test]
    fn inverse_of_units() {
        let r = make_ring(RingKind::Ramified, 3, 2, 4).unwrap();
        for u in r.units() {
            assert_eq!(CommRing::mul(&r, &u, &r.inv(&u).unwrap()), r.one());
        }
        assert_eq!(r.inv(&r.uniformizer()), Err(Error::NotInvertible));
    }

    #[test]
    fn hensel_x2_x_1_over_f2() {
        for k in 1..=4 {
            let r = make_ring(RingKind::Unramified, 2, 2, k).unwrap();
            let roots = hensel_roots_base(&[vec![1], vec![1], vec![1]], &r);
            assert_eq!(roots.roots.len(), 2, "level {k}");
            assert!(!roots.fallback);
        }
    }

    #[test]
    fn hensel_x2_minus_1_over_f3() {
        let r = make_ring(RingKind::Unramified, 3, 2, 2).unwrap();
        let roots = hensel_roots_base(&[vec![2], vec![0], vec![1]], &r);
        assert_eq!(roots.roots, vec![r.from_residue(1), r.from_residue(2)]);
    }

    #[test]
    fn irreducible_image_has_no_roots() {
        // x^2 + 1 is irreducible over F_3 but splits in F_9; x^3 - x - 1 is
        // irreducible over F_3 and has no root in F_9.
        let r = make_ring(RingKind::Unramified, 3, 2, 2).unwrap();
        let roots = hensel_roots_base(&[vec![2], vec![2], vec![0], vec![1]], &r);
        assert!(roots.roots.is_empty());
    }

    #[test]
    fn nth_power_roots_examples() {
        let r = make_ring(RingKind::Unramified, 3, 2, 1).unwrap();
        let ones = nth_power_roots(&r.one(), &r, 2).unwrap();
        assert_eq!(ones.roots.len(), 2);
        // the generator of F_9^x is not a square
        let g = r.from_residue(r.residue_field().generator());
        assert!(nth_power_roots(&g, &r, 2).unwrap().roots.is_empty());

        let r2 = make_ring(RingKind::Unramified, 2, 2, 3).unwrap();
        let sq = nth_power_roots(&r2.one(), &r2, 2).unwrap();
        assert!(sq.fallback);
        for x in &sq.roots {
            assert_eq!(CommRing::mul(&r2, x, x), r2.one());
        }
        // brute force agrees with the fiber search
        let brute: Vec<_> = r2
            .units()
            .filter(|x| CommRing::mul(&r2, x, x) == r2.one())
            .collect();
        assert_eq!(sq.roots, brute);
    }
}
