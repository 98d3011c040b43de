//! The tower `F_q ⊂ F_{q^n}` and the characters of `F_{q^n}^×`.
//!
//! `F_{q^n}` is `F_q[y]/(M)` for the smallest monic primitive `M` of degree
//! `n` over `F_q` (see [`crate::field`]), and the fixed generator is `y`.
//! A character index `k` stands for `theta^k` where `theta(y) = zeta_{q^n-1}`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cyclotomic::{CycInt, CyclotomicField};
use crate::field::Gf;
use crate::util::{is_prime, prime_power};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct TowerField {
    q: u64,
    n: u32,
    base: Arc<Gf>,
    ext: Arc<Gf>,
    cyclo: Arc<CyclotomicField>,
}

impl PartialEq for TowerField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.n == other.n
    }
}

impl Eq for TowerField {}

/// Builds the tower `F_q ⊂ F_{q^n}` for a prime power `q` and a prime `n`.
pub fn make_tower(q: u64, n: u32) -> Result<TowerField> {
    if !is_prime(n as u64) {
        return Err(Error::NotPrime(n as u64));
    }
    prime_power(q)?;
    let base = Gf::new(q)?;
    let ext = Gf::extend(&base, n)?;
    let cyclo = CyclotomicField::new(ext.order() - 1);
    Ok(TowerField {
        q,
        n,
        base: Arc::new(base),
        ext: Arc::new(ext),
        cyclo,
    })
}

impl TowerField {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `F_q`.
    pub fn base(&self) -> &Arc<Gf> {
        &self.base
    }

    /// `F_{q^n}`; base-field codes are the embedded subfield.
    pub fn ext(&self) -> &Arc<Gf> {
        &self.ext
    }

    /// Defining polynomial of `F_{q^n}` over `F_q`, monic, low degree first.
    pub fn modulus(&self) -> &[u32] {
        self.ext.modulus()
    }

    pub fn generator(&self) -> u32 {
        self.ext.generator()
    }

    /// `q^n - 1`.
    pub fn unit_order(&self) -> u64 {
        self.ext.order() as u64 - 1
    }

    /// The ring `Z[zeta_{q^n-1}]` holding character values.
    pub fn cyclotomic(&self) -> &Arc<CyclotomicField> {
        &self.cyclo
    }

    /// Frobenius `x -> x^q`.
    pub fn frobenius(&self, x: u32) -> u32 {
        self.ext.frobenius(x)
    }
}

/// A character `theta^k` of `F_{q^n}^×`, `k` taken mod `q^n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterIndex(pub u64);

impl CharacterIndex {
    /// Frobenius orbit `{k, kq, ..., kq^{n-1}}` mod `q^n - 1`, in orbit order.
    pub fn orbit(self, tower: &TowerField) -> Vec<u64> {
        let m = tower.unit_order();
        let mut out = Vec::with_capacity(tower.n as usize);
        let mut k = self.0 % m;
        for _ in 0..tower.n {
            out.push(k);
            k = k * tower.q % m;
        }
        out
    }
}

/// Whether `theta^k` has a full Frobenius orbit of size `n`.
pub fn is_regular(k: CharacterIndex, tower: &TowerField) -> bool {
    let mut orbit = k.orbit(tower);
    orbit.sort_unstable();
    orbit.dedup();
    orbit.len() == tower.n as usize
}

/// Minimal representatives of the regular Frobenius orbits, increasing.
pub fn regular_orbits(tower: &TowerField) -> Vec<CharacterIndex> {
    let m = tower.unit_order();
    (0..m)
        .map(CharacterIndex)
        .filter(|&k| is_regular(k, tower) && k.orbit(tower).iter().all(|&j| j >= k.0))
        .collect()
}

/// `theta^k(x)` as an exact element of `Z[zeta_{q^n-1}]`.
pub fn char_value(k: CharacterIndex, x: u32, tower: &TowerField) -> Result<CycInt> {
    let j = tower.ext.log(x)? as u64;
    let m = tower.unit_order();
    Ok(CycInt::root_power(&tower.cyclo, (k.0 % m) * j % m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_towers() {
        for (q, n, order) in [(2, 2, 4), (3, 2, 9), (2, 3, 8)] {
            let t = make_tower(q, n).unwrap();
            assert_eq!(t.ext().order(), order);
            assert_eq!(t.modulus().len(), n as usize + 1);
            assert!(crate::poly::is_irreducible(t.base(), t.modulus()));
        }
        assert_eq!(make_tower(2, 4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(make_tower(6, 2).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn frobenius_fixes_exactly_the_base() {
        for (q, n) in [(2, 2), (3, 2), (4, 2), (2, 3)] {
            let t = make_tower(q, n).unwrap();
            for x in t.ext().elements() {
                assert_eq!(t.frobenius(x) == x, t.ext().in_base(x));
            }
        }
    }

    #[test]
    fn regularity_examples() {
        let t22 = make_tower(2, 2).unwrap();
        let t32 = make_tower(3, 2).unwrap();
        assert!(!is_regular(CharacterIndex(0), &t22));
        assert!(is_regular(CharacterIndex(1), &t22));
        assert!(!is_regular(CharacterIndex(4), &t32));
    }

    #[test]
    fn orbit_counts() {
        let reps = |q, n| {
            regular_orbits(&make_tower(q, n).unwrap())
                .into_iter()
                .map(|k| k.0)
                .collect::<Vec<_>>()
        };
        assert_eq!(reps(2, 2), [1]);
        assert_eq!(reps(3, 2), [1, 2, 5]);
        assert_eq!(reps(2, 3), [1, 3]);
    }

    #[test]
    fn char_values() {
        let t = make_tower(2, 2).unwrap();
        let one = CycInt::one(t.cyclotomic());
        assert_eq!(char_value(CharacterIndex(5), 1, &t).unwrap(), one);
        assert_eq!(char_value(CharacterIndex(0), 3, &t).unwrap(), one);
        let w = t.generator();
        let s = &char_value(CharacterIndex(1), w, &t).unwrap()
            + &char_value(CharacterIndex(1), t.ext().mul(w, w), &t).unwrap();
        assert_eq!(s.as_integer(), Some(-1));
        assert_eq!(char_value(CharacterIndex(1), 0, &t), Err(Error::ZeroElement));
    }
}
