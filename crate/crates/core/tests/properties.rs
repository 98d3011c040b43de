use num_complex::Complex64;
use proptest::prelude::*;
use typecount_core::archweyl::{schur_trace, unit, weyl_dim, weyl_polynomial, Weight};
use typecount_core::globalbound::{c1, GlobalConfig};
use typecount_core::localring::{make_ring, RingKind};
use typecount_core::matrix::{self, OMatrix};
use typecount_core::mpoly::Rational;
use typecount_core::poly::CommRing;
use typecount_core::towerfield::{char_value, make_tower, CharacterIndex};

fn dominant(raw: Vec<i64>) -> Weight {
    let mut v = raw;
    v.sort_unstable_by(|a, b| b.cmp(a));
    Weight(v)
}

proptest! {
    #[test]
    fn characters_are_multiplicative(k in 0u64..26, a in 1u32..27, b in 1u32..27) {
        let tower = make_tower(3, 3).unwrap();
        let ext = tower.ext();
        let lhs = char_value(CharacterIndex(k), ext.mul(a, b), &tower).unwrap();
        let rhs = &char_value(CharacterIndex(k), a, &tower).unwrap()
            * &char_value(CharacterIndex(k), b, &tower).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn valuation_is_additive(x in 0u128..3u128.pow(8), y in 0u128..3u128.pow(8)) {
        let ring = make_ring(RingKind::Unramified, 3, 2, 4).unwrap();
        let (a, b) = (ring.element_at(x), ring.element_at(y));
        if let (Some(va), Some(vb)) = (ring.valuation(&a), ring.valuation(&b)) {
            if va + vb < 4 {
                prop_assert_eq!(ring.valuation(&ring.mul(&a, &b)), Some(va + vb));
            }
        }
    }

    #[test]
    fn ramified_valuation_is_additive(x in 0u128..2u128.pow(6), y in 0u128..2u128.pow(6)) {
        let ring = make_ring(RingKind::Ramified, 2, 3, 6).unwrap();
        let (a, b) = (ring.element_at(x), ring.element_at(y));
        if let (Some(va), Some(vb)) = (ring.valuation(&a), ring.valuation(&b)) {
            if va + vb < 6 {
                prop_assert_eq!(ring.valuation(&ring.mul(&a, &b)), Some(va + vb));
            }
        }
    }

    #[test]
    fn local_inverse(idx in 0u128..5u128.pow(8)) {
        let ring = make_ring(RingKind::Base, 5, 1, 2).unwrap();
        let g = OMatrix::from_index(&ring, 2, idx);
        if g.is_invertible() {
            let prod = g.mul(&g.inverse().unwrap());
            prop_assert_eq!(prod.mat(), &matrix::identity(&ring, 2));
        }
    }

    #[test]
    fn c1_is_permutation_invariant(mut masses in prop::collection::vec(1u64..20, 1..6), seed in 0usize..100) {
        let cfg = |m: Vec<u64>| GlobalConfig { n: 2, mu_e: 1, masses: m };
        let before = c1(&cfg(masses.clone())).unwrap();
        let len = masses.len();
        masses.rotate_left(seed % len);
        masses.reverse();
        prop_assert_eq!(c1(&cfg(masses)).unwrap(), before);
    }

    #[test]
    fn weyl_polynomial_matches_dimension(raw in prop::collection::vec(-6i64..6, 1..5)) {
        let w = dominant(raw);
        let p = weyl_polynomial(w.n());
        prop_assert_eq!(p.eval(&w.0).unwrap(), Rational::from_integer(weyl_dim(&w).unwrap() as i128));
    }

    #[test]
    fn determinant_shift_preserves_modulus(
        raw in prop::collection::vec(0i64..8, 3),
        c in -4i64..4,
        th in prop::collection::vec(0.0f64..1.0, 3),
    ) {
        let w = dominant(raw);
        let x: Vec<Complex64> = th.iter().map(|&t| unit(t)).collect();
        let a = schur_trace(&w, &x).unwrap();
        let b = schur_trace(&w.shift(c), &x).unwrap();
        let det: Complex64 = x.iter().product();
        prop_assert!((b - a * det.powi(c as i32)).norm() < 1e-9);
    }
}
