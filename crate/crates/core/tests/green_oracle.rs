//! Green's cuspidal characters against brute-force class data.

use std::collections::BTreeSet;

use typecount_core::field::Gf;
use typecount_core::greenchar::{
    class_function, conj_classes, cuspidal_table, depth_zero_bound, gl_fq, green_value,
    inner_product, trivial_character, CuspidalCharacter,
};
use typecount_core::matrix::{self, inverse_fq, Mat};
use typecount_core::towerfield::{make_tower, regular_orbits};
use typecount_core::util::cuspidal_degree;
use typecount_core::DEFAULT_BUDGET;

/// Conjugacy orbits by direct conjugation, as sorted sets of matrices.
fn true_orbits(q: u64, n: usize) -> BTreeSet<BTreeSet<Mat<u32>>> {
    let f = Gf::new(q).unwrap();
    let group: Vec<Mat<u32>> = gl_fq(&f, n).collect();
    let inverses: Vec<Mat<u32>> = group.iter().map(|h| inverse_fq(&f, h).unwrap()).collect();
    let mut seen = BTreeSet::new();
    let mut orbits = BTreeSet::new();
    for g in &group {
        if seen.contains(g) {
            continue;
        }
        let orbit: BTreeSet<Mat<u32>> = group
            .iter()
            .zip(&inverses)
            .map(|(h, hi)| matrix::mul(&f, &matrix::mul(&f, h, g), hi))
            .collect();
        seen.extend(orbit.iter().cloned());
        orbits.insert(orbit);
    }
    orbits
}

#[test]
fn invariant_classes_are_conjugacy_classes() {
    for (q, n) in [(2u64, 2usize), (3, 2), (2, 3)] {
        let f = Gf::new(q).unwrap();
        let orbits = true_orbits(q, n);
        let classes = conj_classes(q, n as u32, DEFAULT_BUDGET).unwrap();
        assert_eq!(orbits.len(), classes.len());
        for c in &classes {
            let orbit = orbits.iter().find(|o| o.contains(&c.rep)).unwrap();
            assert_eq!(orbit.len() as u64, c.size);
            for m in orbit {
                assert_eq!(matrix::charpoly(&f, m), c.charpoly);
            }
        }
    }
}

#[test]
fn orthonormality() {
    for (q, n) in [(2u64, 2u32), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)] {
        let tower = make_tower(q, n).unwrap();
        let table = cuspidal_table(&tower, DEFAULT_BUDGET).unwrap();
        let triv = trivial_character(&tower, &table.classes);
        let cols: Vec<_> = (0..table.orbits.len()).map(|i| table.column(i)).collect();
        for (i, a) in cols.iter().enumerate() {
            assert!(inner_product(a, &triv, &table.classes).is_integer(0));
            for (j, b) in cols.iter().enumerate() {
                let ip = inner_product(a, b, &table.classes);
                assert!(ip.is_integer(i64::from(i == j)), "q={q} n={n} {i} {j}");
            }
        }
    }
}

#[test]
fn degree_and_bounds() {
    for (q, n) in [(2u64, 2u32), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)] {
        let tower = make_tower(q, n).unwrap();
        let classes = conj_classes(q, n, DEFAULT_BUDGET).unwrap();
        for k in regular_orbits(&tower) {
            let chi = CuspidalCharacter::new(k, &tower).unwrap();
            let values = class_function(&chi, &classes).unwrap();
            for (c, v) in classes.iter().zip(&values) {
                if c.is_central() {
                    let dim = cuspidal_degree(q, n) as i64;
                    let scalar = *c.rep.get(0, 0);
                    if scalar == 1 {
                        assert_eq!(v.as_integer(), Some(dim));
                    }
                    assert!((v.abs() - dim as f64).abs() < 1e-9);
                    continue;
                }
                let bound = depth_zero_bound(c, q, n).unwrap();
                assert!(v.abs() <= bound as f64 + 1e-9);
                if c.d == Some(n) {
                    assert!(v.abs() <= n as f64 + 1e-9);
                }
                if c.d.is_none() {
                    assert!(green_value(&chi, c).unwrap().is_zero());
                }
            }
        }
    }
}
