use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use typecount_core::archweyl::*;
use typecount_core::globalbound::*;
use typecount_core::mpoly::{MPoly, Rational};

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn ones_match_dimension() {
    for n in 1..=4 {
        for base in [-2, 0, 3] {
            for lambda in dominant_box(n, 6, base) {
                let exact = schur_at_ones(&lambda).unwrap();
                assert_eq!(exact, weyl_dim(&lambda).unwrap() as i128);
                let numeric = schur_trace(&lambda, &vec![Complex64::new(1.0, 0.0); n]).unwrap();
                assert!((numeric.re - exact as f64).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn unitarity_and_regular_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let n = rng.gen_range(2..=3);
        let x: Vec<Complex64> = (0..n).map(|_| unit(rng.gen::<f64>())).collect();
        let bound = regular_bound(&x).unwrap();
        for lambda in dominant_box(n, 12, 0) {
            let s = schur_trace(&lambda, &x).unwrap().norm();
            assert!(s <= weyl_dim(&lambda).unwrap() as f64 + 1e-9);
            assert!(s <= bound * (1.0 + 1e-9) + 1e-9);
        }
    }
}

#[test]
fn weyl_polynomial_evaluates_to_dimension() {
    for n in 1..=4 {
        let p = weyl_polynomial(n);
        for lambda in dominant_box(n, 5, 0) {
            let v = p.eval(&lambda.0).unwrap();
            assert_eq!(v, Rational::from_integer(weyl_dim(&lambda).unwrap() as i128));
        }
    }
}

fn poly(n: usize, terms: &[(i128, &[u32])]) -> MPoly {
    let t: Vec<(Rational, Vec<u32>)> = terms
        .iter()
        .map(|(c, e)| (Rational::from_integer(*c), e.to_vec()))
        .collect();
    MPoly::from_terms(n, &t).unwrap()
}

struct Fixture {
    cfg: GlobalConfig,
    desc: TypeDescriptor,
    err: ErrorTerm,
    c1: BigRational,
    bound: BigRational,
}

fn fixtures() -> Vec<Fixture> {
    let one2 = poly(2, &[(1, &[0, 0])]);
    let one3 = poly(3, &[(1, &[0, 0, 0])]);
    let gap3 = poly(3, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1]), (1, &[0, 0, 0])]);
    vec![
        Fixture {
            cfg: GlobalConfig { n: 2, mu_e: 2, masses: vec![2] },
            desc: TypeDescriptor { finite: vec![], arch: vec![Weight(vec![0, 0])] },
            err: ErrorTerm { c2: q(0, 1), p_v: vec![one2.clone()] },
            c1: q(1, 1),
            bound: q(1, 1),
        },
        Fixture {
            cfg: GlobalConfig { n: 2, mu_e: 2, masses: vec![2, 4] },
            desc: TypeDescriptor { finite: vec![(3, 2)], arch: vec![Weight(vec![1, 0])] },
            err: ErrorTerm { c2: q(1, 1), p_v: vec![one2.clone()] },
            c1: q(3, 2),
            bound: q(4, 1),
        },
        Fixture {
            cfg: GlobalConfig { n: 3, mu_e: 6, masses: vec![6, 12, 18] },
            desc: TypeDescriptor { finite: vec![(2, 3)], arch: vec![Weight(vec![2, 1, 0])] },
            err: ErrorTerm { c2: q(1, 2), p_v: vec![gap3] },
            c1: q(11, 6),
            bound: q(79, 2),
        },
        Fixture {
            cfg: GlobalConfig { n: 2, mu_e: 4, masses: vec![8, 8, 12] },
            desc: TypeDescriptor {
                finite: vec![(5, 4), (3, 6)],
                arch: vec![Weight(vec![3, 0]), Weight(vec![1, 1])],
            },
            err: ErrorTerm { c2: q(2, 1), p_v: vec![one2.clone(), one2] },
            c1: q(4, 3),
            bound: q(120, 1),
        },
        Fixture {
            cfg: GlobalConfig { n: 3, mu_e: 2, masses: vec![4] },
            desc: TypeDescriptor { finite: vec![], arch: vec![Weight(vec![0, 0, 0])] },
            err: ErrorTerm { c2: q(3, 1), p_v: vec![one3] },
            c1: q(1, 2),
            bound: q(-5, 2),
        },
    ]
}

#[test]
fn fixture_values() {
    for f in fixtures() {
        assert_eq!(c1(&f.cfg).unwrap(), f.c1);
        assert_eq!(lower_bound(&f.cfg, &f.desc, &f.err).unwrap(), f.bound);
        let main = f.c1.clone() * type_dimension(&f.desc).unwrap();
        assert!(lower_bound(&f.cfg, &f.desc, &f.err).unwrap() <= main);
    }
}

#[test]
fn scans_are_stable() {
    for f in fixtures() {
        let places: Vec<u64> = f.desc.finite.iter().map(|p| p.0).collect();
        let scan = positivity_scan(&f.cfg, &f.err, &places, 8).unwrap();
        assert!(scan.stable);
        assert!(scan.crossovers.iter().all(|c| c.s0.is_some()));
    }
}
