//! Lower bounds for multiplicities of automorphic representations of a
//! definite unitary group containing a global type.
//!
//! The bound has the shape `C_1 dim(tau) - C_2 n^{|S|} prod_v P_v(lambda_v)`
//! with `C_1 = |mu_E| sum_g 1/|K_g|`. The masses `|K_g|`, the constant `C_2`
//! and the polynomials `P_v` are inputs.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::archweyl::{dominant_box, weyl_dim, Weight};
use crate::mpoly::{MPoly, Rational};
use crate::util::cuspidal_degree;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalConfig {
    pub n: u32,
    /// `|mu_E|`.
    pub mu_e: u64,
    /// `|K_g|` for each double-coset representative `g`.
    pub masses: Vec<u64>,
}

/// The noncentral contribution `C_2 n^{|S|} prod_v P_v(lambda_v)`: one
/// polynomial per infinite place, in the `n` weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorTerm {
    pub c2: BigRational,
    pub p_v: Vec<MPoly>,
}

/// A global type: its ramified finite places `(q_v, dim_v)` and the
/// highest weights at the infinite places.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TypeDescriptor {
    pub finite: Vec<(u64, u128)>,
    pub arch: Vec<Weight>,
}

fn big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// `|mu_E| sum_g 1/|K_g|`, exact.
pub fn c1(cfg: &GlobalConfig) -> Result<BigRational> {
    if cfg.masses.is_empty() {
        return Err(Error::EmptyMasses);
    }
    let mut total = BigRational::zero();
    for &m in &cfg.masses {
        if m == 0 || m % cfg.mu_e != 0 {
            return Err(Error::MassNotDivisible {
                mass: m,
                mu: cfg.mu_e,
            });
        }
        total += BigRational::new(BigInt::one(), BigInt::from(m));
    }
    Ok(total * BigInt::from(cfg.mu_e))
}

/// `(q-1)(q^2-1)...(q^{n-1}-1)`.
pub fn min_cuspidal_dim(q: u64, n: u32) -> u128 {
    cuspidal_degree(q, n)
}

impl TypeDescriptor {
    pub fn validate(&self, n: u32) -> Result<()> {
        for &(q, dim) in &self.finite {
            let min = min_cuspidal_dim(q, n);
            if dim < min {
                return Err(Error::LocalDimensionTooSmall { q, dim, min });
            }
        }
        for w in &self.arch {
            if w.n() != n as usize {
                return Err(Error::Dimension("weight length differs from n"));
            }
        }
        Ok(())
    }
}

/// `prod_{v in S} dim_v prod_{v | infinity} dim xi_{lambda_v}`.
pub fn type_dimension(desc: &TypeDescriptor) -> Result<BigInt> {
    let mut d = BigInt::one();
    for &(_, dim) in &desc.finite {
        d *= BigInt::from(dim);
    }
    for w in &desc.arch {
        d *= BigInt::from(weyl_dim(w)?);
    }
    Ok(d)
}

/// `C_2 n^{|S|} prod_v P_v(lambda_v)`.
pub fn error_term(cfg: &GlobalConfig, desc: &TypeDescriptor, err: &ErrorTerm) -> Result<BigRational> {
    if err.p_v.len() != desc.arch.len() {
        return Err(Error::Dimension("one polynomial per infinite place is required"));
    }
    let mut e = err.c2.clone() * BigInt::from(cfg.n).pow(desc.finite.len() as u32);
    for (p, w) in err.p_v.iter().zip(&desc.arch) {
        e *= big(p.eval(&w.0)?);
    }
    Ok(e)
}

/// `c1 dim(tau) - C_2 n^{|S|} prod_v P_v(lambda_v)`.
pub fn lower_bound(cfg: &GlobalConfig, desc: &TypeDescriptor, err: &ErrorTerm) -> Result<BigRational> {
    desc.validate(cfg.n)?;
    if err.c2.is_negative() {
        return Err(Error::InvalidParameter("C_2 must be nonnegative"));
    }
    let main = c1(cfg)? * type_dimension(desc)?;
    Ok(main - error_term(cfg, desc, err)?)
}

/// Where the bound along a ray at one infinite place turns increasing and
/// positive for good.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayCrossover {
    /// Ramified finite places (indices into the place list).
    pub support: Vec<usize>,
    pub place: usize,
    /// Smallest `s0` such that along `lambda = s (1, 0, ..., 0)` the bound is
    /// positive and increasing for all scanned `s >= s0`.
    pub s0: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityScan {
    pub box_size: u64,
    /// Minimal-dimension types with weight gaps `<= box_size` whose bound is
    /// `<= 0`.
    pub exceptional: Vec<TypeDescriptor>,
    /// The exceptional set of the doubled box equals `exceptional`.
    pub stable: bool,
    pub crossovers: Vec<RayCrossover>,
}

fn check_degrees(n: u32, err: &ErrorTerm) -> Result<()> {
    let weyl = (n * n - n) / 2;
    for p in &err.p_v {
        if let Some(d) = p.degree() {
            if d >= weyl {
                return Err(Error::DegreeTooHigh { degree: d, weyl });
            }
        }
    }
    Ok(())
}

fn subsets(k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << k).map(move |mask| (0..k).filter(|i| mask >> i & 1 == 1).collect())
}

fn descriptor(places: &[u64], n: u32, support: &[usize], arch: Vec<Weight>) -> TypeDescriptor {
    TypeDescriptor {
        finite: support
            .iter()
            .map(|&i| (places[i], min_cuspidal_dim(places[i], n)))
            .collect(),
        arch,
    }
}

fn exceptional_set(
    cfg: &GlobalConfig,
    err: &ErrorTerm,
    places: &[u64],
    box_size: u64,
) -> Result<BTreeSet<TypeDescriptor>> {
    let n = cfg.n;
    let weights = dominant_box(n as usize, box_size, 0);
    let ninf = err.p_v.len();
    let mut out = BTreeSet::new();
    for support in subsets(places.len()) {
        // odometer over one weight per infinite place
        let mut idx = vec![0usize; ninf];
        loop {
            let arch = idx.iter().map(|&i| weights[i].clone()).collect();
            let desc = descriptor(places, n, &support, arch);
            if !lower_bound(cfg, &desc, err)?.is_positive() {
                out.insert(desc);
            }
            let mut pos = 0;
            while pos < ninf {
                idx[pos] += 1;
                if idx[pos] < weights.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == ninf {
                break;
            }
        }
    }
    Ok(out)
}

/// Types of minimal local dimension (unramified twists normalized by
/// `a_n = 0`) supported on subsets of `places`, with weight gaps at most
/// `box_size`, whose lower bound is not positive.
///
/// Requires `deg P_v < (n^2 - n)/2`. Stability is tested by rescanning with
/// the doubled box, and each axis ray is followed up to `4 box_size` to find
/// its crossover.
pub fn positivity_scan(
    cfg: &GlobalConfig,
    err: &ErrorTerm,
    places: &[u64],
    box_size: u64,
) -> Result<PositivityScan> {
    check_degrees(cfg.n, err)?;
    if places.len() > 16 {
        return Err(Error::InvalidParameter("at most 16 finite places"));
    }
    let small = exceptional_set(cfg, err, places, box_size)?;
    let large = exceptional_set(cfg, err, places, 2 * box_size)?;
    let n = cfg.n as usize;
    let ninf = err.p_v.len();
    let mut crossovers = Vec::new();
    let limit = 4 * box_size.max(1);
    for support in subsets(places.len()) {
        for place in 0..ninf {
            let values: Vec<BigRational> = (0..=limit)
                .map(|s| {
                    let arch = (0..ninf)
                        .map(|v| {
                            let mut a = vec![0i64; n];
                            if v == place {
                                a[0] = s as i64;
                            }
                            Weight(a)
                        })
                        .collect();
                    lower_bound(cfg, &descriptor(places, cfg.n, &support, arch), err)
                })
                .collect::<Result<_>>()?;
            let mut s0 = None;
            for s in (0..values.len()).rev() {
                let ok = values[s].is_positive()
                    && (s + 1 == values.len() || values[s] < values[s + 1]);
                if !ok {
                    break;
                }
                s0 = Some(s as u64);
            }
            crossovers.push(RayCrossover {
                support: support.clone(),
                place,
                s0,
            });
        }
    }
    Ok(PositivityScan {
        box_size,
        stable: small == large,
        exceptional: small.into_iter().collect(),
        crossovers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    fn cfg(mu: u64, masses: &[u64]) -> GlobalConfig {
        GlobalConfig {
            n: 2,
            mu_e: mu,
            masses: masses.to_vec(),
        }
    }

    #[test]
    fn c1_values() {
        assert_eq!(c1(&cfg(2, &[2])).unwrap(), q(1, 1));
        assert_eq!(c1(&cfg(2, &[2, 4])).unwrap(), q(3, 2));
        assert_eq!(c1(&cfg(2, &[])), Err(Error::EmptyMasses));
        assert_eq!(
            c1(&cfg(2, &[3])),
            Err(Error::MassNotDivisible { mass: 3, mu: 2 })
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(min_cuspidal_dim(3, 2), 2);
        assert_eq!(min_cuspidal_dim(2, 3), 3);
        let d = TypeDescriptor {
            finite: vec![(3, 2)],
            arch: vec![Weight(vec![1, 0])],
        };
        assert_eq!(type_dimension(&d).unwrap(), BigInt::from(4));
        let empty = TypeDescriptor {
            finite: vec![],
            arch: vec![Weight(vec![0, 0])],
        };
        assert_eq!(type_dimension(&empty).unwrap(), BigInt::one());
        let bad = TypeDescriptor {
            finite: vec![(5, 3)],
            arch: vec![],
        };
        assert!(matches!(bad.validate(2), Err(Error::LocalDimensionTooSmall { .. })));
    }

    #[test]
    fn lower_bound_arithmetic() {
        let c = cfg(2, &[2]);
        let d = TypeDescriptor {
            finite: vec![(3, 2)],
            arch: vec![Weight(vec![1, 0])],
        };
        let one = MPoly::constant(2, Rational::one());
        let err = ErrorTerm {
            c2: q(1, 1),
            p_v: vec![one.clone()],
        };
        assert_eq!(lower_bound(&c, &d, &err).unwrap(), q(2, 1));
        let zero = ErrorTerm {
            c2: q(0, 1),
            p_v: vec![one],
        };
        assert_eq!(lower_bound(&c, &d, &zero).unwrap(), q(4, 1));
    }

    #[test]
    fn scan_with_constant_error() {
        // n = 2, C_1 = 1, C_2 = 3: (a, 0) fails iff a + 1 <= 3 * 2^|S| / mindim
        let c = cfg(2, &[2]);
        let err = ErrorTerm {
            c2: q(3, 1),
            p_v: vec![MPoly::constant(2, Rational::one())],
        };
        let scan = positivity_scan(&c, &err, &[3], 10).unwrap();
        assert!(scan.stable);
        let gaps: Vec<(usize, i64)> = scan
            .exceptional
            .iter()
            .map(|d| (d.finite.len(), d.arch[0].gap()))
            .collect();
        assert_eq!(gaps, vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]);
        assert!(scan.crossovers.iter().all(|r| r.s0 == Some(3)));
        let none = ErrorTerm {
            c2: q(0, 1),
            p_v: vec![MPoly::constant(2, Rational::one())],
        };
        assert!(positivity_scan(&c, &none, &[3], 10).unwrap().exceptional.is_empty());
    }

    #[test]
    fn degree_check() {
        let c = cfg(2, &[2]);
        let err = ErrorTerm {
            c2: q(1, 1),
            p_v: vec![MPoly::var(2, 0)],
        };
        assert_eq!(
            positivity_scan(&c, &err, &[], 4).unwrap_err(),
            Error::DegreeTooHigh { degree: 1, weyl: 1 }
        );
    }
}
