//! Cuspidal characters of `GL_n(F_q)` for prime `n` (Green's formula) and
//! a conjugacy-class oracle to check them against.
//!
//! Classes are found by enumerating the group and grouping matrices by a
//! complete similarity invariant: the characteristic polynomial together
//! with the ranks of `f(g)^j` for every irreducible factor `f` and every
//! `j` up to its multiplicity.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{CycInt, CycRational};
use crate::field::Gf;
use crate::matrix::{self, Mat};
use crate::poly;
use crate::towerfield::{char_value, is_regular, regular_orbits, CharacterIndex, TowerField};
use crate::util::cuspidal_degree;
use crate::{Error, Result};

/// One conjugacy class of `GL_n(F_q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClassData {
    /// First class member in enumeration order.
    pub rep: Mat<u32>,
    /// Monic, low degree first.
    pub charpoly: Vec<u32>,
    /// Irreducible factors with multiplicities, sorted by (degree, code).
    pub factors: Vec<(Vec<u32>, u32)>,
    /// `rank(f(g)^j)` for `j = 1..=mult`, per factor.
    pub ranks: Vec<Vec<usize>>,
    /// Degree of `f` when the characteristic polynomial is a power of one
    /// irreducible `f`.
    pub d: Option<u32>,
    /// Number of Jordan blocks in that case: `(n - rank f(g)) / d`.
    pub r: Option<u32>,
    pub size: u64,
}

impl ConjClassData {
    pub fn is_central(&self) -> bool {
        self.d == Some(1) && self.r == Some(self.rep.n() as u32)
    }
}

/// A cuspidal character `tau_k` of `GL_n(F_q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalCharacter {
    pub k: CharacterIndex,
    pub tower: TowerField,
}

impl CuspidalCharacter {
    pub fn new(k: CharacterIndex, tower: &TowerField) -> Result<Self> {
        if !is_regular(k, tower) {
            return Err(Error::NotRegular(k.0));
        }
        Ok(CuspidalCharacter {
            k,
            tower: tower.clone(),
        })
    }
}

/// Similarity invariants of `g`.
fn invariants(f: &Gf, g: &Mat<u32>) -> (Vec<u32>, Vec<(Vec<u32>, u32)>, Vec<Vec<usize>>) {
    let cp = matrix::charpoly(f, g);
    let factors = poly::factor(f, &cp);
    let ranks = factors
        .iter()
        .map(|(p, mult)| {
            let fg = matrix::eval_poly(f, p, g);
            let mut power = fg.clone();
            let mut out = vec![matrix::rank(f, &power)];
            for _ in 1..*mult {
                power = matrix::mul(f, &power, &fg);
                out.push(matrix::rank(f, &power));
            }
            out
        })
        .collect();
    (cp, factors, ranks)
}

/// All matrices of `GL_n(F_q)` in index order (entry-major digits).
pub fn gl_fq(f: &Gf, n: usize) -> impl Iterator<Item = Mat<u32>> + '_ {
    let q = f.order() as u64;
    let total = q.pow((n * n) as u32);
    (0..total)
        .map(move |mut idx| {
            Mat::from_fn(n, |_, _| {
                let c = (idx % q) as u32;
                idx /= q;
                c
            })
        })
        .filter(move |m| matrix::det(f, m) != 0)
}

/// `|GL_n(F_q)|`.
pub fn gl_order(q: u64, n: u32) -> u128 {
    let qn = (q as u128).pow(n);
    (0..n).map(|i| qn - (q as u128).pow(i)).product()
}

/// Complete list of conjugacy classes of `GL_n(F_q)`, in order of first
/// appearance.
pub fn conj_classes(q: u64, n: u32, budget: u64) -> Result<Vec<ConjClassData>> {
    let f = Gf::new(q)?;
    let order = gl_order(q, n);
    let cost = (q as u128).pow(n * n);
    if cost > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: cost.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    let n_us = n as usize;
    let mut index: BTreeMap<(Vec<u32>, Vec<Vec<usize>>), usize> = BTreeMap::new();
    let mut classes: Vec<ConjClassData> = Vec::new();
    for g in gl_fq(&f, n_us) {
        let (cp, factors, ranks) = invariants(&f, &g);
        let key = (cp.clone(), ranks.clone());
        if let Some(&pos) = index.get(&key) {
            classes[pos].size += 1;
            continue;
        }
        let (d, r) = if factors.len() == 1 {
            let d = (factors[0].0.len() - 1) as u32;
            (Some(d), Some((n_us - ranks[0][0]) as u32 / d))
        } else {
            (None, None)
        };
        index.insert(key, classes.len());
        classes.push(ConjClassData {
            rep: g,
            charpoly: cp,
            factors,
            ranks,
            d,
            r,
            size: 1,
        });
    }
    debug_assert_eq!(classes.iter().map(|c| c.size as u128).sum::<u128>(), order);
    Ok(classes)
}

/// Green's formula for `Tr tau_k(g)`:
/// `(-1)^{n-1} prod_{i=1}^{r-1} (1 - q^i) sum_gamma theta^k(gamma)` when the
/// characteristic polynomial of `g` is a power of one irreducible `f` (the
/// sum over the roots of `f` in `F_{q^n}`), and 0 otherwise.
pub fn green_value(chi: &CuspidalCharacter, c: &ConjClassData) -> Result<CycInt> {
    let tower = &chi.tower;
    let cyclo = tower.cyclotomic();
    let (Some(_), Some(r)) = (c.d, c.r) else {
        return Ok(CycInt::zero(cyclo));
    };
    let ext = tower.ext();
    let f = &c.factors[0].0;
    let mut sum = CycInt::zero(cyclo);
    for gamma in ext.units() {
        if poly::eval(&**ext, f, &gamma) == 0 {
            sum = &sum + &char_value(chi.k, gamma, tower)?;
        }
    }
    let q = tower.q() as i64;
    let mut coeff: i64 = if tower.n() % 2 == 1 { 1 } else { -1 };
    for i in 1..r {
        coeff = coeff
            .checked_mul(1 - q.checked_pow(i).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(sum.scale(coeff))
}

/// A class function given by its values on a class list.
pub type ClassFunction = Vec<CycInt>;

/// `<chi1, chi2> = (1/|G|) sum_c |c| chi1(c) conj(chi2(c))`, exact.
pub fn inner_product(
    chi1: &[CycInt],
    chi2: &[CycInt],
    classes: &[ConjClassData],
) -> CycRational {
    let cyclo = chi1[0].field().clone();
    let mut total = CycInt::zero(&cyclo);
    for ((a, b), c) in chi1.iter().zip(chi2).zip(classes) {
        total = &total + &(a * &b.conj()).scale(c.size as i64);
    }
    let order: u64 = classes.iter().map(|c| c.size).sum();
    CycRational::new(total, order as i64)
}

/// Values of `tau_k` on every class.
pub fn class_function(chi: &CuspidalCharacter, classes: &[ConjClassData]) -> Result<ClassFunction> {
    classes.iter().map(|c| green_value(chi, c)).collect()
}

/// The trivial character on a class list.
pub fn trivial_character(tower: &TowerField, classes: &[ConjClassData]) -> ClassFunction {
    classes
        .iter()
        .map(|_| CycInt::one(tower.cyclotomic()))
        .collect()
}

/// The cuspidal character table: classes, orbit representatives, and
/// `values[class][orbit]`.
#[derive(Clone, Debug)]
pub struct CuspidalTable {
    pub tower: TowerField,
    pub classes: Vec<ConjClassData>,
    pub orbits: Vec<CharacterIndex>,
    pub values: Vec<Vec<CycInt>>,
}

pub fn cuspidal_table(tower: &TowerField, budget: u64) -> Result<CuspidalTable> {
    let classes = conj_classes(tower.q(), tower.n(), budget)?;
    let orbits = regular_orbits(tower);
    let chars: Vec<ClassFunction> = orbits
        .iter()
        .map(|&k| class_function(&CuspidalCharacter::new(k, tower)?, &classes))
        .collect::<Result<_>>()?;
    let values = (0..classes.len())
        .map(|c| chars.iter().map(|chi| chi[c].clone()).collect())
        .collect();
    Ok(CuspidalTable {
        tower: tower.clone(),
        classes,
        orbits,
        values,
    })
}

impl CuspidalTable {
    /// Class function of the `idx`-th orbit.
    pub fn column(&self, idx: usize) -> ClassFunction {
        self.values.iter().map(|row| row[idx].clone()).collect()
    }
}

/// Depth-zero trace bound for a noncentral class: `n` if the characteristic
/// polynomial is irreducible, 0 if it is not a power of one irreducible,
/// and the cuspidal degree `(q-1)...(q^{n-1}-1)` otherwise.
pub fn depth_zero_bound(c: &ConjClassData, q: u64, n: u32) -> Result<u128> {
    if c.is_central() {
        return Err(Error::Central);
    }
    Ok(match c.d {
        Some(d) if d == n => n as u128,
        Some(_) => cuspidal_degree(q, n),
        None => 0,
    })
}
