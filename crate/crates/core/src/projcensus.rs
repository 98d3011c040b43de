//! The coset models `X_k` and fixed-point censuses.
//!
//! Unramified model: points `[u_0 : ... : u_{n-1}]` of `P^{n-1}(O_E/p_E^k)`
//! whose residues form an `F_q`-basis of `F_{q^n}`. Every coordinate is then
//! a unit, and the canonical representative has `u_0 = 1`.
//!
//! Ramified model: unit tuples `(u_0, ..., u_{n-1})` mod `p_E^k` standing for
//! `[u_0 : u_1 w : ... : u_{n-1} w^{n-1}]` (`w` the uniformizer of `E`), up to
//! a common unit; again `u_0 = 1` canonically. The Iwahori subgroup acts.
//!
//! Two counting routes are provided: brute force over `X_k` and closed
//! formulas (roots of characteristic polynomials after reducing scalar
//! perturbations).

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::field::Gf;
use crate::localring::{hensel_roots, make_ring, RingElem, RingKind, TruncRing};
use crate::matrix::{self, Mat, OMatrix};
use crate::poly::{self, CommRing};
use crate::util::checked_pow;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    Unramified,
    Ramified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Brute,
    Formula,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CensusFlags {
    /// Some residue root was multiple and was lifted by exhaustive search.
    pub hensel_fallback: bool,
    /// `g` acts trivially on `X_k`.
    pub every_point_fixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub model: Model,
    pub q: u64,
    pub n: u32,
    pub k: usize,
    pub count: u128,
    pub route: Route,
    pub flags: CensusFlags,
}

/// A point of `X_k`: the canonical coordinate tuple (`u_0 = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(pub Vec<RingElem>);

/// `X_k` for one model, with a bijection `0..size() -> X_k`.
#[derive(Clone, Debug)]
pub struct CosetModel {
    model: Model,
    q: u64,
    n: u32,
    k: usize,
    /// `O_E/p_E^k`.
    ring: TruncRing,
    /// Unramified: tuples `(u_1, ..., u_{n-1})` of residues completing `1`
    /// to an `F_q`-basis. Ramified: unused.
    residue_tuples: Vec<Vec<u32>>,
    size: u128,
}

impl CosetModel {
    pub fn new(model: Model, q: u64, n: u32, k: usize) -> Result<Self> {
        let kind = match model {
            Model::Unramified => RingKind::Unramified,
            Model::Ramified => RingKind::Ramified,
        };
        let ring = make_ring(kind, q, n, k)?;
        let residue_field = ring.residue_field().clone();
        let big_q = residue_field.order() as u128;
        let free = checked_pow(big_q, ((n as usize - 1) * (k - 1)) as u32)?;
        let (residue_tuples, size) = match model {
            Model::Unramified => {
                let tuples = basis_completions(&residue_field, q, n);
                let size = (tuples.len() as u128)
                    .checked_mul(free)
                    .ok_or(Error::Overflow)?;
                (tuples, size)
            }
            Model::Ramified => {
                let units = checked_pow(q as u128 - 1, n - 1)?;
                (Vec::new(), units.checked_mul(free).ok_or(Error::Overflow)?)
            }
        };
        Ok(CosetModel {
            model,
            q,
            n,
            k,
            ring,
            residue_tuples,
            size,
        })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ring(&self) -> &TruncRing {
        &self.ring
    }

    /// `|X_k|`.
    pub fn size(&self) -> u128 {
        self.size
    }

    /// Point-operations needed for a census: `|X_k| n^2`.
    pub fn census_cost(&self) -> u128 {
        self.size.saturating_mul((self.n * self.n) as u128)
    }

    /// Level of `O_F/t^K` a matrix must be known to for the action on `X_k`.
    pub fn required_matrix_level(&self) -> usize {
        match self.model {
            Model::Unramified => self.k,
            Model::Ramified => (self.k + self.n as usize - 1).div_ceil(self.n as usize),
        }
    }

    /// The `idx`-th point.
    pub fn point(&self, idx: u128) -> ProjPoint {
        let n = self.n as usize;
        let k = self.k;
        let big_q = self.ring.residue_field().order() as u128;
        let mut coords = Vec::with_capacity(n);
        coords.push(self.ring.one());
        let (mut rest, residues): (u128, Vec<u32>) = match self.model {
            Model::Unramified => {
                let count = self.residue_tuples.len() as u128;
                let r = &self.residue_tuples[(idx % count) as usize];
                (idx / count, r.clone())
            }
            Model::Ramified => {
                let units = self.q as u128 - 1;
                let mut rest = idx;
                let res = (1..n)
                    .map(|_| {
                        let c = (rest % units) as u32 + 1;
                        rest /= units;
                        c
                    })
                    .collect();
                (rest, res)
            }
        };
        for &r in &residues {
            let mut d = vec![0u32; k];
            d[0] = r;
            for digit in d.iter_mut().skip(1) {
                *digit = (rest % big_q) as u32;
                rest /= big_q;
            }
            coords.push(RingElem(d));
        }
        ProjPoint(coords)
    }

    /// Inverse of [`CosetModel::point`] on canonical tuples.
    pub fn index_of(&self, p: &ProjPoint) -> u128 {
        let n = self.n as usize;
        let big_q = self.ring.residue_field().order() as u128;
        let mut higher = 0u128;
        for c in p.0[1..].iter().rev() {
            for &d in c.0[1..].iter().rev() {
                higher = higher * big_q + d as u128;
            }
        }
        match self.model {
            Model::Unramified => {
                let res: Vec<u32> = p.0[1..].iter().map(|c| c.residue()).collect();
                let pos = self
                    .residue_tuples
                    .binary_search(&res)
                    .expect("residues of a point of X_k form a basis");
                higher * self.residue_tuples.len() as u128 + pos as u128
            }
            Model::Ramified => {
                let units = self.q as u128 - 1;
                let mut low = 0u128;
                for c in p.0[1..n].iter().rev() {
                    low = low * units + (c.residue() - 1) as u128;
                }
                higher * checked_pow(units, n as u32 - 1).unwrap_or(0) + low
            }
        }
    }

    pub fn points(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        (0..self.size).map(move |i| self.point(i))
    }

    /// Precomputes the data of `g` needed to act on `X_k`.
    pub fn prepare(&self, g: &OMatrix) -> Result<PreparedAction> {
        let n = self.n as usize;
        if g.n() != n {
            return Err(Error::Dimension("matrix size differs from n"));
        }
        if g.q() != self.q {
            return Err(Error::InvalidParameter("matrix is over a different F_q"));
        }
        let need = self.required_matrix_level();
        if g.level() < need {
            return Err(Error::InsufficientPrecision {
                have: g.level(),
                need,
            });
        }
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let work = match self.model {
            Model::Unramified => self.ring.clone(),
            Model::Ramified => {
                if !g.is_iwahori() {
                    return Err(Error::NotIwahori);
                }
                self.ring.with_level(self.k + n - 1)
            }
        };
        let entries = Mat::from_fn(n, |i, j| work.embed_base(g.entry(i, j).digits()));
        Ok(PreparedAction { work, entries })
    }

    /// `g . x`, canonical.
    pub fn act(&self, g: &PreparedAction, x: &ProjPoint) -> ProjPoint {
        let w = self.image_coords(g, x);
        let inv = self.ring.inv(&w[0]).expect("first coordinate is a unit");
        ProjPoint(w.iter().map(|c| self.ring.mul(c, &inv)).collect())
    }

    /// Unnormalized image coordinates `u'` at level `k`.
    fn image_coords(&self, g: &PreparedAction, x: &ProjPoint) -> Vec<RingElem> {
        let work = &g.work;
        match self.model {
            Model::Unramified => matrix::mul_vec(work, &g.entries, &x.0),
            Model::Ramified => {
                // column vector (u_j w^j) at level k + n - 1
                let v: Vec<RingElem> = x
                    .0
                    .iter()
                    .enumerate()
                    .map(|(j, u)| work.shift_up(&work.elem(u.digits()), j))
                    .collect();
                let s = matrix::mul_vec(work, &g.entries, &v);
                s.iter()
                    .enumerate()
                    .map(|(i, si)| {
                        let shifted = work.shift_down(si, i);
                        self.ring.elem(&shifted.digits()[..self.k])
                    })
                    .collect()
            }
        }
    }

    pub fn is_fixed(&self, g: &PreparedAction, x: &ProjPoint) -> bool {
        let w = self.image_coords(g, x);
        // x has u_0 = 1, so x is fixed iff w = w_0 x
        w.iter()
            .zip(&x.0)
            .skip(1)
            .all(|(wi, xi)| *wi == self.ring.mul(&w[0], xi))
    }

    /// Fixed points with index in `range` (for partitioned censuses).
    pub fn census_chunk(&self, g: &PreparedAction, range: Range<u128>) -> u128 {
        range
            .filter(|&i| self.is_fixed(g, &self.point(i)))
            .count() as u128
    }
}

/// A matrix embedded in the ring where the action is computed.
#[derive(Clone, Debug)]
pub struct PreparedAction {
    work: TruncRing,
    entries: Mat<RingElem>,
}

/// Tuples `(x_1, ..., x_{n-1})` with `{1, x_1, ..., x_{n-1}}` an `F_q`-basis
/// of `F_{q^n}`, sorted.
fn basis_completions(ext: &Gf, q: u64, n: u32) -> Vec<Vec<u32>> {
    let base = Gf::new(q).expect("q already validated");
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    let mut spans: Vec<Vec<Vec<u32>>> = vec![vec![ext.coords(1)]];
    for _ in 1..n {
        let mut next = Vec::new();
        let mut next_spans = Vec::new();
        for (tuple, rows) in out.iter().zip(&spans) {
            for x in ext.elements() {
                let mut r = rows.clone();
                r.push(ext.coords(x));
                if matrix::rank_rows(&base, &r) == r.len() {
                    let mut t = tuple.clone();
                    t.push(x);
                    next.push(t);
                    next_spans.push(r);
                }
            }
        }
        out = next;
        spans = next_spans;
    }
    out.sort();
    out
}

/// `|X_1|` in the unramified model: `prod_{i=1}^{n-1} (q^n - q^i)`.
pub fn unram_x1_size(q: u64, n: u32) -> u128 {
    let qn = (q as u128).pow(n);
    (1..n).map(|i| qn - (q as u128).pow(i)).product()
}

/// `|X_k|` in closed form.
pub fn model_size(model: Model, q: u64, n: u32, k: usize) -> u128 {
    let q = q as u128;
    let higher = (n as usize - 1) * (k - 1);
    match model {
        Model::Unramified => unram_x1_size(q as u64, n) * q.pow(n * higher as u32),
        Model::Ramified => (q - 1).pow(n - 1) * q.pow(higher as u32),
    }
}

fn check_budget(cost: u128, budget: u64) -> Result<()> {
    if cost > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: cost.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    Ok(())
}

/// All points of the unramified `X_k`.
pub fn enum_unram_xk(q: u64, n: u32, k: usize, budget: u64) -> Result<Vec<ProjPoint>> {
    let m = CosetModel::new(Model::Unramified, q, n, k)?;
    check_budget(m.size() * n as u128, budget)?;
    Ok(m.points().collect())
}

/// All points of the ramified `X_k`.
pub fn enum_ram_xk(q: u64, n: u32, k: usize, budget: u64) -> Result<Vec<ProjPoint>> {
    let m = CosetModel::new(Model::Ramified, q, n, k)?;
    check_budget(m.size() * n as u128, budget)?;
    Ok(m.points().collect())
}

/// Brute-force census: the number of points of `X_k` fixed by `g`.
pub fn census(g: &OMatrix, model: Model, k: usize, budget: u64) -> Result<CensusReport> {
    let n = g.n() as u32;
    let m = CosetModel::new(model, g.q(), n, k)?;
    check_budget(m.census_cost(), budget)?;
    let prepared = m.prepare(g)?;
    let count = m.census_chunk(&prepared, 0..m.size());
    Ok(CensusReport {
        model,
        q: g.q(),
        n,
        k,
        count,
        route: Route::Brute,
        flags: CensusFlags {
            hensel_fallback: false,
            every_point_fixed: count == m.size(),
        },
    })
}

/// Invariants of the ramified decomposition (`l = n t + r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamifiedInvariants {
    pub t: usize,
    pub r: usize,
    /// `floor((n - 1 + r + i - j) / n)`.
    pub eps: Mat<usize>,
    /// `j - i - r mod n`.
    pub e: Mat<usize>,
    /// Product of the `a_ij` with `e_ij = 0`, at the precision of `a`.
    pub eta: RingElem,
}

/// `g = alpha + h` with `h` in the `l`-th power of the radical and `l`
/// maximal; `a = h / w^l` (`w` the uniformizer of `F`, or entrywise shifted
/// by `w_E^{j-i-l}` in the ramified model).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarDecomp {
    pub model: Model,
    /// Unit of `O_F/t^K`.
    pub alpha: RingElem,
    pub l: usize,
    /// Over `O_F/t^{K-l}` (unramified) or `O_E/p_E^{nK-n+1-l}` (ramified).
    pub a: Mat<RingElem>,
    pub a_ring: TruncRing,
    pub ramified: Option<RamifiedInvariants>,
}

/// `(alpha, l)` for a matrix with scalar residue; `None` if `g` is central
/// at its level. In the ramified model `l` is measured in the radical
/// filtration of the Iwahori order.
pub fn scalar_part(g: &OMatrix, model: Model) -> Option<(RingElem, usize)> {
    let ring = g.ring();
    let n = g.n();
    let alpha = g.entry(0, 0).clone();
    let big_k = g.level();
    let mut l = usize::MAX;
    let mut central = true;
    for i in 0..n {
        for j in 0..n {
            let mut h = g.entry(i, j).clone();
            if i == j {
                h = ring.sub(&h, &alpha);
            }
            let v = ring.valuation(&h);
            if v.is_some() {
                central = false;
            }
            let v = v.unwrap_or(big_k);
            let weight = match model {
                Model::Unramified => v,
                Model::Ramified => n * v + j - i,
            };
            l = l.min(weight);
        }
    }
    if central {
        None
    } else {
        Some((alpha, l))
    }
}

/// Decomposes `g = alpha + h` with `l` maximal.
///
/// In the unramified model a residue that is not scalar passes through with
/// `l = 0`, `alpha = 0`, `a = g`. In the ramified model `g` must lie in the
/// Iwahori subgroup with a single residual eigenvalue.
pub fn scalar_reduction(g: &OMatrix, model: Model) -> Result<ScalarDecomp> {
    let n = g.n();
    let ring = g.ring();
    match model {
        Model::Unramified => {
            if !g.residue_is_scalar() {
                return Ok(ScalarDecomp {
                    model,
                    alpha: ring.zero(),
                    l: 0,
                    a: g.mat().clone(),
                    a_ring: ring.clone(),
                    ramified: None,
                });
            }
            let (alpha, l) = scalar_part(g, model).ok_or(Error::Central)?;
            let level = g.level() - l;
            let a_ring = ring.with_level(level);
            let a = Mat::from_fn(n, |i, j| {
                let mut h = g.entry(i, j).clone();
                if i == j {
                    h = ring.sub(&h, &alpha);
                }
                a_ring.elem(&ring.shift_down(&h, l).digits()[..level])
            });
            Ok(ScalarDecomp {
                model,
                alpha,
                l,
                a,
                a_ring,
                ramified: None,
            })
        }
        Model::Ramified => {
            if !g.is_iwahori() {
                return Err(Error::NotIwahori);
            }
            let res = g.residue();
            if (1..n).any(|i| res.get(i, i) != res.get(0, 0)) {
                return Err(Error::InvalidParameter(
                    "residue has more than one eigenvalue",
                ));
            }
            let (alpha, l) = scalar_part(g, model).ok_or(Error::Central)?;
            let precision = (n * g.level() + 1).saturating_sub(n + l);
            if precision == 0 {
                return Err(Error::InsufficientPrecision {
                    have: g.level(),
                    need: (l + n).div_ceil(n) + 1,
                });
            }
            let (a_ring, a) = ramified_a(g, &alpha, l, precision)?;
            let (t, r) = (l / n, l % n);
            let eps = Mat::from_fn(n, |i, j| (n - 1 + r + i - j) / n);
            let e = Mat::from_fn(n, |i, j| (n * eps.get(i, j) + j - r) - i);
            let eta = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| *e.get(i, j) == 0)
                .fold(a_ring.one(), |acc, (i, j)| a_ring.mul(&acc, a.get(i, j)));
            Ok(ScalarDecomp {
                model,
                alpha,
                l,
                a,
                a_ring,
                ramified: Some(RamifiedInvariants { t, r, eps, e, eta }),
            })
        }
    }
}

/// `a_ij = w_E^{j-i-l} h_ij` over `O_E/p_E^precision`.
fn ramified_a(
    g: &OMatrix,
    alpha: &RingElem,
    l: usize,
    precision: usize,
) -> Result<(TruncRing, Mat<RingElem>)> {
    let n = g.n();
    let ring = g.ring();
    let big = make_ring(RingKind::Ramified, g.q(), n as u32, n * g.level())?;
    let a_ring = big.with_level(precision);
    let a = Mat::from_fn(n, |i, j| {
        let mut h = g.entry(i, j).clone();
        if i == j {
            h = ring.sub(&h, alpha);
        }
        let he = big.embed_base(h.digits());
        let shifted = if j >= i + l {
            big.shift_up(&he, j - i - l)
        } else {
            big.shift_down(&he, l + i - j)
        };
        a_ring.elem(&shifted.digits()[..precision])
    });
    Ok((a_ring, a))
}

/// Census by the closed formulas, without enumerating `X_k`.
///
/// Unramified: a residue with irreducible characteristic polynomial gives
/// the number of unit roots of the characteristic polynomial in
/// `O_E/p_E^k`; any other non-scalar residue gives 0. A scalar residue is
/// reduced to `g = alpha + t^l a`: for `k <= l` every point is fixed,
/// otherwise the count is that of `a` at level `k - l` times the
/// `q^{n(n-1)l}` lifts of each point.
///
/// Ramified: residue diagonal not constant gives 0; otherwise for `k > l`
/// the count is the number of roots of the characteristic polynomial of
/// `a` in `O_E/p_E^{k-l}` times `q^{(n-1)l}` lifts, or 0 when `r = 0` or a
/// needed `a_ij` is not a unit.
pub fn census_formula(g: &OMatrix, model: Model, k: usize) -> Result<CensusReport> {
    let n = g.n() as u32;
    let m = CosetModel::new(model, g.q(), n, k)?;
    let need = m.required_matrix_level();
    if g.level() < need {
        return Err(Error::InsufficientPrecision {
            have: g.level(),
            need,
        });
    }
    if !g.is_invertible() {
        return Err(Error::NotInvertible);
    }
    let mut flags = CensusFlags::default();
    let count = match model {
        Model::Unramified => unram_formula(g, k, &mut flags)?,
        Model::Ramified => ram_formula(g, k, &mut flags)?,
    };
    Ok(CensusReport {
        model,
        q: g.q(),
        n,
        k,
        count,
        route: Route::Formula,
        flags,
    })
}

fn unram_formula(g: &OMatrix, k: usize, flags: &mut CensusFlags) -> Result<u128> {
    let n = g.n() as u32;
    let q = g.q();
    let fq = g.ring().residue_field().clone();
    if !g.residue_is_scalar() {
        let res_cp = matrix::charpoly(&*fq, &g.residue());
        if !poly::is_irreducible(&fq, &res_cp) {
            return Ok(0);
        }
        let cp = g.reduce(k)?.charpoly();
        let ring = make_ring(RingKind::Unramified, q, n, k)?;
        let embedded: Vec<RingElem> = cp.iter().map(|c| ring.embed_base(c.digits())).collect();
        let roots = hensel_roots(&embedded, &ring);
        flags.hensel_fallback |= roots.fallback;
        return Ok(roots.roots.len() as u128);
    }
    let Some((_, l)) = scalar_part(g, Model::Unramified) else {
        flags.every_point_fixed = true;
        return Ok(model_size(Model::Unramified, q, n, k));
    };
    if k <= l {
        flags.every_point_fixed = true;
        return Ok(model_size(Model::Unramified, q, n, k));
    }
    let d = scalar_reduction(g, Model::Unramified)?;
    let a = OMatrix::new(d.a_ring.clone(), d.a.clone());
    if !a.is_invertible() {
        return Ok(0);
    }
    let inner = unram_formula(&a.reduce(k - l)?, k - l, flags)?;
    let lifts = checked_pow(q as u128, n * (n - 1) * l as u32)?;
    inner.checked_mul(lifts).ok_or(Error::Overflow)
}

fn ram_formula(g: &OMatrix, k: usize, flags: &mut CensusFlags) -> Result<u128> {
    let n = g.n();
    let q = g.q();
    if !g.is_iwahori() {
        return Err(Error::NotIwahori);
    }
    let res = g.residue();
    if (1..n).any(|i| res.get(i, i) != res.get(0, 0)) {
        return Ok(0);
    }
    let every = |flags: &mut CensusFlags| {
        flags.every_point_fixed = true;
        model_size(Model::Ramified, q, n as u32, k)
    };
    let Some((_, l)) = scalar_part(g, Model::Ramified) else {
        return Ok(every(flags));
    };
    if k <= l {
        return Ok(every(flags));
    }
    let d = scalar_reduction(g, Model::Ramified)?;
    let inv = d.ramified.as_ref().expect("ramified invariants");
    let level = k - l;
    let a_ring = d.a_ring.with_level(level);
    let a = d.a.map(|x| a_ring.reduce_to(x, level));
    let needed_units = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| *inv.e.get(i, j) == 0);
    for (i, j) in needed_units {
        if !a_ring.is_unit(a.get(i, j)) {
            return Ok(0);
        }
    }
    if inv.r == 0 {
        let a_res = a.map(|x| x.residue());
        let f = a_ring.residue_field();
        if matrix::is_scalar(&**f, &a_res) {
            return Err(Error::NonMaximalDecomposition);
        }
        return Ok(0);
    }
    let cp = matrix::charpoly(&a_ring, &a);
    let roots = hensel_roots(&cp, &a_ring);
    flags.hensel_fallback |= roots.fallback;
    let lifts = checked_pow(q as u128, ((n - 1) * l) as u32)?;
    (roots.roots.len() as u128)
        .checked_mul(lifts)
        .ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn base(q: u64, k: usize) -> TruncRing {
        make_ring(RingKind::Base, q, 1, k).unwrap()
    }

    fn mat(q: u64, k: usize, n: usize, entries: &[&[u32]]) -> OMatrix {
        let e: Vec<Vec<u32>> = entries.iter().map(|d| d.to_vec()).collect();
        OMatrix::from_digits(&base(q, k), n, &e).unwrap()
    }

    #[test]
    fn model_sizes() {
        for (q, n, k, size) in [(2, 2, 1, 2), (3, 2, 1, 6), (2, 2, 2, 8)] {
            let pts = enum_unram_xk(q, n, k, DEFAULT_BUDGET).unwrap();
            assert_eq!(pts.len() as u128, size);
            assert_eq!(model_size(Model::Unramified, q, n, k), size);
        }
        for (q, n, k, size) in [(2, 2, 1, 1), (3, 2, 2, 6), (2, 3, 1, 1)] {
            let pts = enum_ram_xk(q, n, k, DEFAULT_BUDGET).unwrap();
            assert_eq!(pts.len() as u128, size);
            assert_eq!(model_size(Model::Ramified, q, n, k), size);
        }
    }

    #[test]
    fn index_roundtrip() {
        for model in [Model::Unramified, Model::Ramified] {
            let m = CosetModel::new(model, 3, 2, 2).unwrap();
            for i in 0..m.size() {
                assert_eq!(m.index_of(&m.point(i)), i);
            }
        }
    }

    #[test]
    fn companion_census() {
        // companion of x^2 + x + 1 over F_2
        for k in 1..=3 {
            let g = mat(2, k, 2, &[&[0], &[1], &[1], &[1]]);
            let brute = census(&g, Model::Unramified, k, DEFAULT_BUDGET).unwrap();
            assert_eq!(brute.count, 2);
            assert_eq!(census_formula(&g, Model::Unramified, k).unwrap().count, 2);
        }
    }

    #[test]
    fn scalars_fix_everything() {
        let g = mat(3, 2, 2, &[&[2, 1], &[], &[], &[2, 1]]);
        for model in [Model::Unramified, Model::Ramified] {
            let r = census(&g, model, 2, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.count, model_size(model, 3, 2, 2));
            assert!(r.flags.every_point_fixed);
        }
    }

    #[test]
    fn split_residue_has_no_fixed_points() {
        let g = mat(3, 2, 2, &[&[1], &[1], &[], &[2]]);
        for model in [Model::Unramified, Model::Ramified] {
            assert_eq!(census(&g, model, 2, DEFAULT_BUDGET).unwrap().count, 0);
            assert_eq!(census_formula(&g, model, 2).unwrap().count, 0);
        }
    }

    #[test]
    fn scalar_perturbation_gets_fiber_factor() {
        // g = 1 + t C with C the companion of x^2 + x + 1 over F_2
        let g = mat(2, 2, 2, &[&[1], &[0, 1], &[0, 1], &[1, 1]]);
        let d = scalar_reduction(&g, Model::Unramified).unwrap();
        assert_eq!(d.l, 1);
        let brute = census(&g, Model::Unramified, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(brute.count, 8);
        assert_eq!(census_formula(&g, Model::Unramified, 2).unwrap().count, 8);
        let at_one = census(&g, Model::Unramified, 1, DEFAULT_BUDGET).unwrap();
        assert!(at_one.flags.every_point_fixed);
    }

    #[test]
    fn central_has_no_decomposition() {
        let g = mat(2, 2, 2, &[&[1, 1], &[], &[], &[1, 1]]);
        assert_eq!(
            scalar_reduction(&g, Model::Unramified).unwrap_err(),
            Error::Central
        );
    }

    #[test]
    fn ramified_needs_iwahori() {
        let g = mat(2, 1, 2, &[&[0], &[1], &[1], &[1]]);
        assert_eq!(
            census(&g, Model::Ramified, 1, DEFAULT_BUDGET).unwrap_err(),
            Error::NotIwahori
        );
    }

    #[test]
    fn budget_is_enforced() {
        let g = mat(2, 3, 2, &[&[1], &[], &[], &[1]]);
        assert!(matches!(
            census(&g, Model::Unramified, 3, 10),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn action_composes() {
        let r = base(2, 2);
        let m = CosetModel::new(Model::Unramified, 2, 2, 2).unwrap();
        let gs: Vec<OMatrix> = matrix::gl_elements(&r, 2).step_by(5).collect();
        for g in &gs {
            for h in gs.iter().step_by(3) {
                let gh = g.mul(h);
                let (pg, ph, pgh) = (
                    m.prepare(g).unwrap(),
                    m.prepare(h).unwrap(),
                    m.prepare(&gh).unwrap(),
                );
                for x in m.points() {
                    assert_eq!(m.act(&pgh, &x), m.act(&pg, &m.act(&ph, &x)));
                }
            }
        }
    }
}
