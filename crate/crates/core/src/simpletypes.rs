//! Positive-depth simple types at finite level.
//!
//! A [`TypeDatum`] fixes the standard minimal element: `beta = t^{-m} C` with
//! `C` the companion matrix of the defining polynomial of `F_{q^n}`
//! (unramified), or `beta = Pi^{-m}` with `Pi = e_{0,1} + ... + e_{n-2,n-1} +
//! t e_{n-1,0}` (ramified, `Pi^n = t`). Group quotients are taken modulo
//! `t^{m+1}`, where `H^1`, `J^1`, `J` and `psi_beta` are all visible.
//!
//! The additive character is `psi(sum a_i t^i) = psi_0(a_0)` with
//! `psi_0(a) = zeta_p^{Tr_{F_q/F_p}(a)}`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{CycInt, CyclotomicField};
use crate::field::Gf;
use crate::localring::{make_ring, RingElem, RingKind, TruncRing};
use crate::matrix::{self, Mat, OMatrix};
use crate::poly::{self, CommRing};
use crate::projcensus::{census_formula, scalar_part, Model};
use crate::towerfield::make_tower;
use crate::util::{checked_pow, gcd, iwahori_index};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    Unramified,
    Ramified,
}

impl Case {
    pub fn model(self) -> Model {
        match self {
            Case::Unramified => Model::Unramified,
            Case::Ramified => Model::Ramified,
        }
    }
}

/// `t^{-shift} mat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    pub shift: usize,
    pub mat: OMatrix,
}

#[derive(Clone, Debug)]
pub struct TypeDatum {
    pub case: Case,
    pub q: u64,
    pub n: u32,
    pub m: usize,
    /// `floor((m+1)/2)`.
    pub k: usize,
    /// 1 for odd `m`, `q^{(n^2-n)/2}` for even `m`.
    pub lambda_dim: u128,
    pub beta: LaurentMatrix,
    /// Generator of `O_E` over `O_F`: `C` or `Pi`.
    pub e_generator: OMatrix,
    /// Level `m + 1` of `O_F/t^L` used for all group quotients.
    pub working_level: usize,
    ring: TruncRing,
    fq: Arc<Gf>,
    psi_field: Arc<CyclotomicField>,
}

fn lambda_dim(q: u64, n: u32, m: usize) -> Result<u128> {
    if m % 2 == 1 {
        Ok(1)
    } else {
        checked_pow(q as u128, (n * n - n) / 2)
    }
}

/// Minimal element of an unramified extension: `beta = t^{-m} C`.
pub fn make_minimal_unram(q: u64, n: u32, m: usize) -> Result<TypeDatum> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive"));
    }
    let tower = make_tower(q, n)?;
    let level = m + 1;
    let ring = make_ring(RingKind::Base, q, 1, level)?;
    let fq = tower.base().clone();
    let comp = matrix::companion(&*fq, tower.modulus());
    debug_assert!(poly::is_irreducible(&fq, &matrix::charpoly(&*fq, &comp)));
    let c = OMatrix::from_residues(&ring, &comp);
    finish(Case::Unramified, q, n, m, ring, fq, LaurentMatrix { shift: m, mat: c.clone() }, c)
}

/// `Pi` with `Pi^n = t`.
pub fn ramified_uniformizer(ring: &TruncRing, n: usize) -> OMatrix {
    let t = ring.uniformizer();
    let mat = Mat::from_fn(n, |i, j| {
        if j == i + 1 {
            ring.one()
        } else if i == n - 1 && j == 0 {
            t.clone()
        } else {
            ring.zero()
        }
    });
    OMatrix::new(ring.clone(), mat)
}

/// Minimal element of a totally ramified extension: `beta = Pi^{-m}`.
pub fn make_minimal_ram(q: u64, n: u32, m: usize) -> Result<TypeDatum> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive"));
    }
    if !crate::util::is_prime(n as u64) {
        return Err(Error::NotPrime(n as u64));
    }
    if gcd(m as u64, n as u64) != 1 {
        return Err(Error::RamifiedGcd { m: m as u32, n });
    }
    let level = m + 1;
    let ring = make_ring(RingKind::Base, q, 1, level)?;
    let fq = ring.residue_field().clone();
    let nu = n as usize;
    let pi = ramified_uniformizer(&ring, nu);
    // Pi^{-m} = t^{-a} Pi^{na-m}
    let a = m.div_ceil(nu);
    let b = nu * a - m;
    let pb = OMatrix::new(ring.clone(), matrix::pow(&ring, pi.mat(), b as u64));
    finish(Case::Ramified, q, n, m, ring, fq, LaurentMatrix { shift: a, mat: pb }, pi)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    case: Case,
    q: u64,
    n: u32,
    m: usize,
    ring: TruncRing,
    fq: Arc<Gf>,
    beta: LaurentMatrix,
    e_generator: OMatrix,
) -> Result<TypeDatum> {
    let p = fq.characteristic();
    Ok(TypeDatum {
        case,
        q,
        n,
        m,
        k: (m + 1) / 2,
        lambda_dim: lambda_dim(q, n, m)?,
        beta,
        e_generator,
        working_level: m + 1,
        ring,
        fq,
        psi_field: CyclotomicField::new(p),
    })
}

impl TypeDatum {
    /// `O_F/t^{m+1}`.
    pub fn ring(&self) -> &TruncRing {
        &self.ring
    }

    pub fn residue_field(&self) -> &Arc<Gf> {
        &self.fq
    }

    /// `Z[zeta_p]`, where `psi` takes its values.
    pub fn psi_field(&self) -> &Arc<CyclotomicField> {
        &self.psi_field
    }

    /// Exponent `c` with `beta in P^c \ P^{c+1}`; equals `-m`.
    pub fn beta_level(&self) -> i64 {
        let e = match self.case {
            Case::Unramified => 1,
            Case::Ramified => self.n as i64,
        };
        let lvl = radical_level(self.case, &self.beta.mat).expect("beta is nonzero") as i64;
        lvl - e * self.beta.shift as i64
    }

    /// `beta^n` as a Laurent matrix.
    pub fn beta_power(&self, e: u64) -> LaurentMatrix {
        let mat = matrix::pow(&self.ring, self.beta.mat.mat(), e);
        LaurentMatrix {
            shift: self.beta.shift * e as usize,
            mat: OMatrix::new(self.ring.clone(), mat),
        }
    }

    /// `ceil((m+1)/2)`: `psi_beta` is a character of `1 + P^{this}`.
    pub fn psi_level(&self) -> usize {
        (self.m + 2) / 2
    }
}

/// Largest `j` with `x` in `P^j`, where `P` is the radical of `M_n(O_F)`
/// (unramified) or of the Iwahori order (ramified); `None` for zero.
pub fn radical_level(case: Case, x: &OMatrix) -> Option<usize> {
    let ring = x.ring();
    let n = x.n();
    let mut best: Option<usize> = None;
    for i in 0..n {
        for j in 0..n {
            if let Some(v) = ring.valuation(x.entry(i, j)) {
                let w = match case {
                    Case::Unramified => v,
                    Case::Ramified => n * v + j - i,
                };
                best = Some(best.map_or(w, |b: usize| b.min(w)));
            }
        }
    }
    best
}

/// `Tr_{F_q/F_p}(a)` as an element of `0..p`.
pub fn absolute_trace(fq: &Gf, a: u32) -> u32 {
    let mut x = a;
    let mut s = 0;
    for _ in 0..fq.degree_over_base() {
        s = fq.add(s, x);
        x = fq.frobenius(x);
    }
    s
}

/// `psi_0(a) = zeta_p^{Tr(a)}`.
pub fn psi0(d: &TypeDatum, a: u32) -> CycInt {
    CycInt::root_power(&d.psi_field, absolute_trace(&d.fq, a) as u64)
}

fn minus_one(ring: &TruncRing, z: &OMatrix) -> OMatrix {
    OMatrix::new(
        ring.clone(),
        matrix::sub(ring, z.mat(), &matrix::identity(ring, z.n())),
    )
}

/// The `F_q` argument of `psi_beta(z)`: the `t^0` coefficient of
/// `Tr(beta (z - 1))`.
pub fn psi_beta_argument(d: &TypeDatum, z: &OMatrix) -> Result<u32> {
    if z.level() < d.working_level {
        return Err(Error::InsufficientPrecision {
            have: z.level(),
            need: d.working_level,
        });
    }
    let z = z.reduce(d.working_level)?;
    let zm1 = minus_one(&d.ring, &z);
    if radical_level(d.case, &zm1).is_some_and(|lvl| lvl < d.psi_level()) {
        return Err(Error::InvalidParameter(
            "psi_beta is defined on 1 + P^ceil((m+1)/2)",
        ));
    }
    let prod = matrix::mul(&d.ring, d.beta.mat.mat(), zm1.mat());
    let tr = matrix::trace(&d.ring, &prod);
    Ok(tr.digits()[d.beta.shift])
}

/// `psi_beta(z) = psi(Tr(beta (z - 1)))`.
pub fn psi_beta(d: &TypeDatum, z: &OMatrix) -> Result<CycInt> {
    Ok(psi0(d, psi_beta_argument(d, z)?))
}

/// Orders of the images of `H^1 ⊂ J^1 ⊂ J` modulo `1 + P^{m+1}` and a basis
/// of `W = J^1/H^1` (m even).
#[derive(Clone, Debug)]
pub struct GroupData {
    pub h1_order: u128,
    pub j1_order: u128,
    pub j_order: u128,
    /// `|J/J^1| = |k_E^x|`.
    pub j_over_j1: u128,
    pub w_dim: usize,
    /// Representatives `w` (so `1 + w` lies in `J^1`) of an `F_q`-basis of `W`.
    pub w_basis: Vec<OMatrix>,
}

impl GroupData {
    pub fn w_order(&self, q: u64) -> u128 {
        (q as u128).pow(self.w_dim as u32)
    }
}

pub fn group_data(d: &TypeDatum) -> Result<GroupData> {
    if d.m % 2 == 1 {
        return Err(Error::OddLevel);
    }
    let q = d.q as u128;
    let n = d.n;
    let m = d.m as u32;
    let k = d.k as u32;
    let pow = |e: u32| checked_pow(q, e);
    let (h1, j1, jj, units, w_dim) = match d.case {
        Case::Unramified => {
            // |1+P^j mod P^{m+1}| = q^{n^2(m+1-j)}, |1+p_E^j| = q^{n(m+1-j)}
            let n2 = n * n;
            let h1 = pow(n2 * (m - k) + n * k)?;
            let j1 = pow(n2 * (m - k + 1) + n * (k - 1))?;
            let units = pow(n)? - 1;
            (h1, j1, j1 * units, units, (n2 - n) as usize)
        }
        Case::Ramified => {
            // |U^j(A) mod U^{m+1}| = q^{n(m+1-j)}, |1+p_E^j| = q^{m+1-j}
            let h1 = pow(n * (m - k) + k)?;
            let j1 = pow(n * (m - k + 1) + k - 1)?;
            let units = q - 1;
            (h1, j1, j1 * units, units, (n - 1) as usize)
        }
    };
    Ok(GroupData {
        h1_order: h1,
        j1_order: j1,
        j_order: jj,
        j_over_j1: units,
        w_dim,
        w_basis: w_basis(d),
    })
}

/// Basis of `W = P^k/(p_E^k + P^{k+1})`, as elements of `P^k` at the
/// working level.
fn w_basis(d: &TypeDatum) -> Vec<OMatrix> {
    let n = d.n as usize;
    let ring = &d.ring;
    let f = &*d.fq;
    match d.case {
        Case::Unramified => {
            // complement of F_q[C] in M_n(F_q), greedy over e_ij
            let c = d.e_generator.residue();
            let mut rows: Vec<Vec<u32>> = Vec::new();
            let mut power = matrix::identity(f, n);
            for _ in 0..n {
                rows.push(power.data().to_vec());
                power = matrix::mul(f, &power, &c);
            }
            let tk = ring.uniformizer_pow(d.k);
            let mut out = Vec::new();
            for idx in 0..n * n {
                let mut unit = vec![0u32; n * n];
                unit[idx] = 1;
                rows.push(unit);
                if matrix::rank_rows(f, &rows) == rows.len() {
                    let mat = Mat::from_fn(n, |i, j| {
                        if i * n + j == idx {
                            tk.clone()
                        } else {
                            ring.zero()
                        }
                    });
                    out.push(OMatrix::new(ring.clone(), mat));
                } else {
                    rows.pop();
                }
            }
            out
        }
        Case::Ramified => {
            // P^k/P^{k+1} = Pi^k * (diagonal); p_E^k contributes Pi^k * I
            let pik = matrix::pow(ring, d.e_generator.mat(), d.k as u64);
            (0..n - 1)
                .map(|i| {
                    let e = Mat::from_fn(n, |r, s| {
                        if r == i && s == i {
                            ring.one()
                        } else {
                            ring.zero()
                        }
                    });
                    OMatrix::new(ring.clone(), matrix::mul(ring, &pik, &e))
                })
                .collect()
        }
    }
}

/// Which extension `theta` of `psi_beta` to use on commutators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extension {
    /// `theta = psi_beta` on the commutators (which lie in `1 + P^{k+1}`).
    Standard,
    /// `theta (chi o det)` with `chi(1 + a_1 t + ...) = psi_0(c a_1)`.
    DetTwist(u32),
}

/// Gram matrix of `h_theta` on `W`.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub basis: Vec<OMatrix>,
    /// `F_q`-valued form `b` with `h_theta(x, y) = psi_0(b(x, y))`.
    pub gram: Vec<Vec<u32>>,
    /// `h_theta` on basis pairs, as computed.
    pub values: Vec<Vec<CycInt>>,
    pub rank: usize,
}

impl PairingMatrix {
    pub fn is_alternating(&self, f: &Gf) -> bool {
        let d = self.gram.len();
        (0..d).all(|i| {
            self.gram[i][i] == 0 && (0..d).all(|j| self.gram[i][j] == f.neg(self.gram[j][i]))
        })
    }
}

/// `x y x^{-1} y^{-1}`.
pub fn commutator(x: &OMatrix, y: &OMatrix) -> Result<OMatrix> {
    Ok(x.mul(y).mul(&x.inverse()?).mul(&y.inverse()?))
}

fn theta_on_commutator(d: &TypeDatum, z: &OMatrix, ext: Extension) -> Result<CycInt> {
    let base = psi_beta(d, z)?;
    match ext {
        Extension::Standard => Ok(base),
        Extension::DetTwist(c) => {
            let det = z.det();
            if det.residue() != 1 {
                return Err(Error::InvalidParameter("commutator determinant is not 1 mod t"));
            }
            let a1 = det.digits().get(1).copied().unwrap_or(0);
            Ok(&base * &psi0(d, d.fq.mul(c, a1)))
        }
    }
}

/// Exponent `e` with `v = zeta_p^e`.
fn zeta_exponent(d: &TypeDatum, v: &CycInt) -> Result<u32> {
    let p = d.psi_field.order();
    (0..p)
        .find(|&e| *v == CycInt::root_power(&d.psi_field, e as u64))
        .ok_or(Error::InvalidParameter("pairing value is not a p-th root of unity"))
}

/// `h_theta` on `W` via exact group commutators at the working level.
///
/// For basis vectors `w_i, w_j` and `c` in an `F_p`-basis of `F_q`, the
/// values `theta[1 + c w_i, 1 + w_j] = zeta_p^{Tr(c b_ij)}` determine
/// `b_ij` in `F_q`, which is read off by search.
pub fn theta_pairing(d: &TypeDatum) -> Result<PairingMatrix> {
    theta_pairing_with(d, Extension::Standard)
}

pub fn theta_pairing_with(d: &TypeDatum, ext: Extension) -> Result<PairingMatrix> {
    let data = group_data(d)?;
    let ring = &d.ring;
    let f = &*d.fq;
    let n = d.n as usize;
    let basis = data.w_basis;
    let one = matrix::identity(ring, n);
    let lift = |w: &OMatrix, c: u32| {
        let cw = matrix::scale(ring, &ring.from_residue(c), w.mat());
        OMatrix::new(ring.clone(), matrix::add(ring, &one, &cw))
    };
    // codes p^i are the powers of the adjoined generator
    let prime_basis: Vec<u32> = (0..f.degree_over_base())
        .map(|i| f.characteristic().pow(i))
        .collect();
    let dim = basis.len();
    let mut gram = vec![vec![0u32; dim]; dim];
    let mut values = vec![vec![CycInt::zero(&d.psi_field); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let y = lift(&basis[j], 1);
            let mut exps = Vec::with_capacity(prime_basis.len());
            for &c in &prime_basis {
                let z = commutator(&lift(&basis[i], c), &y)?;
                let v = theta_on_commutator(d, &z, ext)?;
                exps.push(zeta_exponent(d, &v)?);
                if c == 1 {
                    values[i][j] = v;
                }
            }
            gram[i][j] = f
                .elements()
                .find(|&b| {
                    prime_basis
                        .iter()
                        .zip(&exps)
                        .all(|(&c, &e)| absolute_trace(f, f.mul(c, b)) == e)
                })
                .expect("trace form is nondegenerate");
        }
    }
    let rank = matrix::rank_rows(f, &gram);
    Ok(PairingMatrix {
        basis,
        gram,
        values,
        rank,
    })
}

/// Upper bound for `|Tr tau(g)|` over the types with datum `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceBound {
    /// Fixed points on `X_k` (ramified: maximum over flag conjugates).
    pub census: u128,
    /// Bound for `|Tr lambda|` at each fixed point.
    pub per_point: u128,
    /// 1, or `[K : Iwahori]` in the ramified case.
    pub cosets: u128,
    pub bound: u128,
    /// `n |k_E|^{l n} lambda_dim` (times the Iwahori index when ramified)
    /// when the residue of `g` is scalar.
    pub closed_form: Option<u128>,
    pub hensel_fallback: bool,
}

impl TraceBound {
    pub fn within_closed_form(&self) -> bool {
        self.closed_form.is_none_or(|c| self.bound <= c)
    }
}

/// Frobenius-formula bound: fixed points on `X_k` times the per-point bound
/// for `|Tr lambda|` (1 when `m` is odd or, unramified, when the residue of
/// `g` has irreducible characteristic polynomial; `lambda_dim` otherwise),
/// times `[K : Iwahori]` in the ramified case.
pub fn type_trace_bound(g: &OMatrix, d: &TypeDatum) -> Result<TraceBound> {
    if g.is_central() {
        return Err(Error::Central);
    }
    if g.q() != d.q || g.n() != d.n as usize {
        return Err(Error::Dimension("matrix does not match the type datum"));
    }
    let n = d.n as usize;
    let q = d.q as u128;
    let k = d.k;
    let f = &*d.fq;
    match d.case {
        Case::Unramified => {
            let report = census_formula(g, Model::Unramified, k)?;
            let irreducible = poly::is_irreducible(f, &matrix::charpoly(f, &g.residue()));
            let per_point = if d.m % 2 == 1 || irreducible { 1 } else { d.lambda_dim };
            let closed_form = if g.residue_is_scalar() {
                let l = scalar_part(g, Model::Unramified).ok_or(Error::Central)?.1 as u32;
                let kq = checked_pow(q, d.n * l * d.n)?;
                Some(n as u128 * kq * d.lambda_dim)
            } else {
                None
            };
            Ok(TraceBound {
                census: report.count,
                per_point,
                cosets: 1,
                bound: report.count * per_point,
                closed_form,
                hensel_fallback: report.flags.hensel_fallback,
            })
        }
        Case::Ramified => {
            let ring = g.ring();
            let mut best = 0u128;
            let mut fallback = false;
            let mut best_closed: Option<u128> = None;
            for x in crate::greenchar::gl_fq(f, n) {
                let xm = OMatrix::from_residues(ring, &x);
                let h = g.conjugate_by(&xm)?;
                if !h.is_iwahori() {
                    continue;
                }
                let report = census_formula(&h, Model::Ramified, k)?;
                best = best.max(report.count);
                fallback |= report.flags.hensel_fallback;
                if g.residue_is_scalar() {
                    let l = scalar_part(&h, Model::Ramified).ok_or(Error::Central)?.1 as u32;
                    let c = (n as u128) * checked_pow(q, l * d.n)?;
                    best_closed = Some(best_closed.map_or(c, |b| b.max(c)));
                }
            }
            let cosets = iwahori_index(d.q, d.n);
            Ok(TraceBound {
                census: best,
                per_point: d.lambda_dim,
                cosets,
                bound: best * d.lambda_dim * cosets,
                closed_form: best_closed.map(|c| c * d.lambda_dim * cosets),
                hensel_fallback: fallback,
            })
        }
    }
}

/// Brute-force orders of `H^1`, `J^1`, `J` mod `t^{m+1}` (unramified),
/// enumerating `GL_n(O_F/t^{m+1})`.
pub fn enumerate_group_orders(d: &TypeDatum, budget: u64) -> Result<(u128, u128, u128)> {
    if d.case != Case::Unramified {
        return Err(Error::InvalidParameter("enumeration is implemented for the unramified case"));
    }
    let n = d.n as usize;
    let ring = &d.ring;
    let total = ring.size().pow((n * n) as u32);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: total.min(u64::MAX as u128) as u64,
            budget,
        });
    }
    let c_powers: Vec<Mat<RingElem>> = (0..n)
        .map(|i| matrix::pow(ring, d.e_generator.mat(), i as u64))
        .collect();
    // x mod t^j lies in O_F[C]: read coefficients off the first column
    let in_oe = |x: &OMatrix, j: usize| {
        let r = ring.with_level(j);
        let cut = |e: &RingElem| r.reduce_to(e, j);
        let mut acc = matrix::zero(&r, n);
        for (i, cp) in c_powers.iter().enumerate() {
            let coeff = cut(x.entry(i, 0));
            acc = matrix::add(&r, &acc, &matrix::scale(&r, &coeff, &cp.map(cut)));
        }
        acc == x.mat().map(cut)
    };
    let unipotent = |x: &OMatrix| {
        let res = x.residue();
        matrix::is_scalar(&**ring.residue_field(), &res) && *res.get(0, 0) == 1
    };
    let (mut h1, mut j1, mut jj) = (0u128, 0u128, 0u128);
    for x in matrix::gl_elements(ring, n) {
        let in_j = in_oe(&x, d.k);
        if in_j {
            jj += 1;
            if unipotent(&x) {
                j1 += 1;
                if in_oe(&x, d.k + 1) {
                    h1 += 1;
                }
            }
        }
    }
    Ok((h1, j1, jj))
}

/// The residue-field size `|k_E|`.
pub fn residue_size(d: &TypeDatum) -> u128 {
    match d.case {
        Case::Unramified => (d.q as u128).pow(d.n),
        Case::Ramified => d.q as u128,
    }
}

/// `1 + x` for `x` with entries in `P^j`: every element of `1 + P^j` mod
/// `t^{m+1}` (for exhaustive checks on tiny grids).
pub fn principal_units(d: &TypeDatum, j: usize) -> Vec<OMatrix> {
    let n = d.n as usize;
    let ring = &d.ring;
    let mut out = Vec::new();
    let total = ring.size().pow((n * n) as u32);
    for idx in 0..total {
        let x = OMatrix::from_index(ring, n, idx);
        if radical_level(d.case, &x).is_none_or(|lvl| lvl >= j) {
            out.push(OMatrix::new(
                ring.clone(),
                matrix::add(ring, &matrix::identity(ring, n), x.mat()),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unramified_data() {
        let d = make_minimal_unram(2, 2, 1).unwrap();
        assert_eq!(d.lambda_dim, 1);
        assert_eq!(d.beta_level(), -1);
        assert_eq!(make_minimal_unram(2, 2, 2).unwrap().lambda_dim, 2);
        assert_eq!(make_minimal_unram(3, 2, 2).unwrap().lambda_dim, 3);
        assert_eq!(make_minimal_unram(3, 2, 4).unwrap().beta_level(), -4);
    }

    #[test]
    fn ramified_data() {
        let d = make_minimal_ram(2, 2, 1).unwrap();
        let ring = d.ring().clone();
        let pi = ramified_uniformizer(&ring, 2);
        let t = matrix::scalar(&ring, 2, &ring.uniformizer());
        assert_eq!(matrix::pow(&ring, pi.mat(), 2), t);
        assert_eq!(d.beta_level(), -1);
        assert_eq!(
            make_minimal_ram(2, 2, 2).unwrap_err(),
            Error::RamifiedGcd { m: 2, n: 2 }
        );
        let d3 = make_minimal_ram(2, 3, 2).unwrap();
        assert_eq!(d3.beta_level(), -2);
        // beta^3 = t^{-2}
        let b3 = d3.beta_power(3);
        let reduced = b3.mat.mat().map(|x| x.clone());
        let expected_shift = b3.shift - 2;
        let tpow = matrix::scalar(d3.ring(), 3, &d3.ring().uniformizer_pow(expected_shift));
        assert_eq!(reduced, tpow);
    }

    #[test]
    fn group_orders() {
        let d = make_minimal_unram(2, 2, 2).unwrap();
        let g = group_data(&d).unwrap();
        assert_eq!(g.w_dim, 2);
        assert_eq!(g.w_order(2), 4);
        assert_eq!(g.j1_order / g.h1_order, 4);
        assert_eq!(group_data(&make_minimal_unram(3, 2, 2).unwrap()).unwrap().j_over_j1, 8);
        assert_eq!(group_data(&make_minimal_unram(2, 3, 2).unwrap()).unwrap().w_dim, 6);
        assert_eq!(group_data(&make_minimal_unram(2, 2, 1).unwrap()).unwrap_err(), Error::OddLevel);
    }

    #[test]
    fn enumerated_orders_match() {
        let d = make_minimal_unram(2, 2, 2).unwrap();
        let g = group_data(&d).unwrap();
        let (h1, j1, jj) = enumerate_group_orders(&d, 1 << 20).unwrap();
        assert_eq!((h1, j1, jj), (g.h1_order, g.j1_order, g.j_order));
        assert_eq!(jj / h1, g.w_order(2) * g.j_over_j1);
    }

    #[test]
    fn pairing_small() {
        let d = make_minimal_unram(2, 2, 2).unwrap();
        let p = theta_pairing(&d).unwrap();
        assert_eq!(p.rank, 2);
        assert!(p.is_alternating(d.residue_field()));
        for i in 0..2 {
            assert_eq!(p.values[i][i], CycInt::one(d.psi_field()));
        }
    }

    #[test]
    fn psi_beta_is_a_character() {
        for m in [2, 3] {
            let d = make_minimal_unram(2, 2, m).unwrap();
            let group = principal_units(&d, d.psi_level());
            for x in &group {
                for y in group.iter().step_by(3) {
                    let lhs = psi_beta(&d, &x.mul(y)).unwrap();
                    let rhs = &psi_beta(&d, x).unwrap() * &psi_beta(&d, y).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn iwahori_indices() {
        assert_eq!(iwahori_index(2, 2), 3);
        assert_eq!(iwahori_index(3, 2), 4);
        assert_eq!(iwahori_index(2, 3), 21);
    }
}
