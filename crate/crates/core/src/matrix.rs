//! Square matrices over a [`CommRing`], linear algebra over `F_q`, and
//! matrices over `O_F/t^K`.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Gf;
use crate::localring::{RingElem, RingKind, TruncRing};
use crate::poly::CommRing;
use crate::{Error, Result};

/// Square `n x n` matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat<E> {
    n: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_vec(n: usize, data: Vec<E>) -> Self {
        assert_eq!(data.len(), n * n, "matrix data has wrong length");
        Mat { n, data }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let data = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Mat { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.n + j] = v;
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn map<F>(&self, f: impl Fn(&E) -> F) -> Mat<F> {
        Mat {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.n, |i, j| self.get(j, i).clone())
    }
}

pub fn identity<R: CommRing>(ring: &R, n: usize) -> Mat<R::Elem> {
    scalar(ring, n, &ring.one())
}

pub fn scalar<R: CommRing>(ring: &R, n: usize, c: &R::Elem) -> Mat<R::Elem> {
    Mat::from_fn(n, |i, j| if i == j { c.clone() } else { ring.zero() })
}

pub fn zero<R: CommRing>(ring: &R, n: usize) -> Mat<R::Elem> {
    Mat::from_fn(n, |_, _| ring.zero())
}

pub fn add<R: CommRing>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    Mat::from_fn(a.n, |i, j| ring.add(a.get(i, j), b.get(i, j)))
}

pub fn sub<R: CommRing>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    Mat::from_fn(a.n, |i, j| ring.sub(a.get(i, j), b.get(i, j)))
}

pub fn scale<R: CommRing>(ring: &R, c: &R::Elem, a: &Mat<R::Elem>) -> Mat<R::Elem> {
    a.map(|x| ring.mul(c, x))
}

pub fn mul<R: CommRing>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    let n = a.n;
    Mat::from_fn(n, |i, j| {
        (0..n).fold(ring.zero(), |acc, l| {
            let x = a.get(i, l);
            if ring.is_zero(x) {
                acc
            } else {
                ring.add(&acc, &ring.mul(x, b.get(l, j)))
            }
        })
    })
}

pub fn mul_vec<R: CommRing>(ring: &R, a: &Mat<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    (0..a.n)
        .map(|i| {
            (0..a.n).fold(ring.zero(), |acc, j| {
                ring.add(&acc, &ring.mul(a.get(i, j), &v[j]))
            })
        })
        .collect()
}

pub fn pow<R: CommRing>(ring: &R, a: &Mat<R::Elem>, mut e: u64) -> Mat<R::Elem> {
    let mut base = a.clone();
    let mut acc = identity(ring, a.n);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(ring, &acc, &base);
        }
        base = mul(ring, &base, &base);
        e >>= 1;
    }
    acc
}

pub fn trace<R: CommRing>(ring: &R, a: &Mat<R::Elem>) -> R::Elem {
    (0..a.n).fold(ring.zero(), |acc, i| ring.add(&acc, a.get(i, i)))
}

pub fn is_scalar<R: CommRing>(ring: &R, a: &Mat<R::Elem>) -> bool {
    let d = a.get(0, 0);
    (0..a.n).all(|i| {
        (0..a.n).all(|j| {
            if i == j {
                a.get(i, j) == d
            } else {
                ring.is_zero(a.get(i, j))
            }
        })
    })
}

/// `p(a)` for a polynomial `p` (low degree first).
pub fn eval_poly<R: CommRing>(ring: &R, p: &[R::Elem], a: &Mat<R::Elem>) -> Mat<R::Elem> {
    p.iter().rev().fold(zero(ring, a.n), |acc, c| {
        add(ring, &mul(ring, &acc, a), &scalar(ring, a.n, c))
    })
}

/// Characteristic polynomial `det(x - a)`, monic, low degree first.
///
/// Berkowitz's algorithm: division free, so it works over any commutative
/// ring.
pub fn charpoly<R: CommRing>(ring: &R, a: &Mat<R::Elem>) -> Vec<R::Elem> {
    let n = a.n;
    // coefficients of the current leading principal minor, highest first
    let mut v = vec![ring.one()];
    for r in 0..n {
        // A_r = [[M, C], [R, a_rr]] with M the leading r x r block
        let col: Vec<R::Elem> = (0..r).map(|i| a.get(i, r).clone()).collect();
        let row: Vec<R::Elem> = (0..r).map(|j| a.get(r, j).clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a.get(r, r)));
        let mut w = col;
        for _ in 0..r {
            let rc = row
                .iter()
                .zip(&w)
                .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)));
            toeplitz.push(ring.neg(&rc));
            w = (0..r)
                .map(|i| {
                    (0..r).fold(ring.zero(), |acc, j| {
                        ring.add(&acc, &ring.mul(a.get(i, j), &w[j]))
                    })
                })
                .collect();
        }
        let next: Vec<R::Elem> = (0..r + 2)
            .map(|i| {
                (0..=r.min(i)).fold(ring.zero(), |acc, j| {
                    if i - j < toeplitz.len() && j < v.len() {
                        ring.add(&acc, &ring.mul(&toeplitz[i - j], &v[j]))
                    } else {
                        acc
                    }
                })
            })
            .collect();
        v = next;
    }
    v.reverse();
    v
}

pub fn det<R: CommRing>(ring: &R, a: &Mat<R::Elem>) -> R::Elem {
    let c0 = charpoly(ring, a).swap_remove(0);
    if a.n % 2 == 0 {
        c0
    } else {
        ring.neg(&c0)
    }
}

/// Companion matrix of a monic polynomial (ones on the subdiagonal, last
/// column `-c_0, ..., -c_{n-1}`).
pub fn companion<R: CommRing>(ring: &R, p: &[R::Elem]) -> Mat<R::Elem> {
    let n = p.len() - 1;
    Mat::from_fn(n, |i, j| {
        if j == n - 1 {
            ring.neg(&p[i])
        } else if i == j + 1 {
            ring.one()
        } else {
            ring.zero()
        }
    })
}

// Linear algebra over F_q on row lists (not necessarily square).

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(f: &Gf, rows: &mut [Vec<u32>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..ncols {
                    let s = f.mul(factor, rows[rank][j]);
                    rows[i][j] = f.sub(rows[i][j], s);
                }
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank_rows(f: &Gf, rows: &[Vec<u32>]) -> usize {
    let mut rows = rows.to_vec();
    row_reduce(f, &mut rows).len()
}

pub fn rank(f: &Gf, a: &Mat<u32>) -> usize {
    let rows: Vec<Vec<u32>> = (0..a.n).map(|i| a.row(i).to_vec()).collect();
    rank_rows(f, &rows)
}

/// Basis of the right kernel `{v : rows v = 0}`.
pub fn nullspace(f: &Gf, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut rows = rows.to_vec();
    let pivots = row_reduce(f, &mut rows);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(rows[r][free]);
        }
        out.push(v);
    }
    out
}

pub fn inverse_fq(f: &Gf, a: &Mat<u32>) -> Option<Mat<u32>> {
    let n = a.n;
    let mut rows: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let pivots = row_reduce(f, &mut rows);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Mat::from_fn(n, |i, j| rows[i][n + j]))
}

/// Matrix over `O_F/t^K`, entries stored as elements of the base
/// [`TruncRing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OMatrix {
    ring: TruncRing,
    mat: Mat<RingElem>,
}

impl OMatrix {
    pub fn new(ring: TruncRing, mat: Mat<RingElem>) -> Self {
        assert_eq!(ring.kind(), RingKind::Base, "OMatrix entries live in O_F/t^K");
        OMatrix { ring, mat }
    }

    /// From row-major entries, each a list of `t`-digits (codes in `F_q`).
    pub fn from_digits(ring: &TruncRing, n: usize, entries: &[Vec<u32>]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension("matrix needs n*n entries"));
        }
        let order = ring.residue_field().order();
        if entries.iter().flatten().any(|&c| c >= order) {
            return Err(Error::InvalidParameter("matrix digit outside F_q"));
        }
        let mat = Mat::from_fn(n, |i, j| ring.elem(&entries[i * n + j]));
        Ok(OMatrix::new(ring.clone(), mat))
    }

    /// Matrix whose entries are constants (residue codes).
    pub fn from_residues(ring: &TruncRing, m: &Mat<u32>) -> Self {
        OMatrix::new(ring.clone(), m.map(|&c| ring.from_residue(c)))
    }

    /// The `idx`-th matrix in digit order (entry-major, lowest digit first).
    pub fn from_index(ring: &TruncRing, n: usize, mut idx: u128) -> Self {
        let per_entry = ring.size();
        let mut data = Vec::with_capacity(n * n);
        for _ in 0..n * n {
            data.push(ring.element_at(idx % per_entry));
            idx /= per_entry;
        }
        OMatrix::new(ring.clone(), Mat::from_vec(n, data))
    }

    pub fn ring(&self) -> &TruncRing {
        &self.ring
    }

    pub fn mat(&self) -> &Mat<RingElem> {
        &self.mat
    }

    pub fn n(&self) -> usize {
        self.mat.n
    }

    pub fn level(&self) -> usize {
        self.ring.level()
    }

    pub fn q(&self) -> u64 {
        self.ring.q()
    }

    pub fn entry(&self, i: usize, j: usize) -> &RingElem {
        self.mat.get(i, j)
    }

    /// Reduction mod `t`.
    pub fn residue(&self) -> Mat<u32> {
        self.mat.map(|x| x.residue())
    }

    /// Reduction mod `t^level`.
    pub fn reduce(&self, level: usize) -> Result<OMatrix> {
        if level > self.level() {
            return Err(Error::InsufficientPrecision {
                have: self.level(),
                need: level,
            });
        }
        let ring = self.ring.with_level(level);
        Ok(OMatrix::new(
            ring.clone(),
            self.mat.map(|x| ring.reduce_to(x, level)),
        ))
    }

    pub fn is_invertible(&self) -> bool {
        det(&**self.ring.residue_field(), &self.residue()) != 0
    }

    pub fn is_central(&self) -> bool {
        is_scalar(&self.ring, &self.mat)
    }

    pub fn residue_is_scalar(&self) -> bool {
        is_scalar(&**self.ring.residue_field(), &self.residue())
    }

    /// Residue is upper triangular (the Iwahori condition).
    pub fn is_iwahori(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..i).all(|j| self.entry(i, j).residue() == 0))
    }

    pub fn charpoly(&self) -> Vec<RingElem> {
        charpoly(&self.ring, &self.mat)
    }

    pub fn det(&self) -> RingElem {
        det(&self.ring, &self.mat)
    }

    pub fn mul(&self, other: &OMatrix) -> OMatrix {
        OMatrix::new(self.ring.clone(), mul(&self.ring, &self.mat, &other.mat))
    }

    /// Inverse by Newton iteration from the residue inverse.
    pub fn inverse(&self) -> Result<OMatrix> {
        let f = self.ring.residue_field();
        let res_inv = inverse_fq(f, &self.residue()).ok_or(Error::NotInvertible)?;
        let ring = &self.ring;
        let two = scalar(ring, self.n(), &ring.from_int(2));
        let mut x = res_inv.map(|&c| ring.from_residue(c));
        let mut precision = 1;
        while precision < self.level() {
            let gx = mul(ring, &self.mat, &x);
            x = mul(ring, &x, &sub(ring, &two, &gx));
            precision *= 2;
        }
        Ok(OMatrix::new(ring.clone(), x))
    }

    /// `x^{-1} self x`.
    pub fn conjugate_by(&self, x: &OMatrix) -> Result<OMatrix> {
        Ok(x.inverse()?.mul(self).mul(x))
    }
}

/// Every matrix in `GL_n(O_F/t^k)`, in index order.
pub fn gl_elements(ring: &TruncRing, n: usize) -> impl Iterator<Item = OMatrix> + '_ {
    let total = ring.size().pow((n * n) as u32);
    (0..total)
        .map(move |idx| OMatrix::from_index(ring, n, idx))
        .filter(|g| g.is_invertible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localring::make_ring;

    fn leibniz(f: &Gf, a: &Mat<u32>) -> u32 {
        // permutations of 0..n by Heap's algorithm
        let n = a.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut sign_neg = false;
        let term = |perm: &[usize], neg: bool| {
            let p = (0..n).fold(1, |acc, i| f.mul(acc, *a.get(i, perm[i])));
            if neg {
                f.neg(p)
            } else {
                p
            }
        };
        let mut total = term(&perm, sign_neg);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                sign_neg = !sign_neg;
                total = f.add(total, term(&perm, sign_neg));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        total
    }

    #[test]
    fn berkowitz_det_matches_leibniz() {
        let f = Gf::new(5).unwrap();
        let mut seed = 7u64;
        for n in 1..=4 {
            for _ in 0..50 {
                let a = Mat::from_fn(n, |_, _| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((seed >> 33) % 5) as u32
                });
                assert_eq!(det(&f, &a), leibniz(&f, &a));
                // Cayley-Hamilton
                let p = charpoly(&f, &a);
                assert_eq!(p.len(), n + 1);
                assert_eq!(eval_poly(&f, &p, &a), zero(&f, n));
                let tr = f.neg(p[n - 1]);
                assert_eq!(tr, trace(&f, &a));
            }
        }
    }

    #[test]
    fn companion_has_its_charpoly() {
        let f = Gf::new(3).unwrap();
        let p = vec![2, 0, 1, 1];
        assert_eq!(charpoly(&f, &companion(&f, &p)), p);
    }

    #[test]
    fn nullspace_and_rank() {
        let f = Gf::new(2).unwrap();
        let rows = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(rank_rows(&f, &rows), 2);
        let ns = nullspace(&f, &rows, 3);
        assert_eq!(ns, vec![vec![1, 1, 1]]);
    }

    #[test]
    fn gl2_orders() {
        for (q, k, order) in [(2u64, 1usize, 6usize), (3, 1, 48), (2, 2, 96)] {
            let r = make_ring(RingKind::Base, q, 1, k).unwrap();
            assert_eq!(gl_elements(&r, 2).count(), order);
        }
    }

    #[test]
    fn local_inverse() {
        let r = make_ring(RingKind::Base, 3, 1, 3).unwrap();
        for g in gl_elements(&r, 2).step_by(97) {
            let h = g.inverse().unwrap();
            assert_eq!(g.mul(&h).mat, identity(&r, 2));
        }
    }
}
