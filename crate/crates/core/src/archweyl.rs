//! Weights and characters of the compact unitary group `U(n)`.
//!
//! Highest weights are integer vectors `(a_1, ..., a_n)`; the character of
//! the irreducible representation with dominant highest weight `lambda` at a
//! matrix with eigenvalues `x` is the Schur polynomial `s_lambda(x)`, shifted
//! by a power of the determinant when `a_n < 0`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::mpoly::{MPoly, Rational};
use crate::util::factorial;
use crate::{Error, Result};

/// Modulus tolerance for eigenvalues on the unit circle.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `a_1 - a_n`.
    pub fn gap(&self) -> i64 {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(b)) => a - b,
            _ => 0,
        }
    }

    /// `lambda + c (1, ..., 1)`.
    pub fn shift(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a + c).collect())
    }

    fn check_dominant(&self) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::Dimension("weight has no entries"));
        }
        if !self.is_dominant() {
            return Err(Error::NotDominant);
        }
        Ok(())
    }
}

/// Root data of `U(n)` with the trace form `B_0(X, Y) = Tr XY` on the
/// diagonal torus, under which the `e_i^*` are orthonormal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootData {
    pub n: usize,
}

impl RootData {
    pub fn new(n: usize) -> Self {
        RootData { n }
    }

    /// `e_i^* - e_j^*` for `i < j`.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let mut v = vec![0; self.n];
                v[i] = 1;
                v[j] = -1;
                out.push(Weight(v));
            }
        }
        out
    }

    /// Half the sum of the positive roots.
    pub fn delta(&self) -> Vec<Rational> {
        let mut sum = vec![0i64; self.n];
        for r in self.positive_roots() {
            for (s, a) in sum.iter_mut().zip(&r.0) {
                *s += a;
            }
        }
        sum.into_iter()
            .map(|s| Rational::new(s as i128, 2))
            .collect()
    }

    /// `((n-1)/2, (n-3)/2, ..., (1-n)/2)`.
    pub fn delta_closed_form(&self) -> Vec<Rational> {
        (0..self.n)
            .map(|i| Rational::new(self.n as i128 - 1 - 2 * i as i128, 2))
            .collect()
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> i64 {
        a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum()
    }
}

/// `prod_{i<j} (a_i - a_j + j - i) / prod_{k<n} k!`.
pub fn weyl_dim(lambda: &Weight) -> Result<u128> {
    lambda.check_dominant()?;
    let a = &lambda.0;
    let n = a.len();
    let mut num: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            let f = (a[i] - a[j]) as u128 + (j - i) as u128;
            num = num.checked_mul(f).ok_or(Error::Overflow)?;
        }
    }
    let den: u128 = (1..n as u32).map(factorial).product();
    Ok(num / den)
}

/// The dimension polynomial `prod_{i<j} (x_i - x_j + j - i) / prod k!` in
/// `n` variables; its total degree is `(n^2 - n)/2`.
pub fn weyl_polynomial(n: usize) -> MPoly {
    let mut p = MPoly::constant(n, Rational::one());
    for i in 0..n {
        for j in i + 1..n {
            let lin = MPoly::var(n, i)
                .sub(&MPoly::var(n, j))
                .add(&MPoly::constant(n, Rational::from_integer((j - i) as i128)));
            p = p.mul(&lin);
        }
    }
    let den: u128 = (1..n as u32).map(factorial).product();
    p.scale(Rational::new(1, den as i128))
}

/// `det(h_{mu_i - i + j})` expanded as a signed sum of products of complete
/// homogeneous symmetric polynomials, for a partition `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiTrudi {
    /// `(coefficient, sorted h-indices)`.
    pub terms: Vec<(i64, Vec<usize>)>,
    pub max_index: usize,
}

/// All permutations of `0..n` with signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // insert n-1 at position k: moves past (n-1-k) larger slots
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            let sign = if (n - 1 - k) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

impl JacobiTrudi {
    pub fn expand(mu: &[i64]) -> Result<JacobiTrudi> {
        if mu.iter().any(|&m| m < 0) || !mu.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDominant);
        }
        let n = mu.len();
        let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        'perm: for (sigma, sign) in permutations(n) {
            let mut idx = Vec::with_capacity(n);
            for (i, &s) in sigma.iter().enumerate() {
                let k = mu[i] - i as i64 + s as i64;
                if k < 0 {
                    continue 'perm;
                }
                if k > 0 {
                    idx.push(k as usize);
                }
            }
            idx.sort_unstable();
            *acc.entry(idx).or_insert(0) += sign;
        }
        let terms: Vec<(i64, Vec<usize>)> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(k, c)| (c, k))
            .collect();
        let max_index = terms
            .iter()
            .flat_map(|(_, k)| k.iter().copied())
            .max()
            .unwrap_or(0);
        Ok(JacobiTrudi { terms, max_index })
    }

    /// Evaluate with `h[k] = h_k(x)` (`h[0] = 1`).
    pub fn eval<T>(&self, h: &[T], from_int: impl Fn(i64) -> T) -> T
    where
        T: Clone + core::ops::Add<Output = T> + core::ops::Mul<Output = T>,
    {
        let mut total = from_int(0);
        for (c, idx) in &self.terms {
            let mut prod = from_int(*c);
            for &k in idx {
                prod = prod * h[k].clone();
            }
            total = total + prod;
        }
        total
    }
}

/// `h_0, ..., h_max` at `x`.
fn complete_homogeneous<T>(x: &[T], max: usize, zero: T, one: T) -> Vec<T>
where
    T: Clone + core::ops::Add<Output = T> + core::ops::Mul<Output = T>,
{
    let mut h = vec![zero; max + 1];
    h[0] = one;
    for xi in x {
        for k in 1..=max {
            h[k] = h[k].clone() + xi.clone() * h[k - 1].clone();
        }
    }
    h
}

fn check_unit(x: &[Complex64]) -> Result<()> {
    if x.iter().any(|z| (z.norm() - 1.0).abs() > UNIT_TOL) {
        return Err(Error::InvalidParameter("eigenvalues must have modulus 1"));
    }
    Ok(())
}

/// `Tr xi_lambda(g)` for `g` with eigenvalues `x`.
pub fn schur_trace(lambda: &Weight, x: &[Complex64]) -> Result<Complex64> {
    lambda.check_dominant()?;
    if x.len() != lambda.n() {
        return Err(Error::Dimension("eigenvalue count differs from weight length"));
    }
    check_unit(x)?;
    let shift = *lambda.0.last().unwrap();
    let mu: Vec<i64> = lambda.0.iter().map(|a| a - shift).collect();
    let jt = JacobiTrudi::expand(&mu)?;
    let h = complete_homogeneous(x, jt.max_index, Complex64::zero(), Complex64::one());
    let base = jt.eval(&h, |c| Complex64::new(c as f64, 0.0));
    let det: Complex64 = x.iter().product();
    Ok(base * det.powi(shift as i32))
}

/// `s_lambda(1, ..., 1)` computed exactly through Jacobi-Trudi.
pub fn schur_at_ones(lambda: &Weight) -> Result<i128> {
    lambda.check_dominant()?;
    let shift = *lambda.0.last().unwrap();
    let mu: Vec<i64> = lambda.0.iter().map(|a| a - shift).collect();
    let jt = JacobiTrudi::expand(&mu)?;
    let ones = vec![1i128; lambda.n()];
    let h = complete_homogeneous(&ones, jt.max_index, 0i128, 1i128);
    let mut total: i128 = 0;
    for (c, idx) in &jt.terms {
        let mut prod: i128 = 1;
        for &k in idx {
            prod = prod.checked_mul(h[k]).ok_or(Error::Overflow)?;
        }
        total = total
            .checked_add((*c as i128).checked_mul(prod).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// `n! / |prod_{i<j} (x_i - x_j)|`: bounds `|s_lambda(x)|` for every
/// dominant `lambda`, since the Weyl numerator is a sum of `n!` unit terms.
pub fn regular_bound(x: &[Complex64]) -> Result<f64> {
    check_unit(x)?;
    let mut v = 1.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let d = (x[i] - x[j]).norm();
            if d <= UNIT_TOL {
                return Err(Error::RepeatedEigenvalues);
            }
            v *= d;
        }
    }
    Ok(factorial(x.len() as u32) as f64 / v)
}

/// Dominant weights with `a_n = base` and `a_1 - a_n <= gap`, in
/// lexicographic order.
pub fn dominant_box(n: usize, gap: u64, base: i64) -> Vec<Weight> {
    fn rec(n: usize, upper: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>, base: i64) {
        if prefix.len() == n - 1 {
            let mut w = prefix.clone();
            w.push(base);
            out.push(Weight(w));
            return;
        }
        for a in base..=upper {
            prefix.push(a);
            rec(n, a, prefix, out, base);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, base + gap as i64, &mut Vec::new(), &mut out, base);
    out
}

/// One shell of a degree scan.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanPoint {
    pub gap: u64,
    /// `max |s_lambda(x)|` over `a_1 - a_n <= gap`.
    pub max_abs: f64,
    /// `max |s_lambda(x)| / dim` over `a_1 - a_n = gap`.
    pub max_ratio: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeScan {
    pub points: Vec<ScanPoint>,
    /// Least-squares slope of `log max_abs` against `log(gap + 1)`.
    pub exponent: f64,
    pub weyl_degree: u32,
    /// Overall `max |s_lambda(x)| / dim` in the box.
    pub max_ratio: f64,
    /// `exponent <= weyl_degree - margin`.
    pub pass: bool,
}

/// Required gap between the fitted exponent and the Weyl degree.
pub const DEGREE_MARGIN: f64 = 0.5;

/// Empirical growth of `|Tr xi_lambda(g)|` for a noncentral `g` with
/// eigenvalues `x`, over weights with `a_1 - a_n <= box_size`.
///
/// Characters are invariant in modulus under the determinant shift, so the
/// scan runs over `a_n = 0`.
pub fn cc_degree_scan(x: &[Complex64], box_size: u64) -> Result<DegreeScan> {
    check_unit(x)?;
    let n = x.len();
    if n == 0 || x.iter().all(|z| (z - x[0]).norm() <= UNIT_TOL) {
        return Err(Error::CentralSpectrum);
    }
    let weyl_degree = (n * n - n) as u32 / 2;
    let mut shell_abs = vec![0.0f64; box_size as usize + 1];
    let mut shell_ratio = vec![0.0f64; box_size as usize + 1];
    for lambda in dominant_box(n, box_size, 0) {
        let g = lambda.gap() as usize;
        let s = schur_trace(&lambda, x)?.norm();
        let d = weyl_dim(&lambda)? as f64;
        shell_abs[g] = shell_abs[g].max(s);
        shell_ratio[g] = shell_ratio[g].max(s / d);
    }
    let mut points = Vec::with_capacity(shell_abs.len());
    let mut running = 0.0f64;
    for (gap, (&a, &r)) in shell_abs.iter().zip(&shell_ratio).enumerate() {
        running = running.max(a);
        points.push(ScanPoint {
            gap: gap as u64,
            max_abs: running,
            max_ratio: r,
        });
    }
    let exponent = fit_exponent(&points);
    let max_ratio = points.iter().map(|p| p.max_ratio).fold(0.0, f64::max);
    Ok(DegreeScan {
        exponent,
        weyl_degree,
        max_ratio,
        pass: exponent <= weyl_degree as f64 - DEGREE_MARGIN,
        points,
    })
}

fn fit_exponent(points: &[ScanPoint]) -> f64 {
    let data: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.max_abs > 0.0)
        .map(|p| (libm::log(p.gap as f64 + 1.0), libm::log(p.max_abs)))
        .collect();
    if data.len() < 2 {
        return 0.0;
    }
    let m = data.len() as f64;
    let mx = data.iter().map(|d| d.0).sum::<f64>() / m;
    let my = data.iter().map(|d| d.1).sum::<f64>() / m;
    let sxy: f64 = data.iter().map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = data.iter().map(|(a, _)| (a - mx) * (a - mx)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}

/// `e^{2 pi i theta}`.
pub fn unit(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI * theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dim(&w(&[0, 0, 0])).unwrap(), 1);
        assert_eq!(weyl_dim(&w(&[7, 0])).unwrap(), 8);
        assert_eq!(weyl_dim(&w(&[1, 0, 0])).unwrap(), 3);
        assert_eq!(weyl_dim(&w(&[1, 1, 0])).unwrap(), 3);
        assert_eq!(weyl_dim(&w(&[2, 1, 0])).unwrap(), 8);
        assert_eq!(weyl_dim(&w(&[0, 1])), Err(Error::NotDominant));
    }

    #[test]
    fn polynomial_shape() {
        let p = weyl_polynomial(2);
        assert_eq!(p.render(), "x1 - x2 + 1");
        for n in 1..=5 {
            assert_eq!(weyl_polynomial(n).degree(), Some((n * n - n) as u32 / 2));
        }
        let p3 = weyl_polynomial(3);
        assert_eq!(p3.eval(&[2, 1, 0]).unwrap(), Rational::from_integer(8));
    }

    #[test]
    fn delta_matches() {
        for n in 1..=6 {
            let rd = RootData::new(n);
            assert_eq!(rd.delta(), rd.delta_closed_form());
        }
        let rd = RootData::new(3);
        assert_eq!(rd.inner(&w(&[1, 0, 0]), &w(&[1, 0, 0])), 1);
        assert_eq!(rd.inner(&w(&[1, 0, 0]), &w(&[0, 1, 0])), 0);
    }

    #[test]
    fn schur_examples() {
        let x = [unit(0.1), unit(0.35)];
        let s = schur_trace(&w(&[1, 0]), &x).unwrap();
        assert!((s - (x[0] + x[1])).norm() < 1e-12);
        let y = [unit(0.1), unit(0.2), unit(0.7)];
        let d = schur_trace(&w(&[1, 1, 1]), &y).unwrap();
        assert!((d - y[0] * y[1] * y[2]).norm() < 1e-12);
        let inv = schur_trace(&w(&[0, 0, -1]), &y).unwrap();
        let expected: Complex64 = y.iter().map(|z| z.conj()).sum();
        assert!((inv - expected).norm() < 1e-12);
        assert_eq!(schur_at_ones(&w(&[3, 1, 0])).unwrap(), weyl_dim(&w(&[3, 1, 0])).unwrap() as i128);
        assert!(schur_trace(&w(&[1, 0]), &[Complex64::new(2.0, 0.0), Complex64::one()]).is_err());
    }

    #[test]
    fn regular_bound_examples() {
        let x = [Complex64::one(), -Complex64::one()];
        assert!((regular_bound(&x).unwrap() - 1.0).abs() < 1e-12);
        for a in 0..=50 {
            let s = schur_trace(&w(&[a, 0]), &x).unwrap().norm();
            assert!(s < 1e-9 || (s - 1.0).abs() < 1e-9);
        }
        let y = [Complex64::one(), Complex64::i()];
        assert!((regular_bound(&y).unwrap() - core::f64::consts::SQRT_2).abs() < 1e-12);
        assert_eq!(
            regular_bound(&[Complex64::one(), Complex64::one()]),
            Err(Error::RepeatedEigenvalues)
        );
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(dominant_box(2, 3, 0).len(), 4);
        assert_eq!(dominant_box(3, 2, 0).len(), 6);
        assert!(dominant_box(3, 4, -2).iter().all(|l| l.is_dominant() && l.0[2] == -2));
    }

    #[test]
    fn degree_scans() {
        let x = [Complex64::one(), -Complex64::one()];
        let scan = cc_degree_scan(&x, 50).unwrap();
        assert!(scan.pass);
        assert!(scan.points.last().unwrap().max_ratio < 0.05);
        let y = [Complex64::one(), Complex64::one(), -Complex64::one()];
        let scan = cc_degree_scan(&y, 20).unwrap();
        assert!(scan.exponent <= 2.5, "{}", scan.exponent);
        assert_eq!(scan.weyl_degree, 3);
        assert_eq!(
            cc_degree_scan(&[Complex64::one(); 3], 5).unwrap_err(),
            Error::CentralSpectrum
        );
    }
}
