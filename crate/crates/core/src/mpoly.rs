//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{CheckedAdd, One, Zero};

use crate::{Error, Result};

pub type Rational = Ratio<i128>;

/// `sum c_e x^e` keyed by exponent vectors of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MPoly::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    /// Build from `(coefficient, exponents)` pairs; repeated monomials add up.
    pub fn from_terms(nvars: usize, terms: &[(Rational, Vec<u32>)]) -> Result<Self> {
        let mut p = MPoly::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension("exponent vector length"));
            }
            p.add_term(e.clone(), *c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.scale(-Rational::one()))
    }

    pub fn scale(&self, c: Rational) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), *v * c);
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, *c1 * *c2);
            }
        }
        out
    }

    /// Exact value at an integer point.
    pub fn eval(&self, x: &[i64]) -> Result<Rational> {
        if x.len() != self.nvars {
            return Err(Error::Dimension("evaluation point length"));
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut m: i128 = 1;
            for (&xi, &ei) in x.iter().zip(e) {
                let p = (xi as i128).checked_pow(ei).ok_or(Error::Overflow)?;
                m = m.checked_mul(p).ok_or(Error::Overflow)?;
            }
            total = total
                .checked_add(&(c * m))
                .ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Human-readable form, e.g. `1/2*x1^2*x2 - x3 + 1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < Rational::zero();
            let abs = if neg { -*c } else { *c };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&format!("{}", abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&format!("{}*", abs));
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}
