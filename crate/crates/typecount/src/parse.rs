//! Text forms of matrices, weights, eigenvalues and budgets.

use num_complex::Complex64;
use typecount_core::archweyl::{unit, Weight};
use typecount_core::localring::{make_ring, RingKind};
use typecount_core::matrix::OMatrix;

use crate::{CliError, CliResult};

fn perr(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

/// A polynomial in `t` over `F_q`, as coefficient codes low degree first:
/// `1+t^2`, `2t`, `3*t^2`, `t`, `0`. Coefficients are field codes below `q`.
pub fn parse_tpoly(s: &str, q: u64) -> CliResult<Vec<u32>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(perr("empty matrix entry"));
    }
    let mut coeffs: Vec<u32> = Vec::new();
    for term in s.split('+') {
        let (c, deg) = match term.find('t') {
            None => (term, 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let tail = &term[pos + 1..];
                let deg = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .ok_or_else(|| perr(format!("bad term '{term}'")))?
                        .parse::<usize>()
                        .map_err(|_| perr(format!("bad exponent in '{term}'")))?
                };
                (if head.is_empty() { "1" } else { head }, deg)
            }
        };
        let c: u64 = c.parse().map_err(|_| perr(format!("bad coefficient in '{term}'")))?;
        if c >= q {
            return Err(perr(format!("coefficient {c} is not a code below q = {q}")));
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        if coeffs[deg] != 0 {
            return Err(perr(format!("repeated power t^{deg} in '{s}'")));
        }
        coeffs[deg] = c as u32;
    }
    Ok(coeffs)
}

/// Row-major comma-separated entries of an `n x n` matrix over
/// `F_q[t]/t^level`. The level is raised to cover the highest power
/// written, and never below `min_level`.
pub fn parse_matrix(s: &str, q: u64, n: usize, min_level: usize) -> CliResult<OMatrix> {
    let entries: Vec<Vec<u32>> = s
        .split(',')
        .map(|e| parse_tpoly(e, q))
        .collect::<CliResult<_>>()?;
    if entries.len() != n * n {
        return Err(perr(format!(
            "expected {} entries for a {n}x{n} matrix, found {}",
            n * n,
            entries.len()
        )));
    }
    let level = entries
        .iter()
        .map(|e| e.len())
        .max()
        .unwrap_or(1)
        .max(min_level)
        .max(1);
    let ring = make_ring(RingKind::Base, q, 1, level)?;
    Ok(OMatrix::from_digits(&ring, n, &entries)?)
}

pub fn parse_weight(s: &str) -> CliResult<Weight> {
    let v = s
        .split(',')
        .map(|a| a.trim().parse::<i64>().map_err(|_| perr(format!("bad weight entry '{a}'"))))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Weight(v))
}

/// A fraction of a full turn: `1/2`, `0.25`, `-1/3`.
fn parse_turn(s: &str) -> CliResult<f64> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a: f64 = a.trim().parse().map_err(|_| perr(format!("bad turn '{s}'")))?;
        let b: f64 = b.trim().parse().map_err(|_| perr(format!("bad turn '{s}'")))?;
        if b == 0.0 {
            return Err(perr("zero denominator"));
        }
        Ok(a / b)
    } else {
        s.parse().map_err(|_| perr(format!("bad turn '{s}'")))
    }
}

/// Eigenvalues `e^{2 pi i theta}` given by their turns `theta`, e.g.
/// `0,0,1/2` for `(1, 1, -1)`.
pub fn parse_eigs(s: &str) -> CliResult<Vec<Complex64>> {
    s.split(',').map(|t| parse_turn(t).map(unit)).collect()
}

/// A budget such as `100000000` or `1e8`.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    let s = s.trim();
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = s.parse().map_err(|_| format!("bad budget '{s}'"))?;
    if !(f.is_finite() && f >= 0.0 && f < 1.8e19) || f.fract() != 0.0 {
        return Err(format!("budget '{s}' is not a nonnegative integer"));
    }
    Ok(f as u64)
}
