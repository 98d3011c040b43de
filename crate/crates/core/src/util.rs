//! Small integer helpers.

use alloc::vec::Vec;

use crate::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^e`, failing unless `q` is a prime power.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, e))
}

pub fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn checked_pow(base: u128, exp: u32) -> Result<u128> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// `n!` as a `u128`.
pub fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// `(q-1)(q^2-1)...(q^{n-1}-1)`: the degree of every cuspidal representation
/// of `GL_n(F_q)`.
pub fn cuspidal_degree(q: u64, n: u32) -> u128 {
    (1..n).map(|i| (q as u128).pow(i) - 1).product()
}

/// `prod_{k=1}^{n-1} (1 + q + ... + q^k)`, the index of the Iwahori subgroup
/// in `GL_n(O_F)`.
pub fn iwahori_index(q: u64, n: u32) -> u128 {
    (1..n)
        .map(|k| (0..=k).map(|i| (q as u128).pow(i)).sum::<u128>())
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2).unwrap(), (2, 1));
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(64).unwrap(), (2, 6));
        assert_eq!(prime_power(12), Err(Error::NotPrimePower(12)));
        assert_eq!(prime_power(1), Err(Error::NotPrimePower(1)));
    }

    #[test]
    fn iwahori_index_values() {
        assert_eq!(iwahori_index(2, 2), 3);
        assert_eq!(iwahori_index(3, 2), 4);
        assert_eq!(iwahori_index(2, 3), 21);
    }

    #[test]
    fn cuspidal_degrees() {
        assert_eq!(cuspidal_degree(3, 2), 2);
        assert_eq!(cuspidal_degree(2, 3), 3);
        assert_eq!(cuspidal_degree(5, 2), 4);
        assert_eq!(cuspidal_degree(3, 3), 16);
    }
}
