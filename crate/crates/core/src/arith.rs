//! Exact integer utilities: p-adic valuations, base-p digit sums, factorial
//! valuations, divisor counts and gcd classes.
//!
//! All inputs in this crate are small (orders of connecting maps, orders of
//! fundamental groups, primes below a few hundred), so everything is done in
//! `u64` with checked arithmetic. An overflow is reported as an error, never
//! wrapped.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime power `p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimePower { p, e })
    }

    pub fn value(&self) -> Result<u64> {
        self.p
            .checked_pow(self.e)
            .ok_or(Error::Overflow("prime power"))
    }
}

/// Prime factorization with distinct ascending primes and nonzero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Factorization(Vec<PrimePower>);

impl Factorization {
    pub fn factors(&self) -> &[PrimePower] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|pp| pp.p)
    }

    /// Multiplies the prime powers back together.
    pub fn product(&self) -> Result<u64> {
        self.0.iter().try_fold(1u64, |acc, pp| {
            acc.checked_mul(pp.value()?)
                .ok_or(Error::Overflow("factorization product"))
        })
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0.iter().find(|pp| pp.p == p).map_or(0, |pp| pp.e)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::EvenPrime);
    }
    Ok(())
}

/// Trial-division factorization of `m >= 1`.
pub fn factorize(m: u64) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::NonPositive("factorize"));
    }
    let mut rest = m;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            out.push(PrimePower { p: d, e });
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push(PrimePower { p: rest, e: 1 });
    }
    Ok(Factorization(out))
}

/// Distinct prime divisors of `m >= 1`, ascending.
pub fn prime_divisors(m: u64) -> Result<Vec<u64>> {
    Ok(factorize(m)?.primes().collect())
}

/// Largest `e` with `p^e | m`.
pub fn nu_p(m: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    if m == 0 {
        return Err(Error::ValuationUndefined);
    }
    let mut e = 0;
    let mut rest = m;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    Ok(e)
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(n: u64, p: u64) -> Result<u64> {
    require_prime(p)?;
    let mut rest = n;
    let mut sum = 0;
    while rest > 0 {
        sum += rest % p;
        rest /= p;
    }
    Ok(sum)
}

/// `nu_p(m!)` via Legendre's identity `(m - s_p(m)) / (p - 1)`.
pub fn legendre_valuation(m: u64, p: u64) -> Result<u64> {
    let s = digit_sum(m, p)?;
    Ok((m - s) / (p - 1))
}

/// Number of positive divisors of `m >= 1`.
pub fn divisor_count(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NonPositive("divisor_count"));
    }
    factorize(m)?.factors().iter().try_fold(1u64, |acc, pp| {
        acc.checked_mul(u64::from(pp.e) + 1)
            .ok_or(Error::Overflow("divisor_count"))
    })
}

/// `gcd(k mod d, d)` with `gcd(0, d) = d`; `k` may be any integer
/// representative of its class.
pub fn gcd_class(k: i64, d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::NonPositive("gcd_class modulus"));
    }
    let r = i128::from(k).rem_euclid(i128::from(d)) as u64;
    Ok(r.gcd(&d))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(nu_p(24, 3).unwrap(), 1);
        assert_eq!(nu_p(1, 7).unwrap(), 0);
        let e8_order = 7 * 7 * 11 * 11 * 13 * 19 * 31;
        assert_eq!(nu_p(e8_order, 7).unwrap(), 2);
        assert_eq!(nu_p(0, 3), Err(Error::ValuationUndefined));
        assert_eq!(nu_p(12, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn digit_sums() {
        assert_eq!(digit_sum(5, 3).unwrap(), 3);
        assert_eq!(digit_sum(0, 7).unwrap(), 0);
        for p in [2, 3, 5, 7, 11, 97] {
            assert_eq!(digit_sum(p - 1, p).unwrap(), p - 1);
        }
    }

    #[test]
    fn legendre() {
        assert_eq!(legendre_valuation(4, 3).unwrap(), 1);
        // 25!: multiples of 5 are 5,10,15,20 and 25 = 5^2, so 6.
        assert_eq!(legendre_valuation(25, 5).unwrap(), 6);
        for p in [3, 5, 7, 13] {
            for m in 0..p {
                assert_eq!(legendre_valuation(m, p).unwrap(), 0);
            }
        }
    }

    #[test]
    fn divisors() {
        assert_eq!(divisor_count(12).unwrap(), 6);
        assert_eq!(divisor_count(1).unwrap(), 1);
        for k in 0..10u32 {
            assert_eq!(divisor_count(3u64.pow(k)).unwrap(), u64::from(k) + 1);
        }
        assert!(divisor_count(0).is_err());
    }

    #[test]
    fn gcd_classes() {
        assert_eq!(gcd_class(0, 24).unwrap(), 24);
        assert_eq!(gcd_class(5, 24).unwrap(), 1);
        assert_eq!(gcd_class(6, 24).unwrap(), 6);
        assert_eq!(gcd_class(-18, 24).unwrap(), 6);
        assert!(gcd_class(3, 0).is_err());
    }

    #[test]
    fn factorization_product() {
        let f = factorize(360).unwrap();
        assert_eq!(
            f.factors(),
            &[
                PrimePower { p: 2, e: 3 },
                PrimePower { p: 3, e: 2 },
                PrimePower { p: 5, e: 1 }
            ]
        );
        assert_eq!(f.product().unwrap(), 360);
        assert_eq!(factorize(1).unwrap().factors(), &[]);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
