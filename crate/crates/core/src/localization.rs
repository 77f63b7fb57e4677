//! Localization contexts: integral, at a prime, away from a set of primes,
//! or rational.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{prime_divisors, require_prime};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(tag = "kind", content = "primes", rename_all = "snake_case")]
pub enum Localization {
    #[default]
    Integral,
    /// Localized at a single prime: every other prime is inverted.
    At(u64),
    /// The listed primes are inverted.
    AwayFrom(BTreeSet<u64>),
    Rational,
}

impl Localization {
    pub fn at(p: u64) -> Result<Self> {
        require_prime(p)?;
        Ok(Localization::At(p))
    }

    pub fn away_from(primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        for &p in &set {
            require_prime(p)?;
        }
        Ok(Localization::AwayFrom(set))
    }

    /// Away from the prime divisors of `n` (and of each extra factor).
    pub fn away_from_divisors(n: u64) -> Result<Self> {
        Self::away_from(prime_divisors(n)?)
    }

    /// Whether the prime `p` is invertible in this context.
    pub fn inverts(&self, p: u64) -> bool {
        match self {
            Localization::Integral => false,
            Localization::At(q) => p != *q,
            Localization::AwayFrom(s) => s.contains(&p),
            Localization::Rational => true,
        }
    }

    /// Whether every prime divisor of `n` is inverted, i.e. multiplication
    /// by `n` is an equivalence.
    pub fn inverts_all_divisors_of(&self, n: u64) -> bool {
        match prime_divisors(n) {
            Ok(ps) => ps.into_iter().all(|p| self.inverts(p)),
            Err(_) => false,
        }
    }

    /// Extends the set of inverted primes.
    pub fn also_away_from(&self, primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let extra: Vec<u64> = primes.into_iter().collect();
        for &p in &extra {
            require_prime(p)?;
        }
        Ok(match self {
            Localization::Integral => Localization::AwayFrom(extra.into_iter().collect()),
            Localization::AwayFrom(s) => {
                Localization::AwayFrom(s.iter().copied().chain(extra).collect())
            }
            Localization::At(q) => {
                if extra.contains(q) {
                    Localization::Rational
                } else {
                    Localization::At(*q)
                }
            }
            Localization::Rational => Localization::Rational,
        })
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Localization::Rational)
    }
}

impl fmt::Display for Localization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Localization::Integral => f.write_str("integral"),
            Localization::At(p) => write!(f, "at {p}"),
            Localization::AwayFrom(s) => {
                let list: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "away from {{{}}}", list.join(","))
            }
            Localization::Rational => f.write_str("rational"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion() {
        let away = Localization::away_from_divisors(12).unwrap();
        assert!(away.inverts(2) && away.inverts(3) && !away.inverts(5));
        assert!(away.inverts_all_divisors_of(18));
        assert!(!away.inverts_all_divisors_of(10));
        let at5 = Localization::at(5).unwrap();
        assert!(at5.inverts_all_divisors_of(12));
        assert!(!at5.inverts(5));
        assert!(Localization::at(6).is_err());
    }

    #[test]
    fn extension() {
        let away = Localization::away_from_divisors(9).unwrap();
        let more = away.also_away_from([2]).unwrap();
        assert_eq!(more, Localization::away_from([2, 3]).unwrap());
    }
}
