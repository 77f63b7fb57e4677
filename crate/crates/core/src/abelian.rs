//! Finitely generated abelian groups in primary canonical form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, PrimePower};
use crate::error::{Error, Result};
use crate::localization::Localization;

/// `Z^free_rank ⊕ ⊕ Z/p^e`, with torsion summands sorted by prime and then
/// exponent. Two groups are isomorphic iff they are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct FGAbelianGroup {
    free_rank: u32,
    torsion: Vec<PrimePower>,
}

impl FGAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: u32) -> Self {
        FGAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `n = 0` gives `Z` and `n = 1` the trivial group.
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::free(1));
        }
        let torsion = factorize(n)?.factors().to_vec();
        Ok(FGAbelianGroup {
            free_rank: 0,
            torsion,
        })
    }

    /// Builds a group from arbitrary cyclic orders (0 meaning `Z`).
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        orders.iter().try_fold(Self::trivial(), |acc, &n| {
            Ok(acc.direct_sum(&Self::cyclic(n)?))
        })
    }

    /// Builds a group from explicit prime-power summands, canonicalizing.
    pub fn from_parts(free_rank: u32, torsion: impl IntoIterator<Item = PrimePower>) -> Self {
        let mut g = FGAbelianGroup {
            free_rank,
            torsion: torsion.into_iter().filter(|pp| pp.e > 0).collect(),
        };
        g.torsion.sort();
        g
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[PrimePower] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_parts(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).copied(),
        )
    }

    /// `n` copies of `self`.
    pub fn repeat(&self, n: u32) -> Self {
        (0..n).fold(Self::trivial(), |acc, _| acc.direct_sum(self))
    }

    /// Drops the torsion at primes inverted by `loc`; the rational
    /// localization keeps only the free rank.
    pub fn localize(&self, loc: &Localization) -> Self {
        Self::from_parts(
            self.free_rank,
            self.torsion.iter().copied().filter(|pp| !loc.inverts(pp.p)),
        )
    }

    /// Re-sorts the summands. Construction already canonicalizes, so this is
    /// the identity on any value built through the public API.
    pub fn canonical(&self) -> Self {
        Self::from_parts(self.free_rank, self.torsion.iter().copied())
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> Result<u64> {
        self.torsion.iter().try_fold(1u64, |acc, pp| {
            acc.checked_mul(pp.value()?)
                .ok_or(Error::Overflow("torsion order"))
        })
    }

    /// Invariant factors `d_1 | d_2 | ... | d_r` of the torsion subgroup.
    pub fn invariant_factors(&self) -> Result<Vec<u64>> {
        let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for pp in &self.torsion {
            match by_prime.last_mut() {
                Some((p, es)) if *p == pp.p => es.push(pp.e),
                _ => by_prime.push((pp.p, vec![pp.e])),
            }
        }
        let len = by_prime.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
        let mut out = vec![1u64; len];
        for (p, es) in &by_prime {
            // exponents are ascending; align them to the end
            let offset = len - es.len();
            for (i, &e) in es.iter().enumerate() {
                let f = p
                    .checked_pow(e)
                    .ok_or(Error::Overflow("invariant factor"))?;
                out[offset + i] = out[offset + i]
                    .checked_mul(f)
                    .ok_or(Error::Overflow("invariant factor"))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let pp = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == pp {
                j += 1;
            }
            let base = match pp.value() {
                Ok(q) => format!("Z/{q}"),
                Err(_) => format!("Z/{}^{}", pp.p, pp.e),
            };
            match j - i {
                1 => parts.push(base),
                n => parts.push(format!("({base})^{n}")),
            }
            i = j;
        }
        f.write_str(&parts.join(" ⊕ "))
    }
}
