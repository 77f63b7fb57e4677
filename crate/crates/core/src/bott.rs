//! Stable homotopy groups of `SU` and `Spin` gauge groups over `M`.
//!
//! Away from `c`, `G_k(M)` splits as a product of iterated loop spaces of
//! `G`; in the stable range each `Ω^s G` contributes `π_{r+s}` of the
//! stable group, read off from Bott periodicity.

use serde::{Deserialize, Serialize};

use crate::abelian::FGAbelianGroup;
use crate::decomposition::{gauge_away_from, Atom};
use crate::error::{hypothesis, Error, Result};
use crate::lie::{stable_pi, LieGroup, StableFamily};
use crate::localization::Localization;
use crate::manifold::ManifoldSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableQuery {
    pub manifold: ManifoldSpec,
    pub family: StableFamily,
    pub r: u32,
    /// Localize away from `2c` rather than away from `c`. Required for
    /// non-spin `M`.
    pub away_from_2: bool,
}

impl StableQuery {
    pub fn new(manifold: ManifoldSpec, family: StableFamily, r: u32) -> Self {
        StableQuery {
            manifold,
            family,
            r,
            away_from_2: !manifold.spin,
        }
    }

    pub fn localization(&self) -> Result<Localization> {
        let loc = Localization::away_from_divisors(self.manifold.c)?;
        if self.away_from_2 {
            loc.also_away_from([2])
        } else {
            Ok(loc)
        }
    }
}

/// Smallest `n` for which `π_r` of the gauge group is stable: `n >= r/2 + 3`
/// for `SU(n)`, `n >= r + 7` for `Spin(n)`.
pub fn stability_threshold(family: StableFamily, r: u32) -> u32 {
    match family {
        StableFamily::SU => (r + 7) / 2,
        StableFamily::Spin => r + 7,
    }
}

/// The loop shifts `s`, with multiplicity, such that the gauge group is
/// `∏ Ω^s G` in the query's localization.
pub fn shifts(q: &StableQuery) -> Result<Vec<(u32, u32)>> {
    let n = stability_threshold(q.family, q.r);
    let g = match q.family {
        StableFamily::SU => LieGroup::SU(n),
        StableFamily::Spin => LieGroup::Spin(n),
    };
    let expr = gauge_away_from(&q.manifold, &g, &q.localization()?)?;
    expr.canonical_terms()
        .into_iter()
        .map(|(atom, mult)| match atom {
            Atom::Group => Ok((0, mult)),
            Atom::Loops { loops } => Ok((loops, mult)),
            other => Err(Error::Unsupported(format!(
                "factor {other:?} has no stable homotopy in this localization"
            ))),
        })
        .collect()
}

/// `π_r(G_k(M))` for `G = SU(n)` or `Spin(n)` with `n` in the stable range.
pub fn stable_pi_gauge(q: &StableQuery) -> Result<FGAbelianGroup> {
    let min_r = match q.family {
        StableFamily::SU => 1,
        StableFamily::Spin => 2,
    };
    if q.r < min_r {
        return Err(Error::InvalidInput(format!(
            "stable π_r for {} needs r >= {min_r}",
            q.family
        )));
    }
    if !q.manifold.spin && !q.away_from_2 {
        return Err(hypothesis("localized away from 2c"));
    }
    let loc = q.localization()?;
    let mut total = FGAbelianGroup::trivial();
    for (s, mult) in shifts(q)? {
        total = total.direct_sum(&stable_pi(q.family, q.r + s)?.repeat(mult));
    }
    Ok(total.localize(&loc))
}

/// One row per residue of `r` modulo the Bott period (2 for `SU`, 8 for
/// `Spin`), evaluated at a representative `r`.
pub fn bott_table(
    manifold: &ManifoldSpec,
    family: StableFamily,
    away_from_2: bool,
) -> Result<Vec<(u32, FGAbelianGroup)>> {
    let (period, base) = match family {
        StableFamily::SU => (2, 2),
        StableFamily::Spin => (8, 8),
    };
    (0..period)
        .map(|i| {
            let q = StableQuery {
                manifold: *manifold,
                family,
                r: base + i,
                away_from_2,
            };
            Ok((i, stable_pi_gauge(&q)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(free: u32, twos: u32) -> FGAbelianGroup {
        FGAbelianGroup::free(free).direct_sum(&FGAbelianGroup::cyclic(2).unwrap().repeat(twos))
    }

    #[test]
    fn thresholds() {
        assert_eq!(stability_threshold(StableFamily::SU, 8), 7);
        assert_eq!(stability_threshold(StableFamily::SU, 1), 4);
        assert_eq!(stability_threshold(StableFamily::Spin, 2), 9);
    }

    #[test]
    fn su_is_free_of_rank_m() {
        for m in 1..5 {
            let q = StableQuery::new(ManifoldSpec::new(3, m).spin(true), StableFamily::SU, 5);
            assert_eq!(stable_pi_gauge(&q).unwrap(), FGAbelianGroup::free(m));
        }
    }

    #[test]
    fn spin_examples() {
        let m3 = ManifoldSpec::new(3, 3).spin(true);
        let q = StableQuery::new(m3, StableFamily::Spin, 14);
        assert_eq!(stable_pi_gauge(&q).unwrap(), group(1, 4));
        let q = StableQuery::new(m3, StableFamily::Spin, 10);
        assert_eq!(stable_pi_gauge(&q).unwrap(), group(1, 0));
        let nonspin = ManifoldSpec::new(3, 3);
        let q = StableQuery::new(nonspin, StableFamily::Spin, 6);
        assert_eq!(stable_pi_gauge(&q).unwrap(), group(1, 0));
    }

    #[test]
    fn refusals() {
        let nonspin = ManifoldSpec::new(3, 2);
        let q = StableQuery {
            away_from_2: false,
            ..StableQuery::new(nonspin, StableFamily::Spin, 6)
        };
        assert_eq!(
            stable_pi_gauge(&q),
            Err(Error::Hypothesis("localized away from 2c".into()))
        );
        let q = StableQuery::new(ManifoldSpec::new(3, 2), StableFamily::Spin, 1);
        assert!(stable_pi_gauge(&q).is_err());
        let q = StableQuery::new(ManifoldSpec::new(3, 1), StableFamily::Spin, 4);
        assert!(stable_pi_gauge(&q).is_err());
    }
}
