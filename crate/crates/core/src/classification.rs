//! Counting homotopy types of gauge groups over `P⁴(c)` and of looped gauge
//! groups over `M`.
//!
//! `G_k` and `G_l` are equivalent (after looping, over `M`) whenever
//! `(k, d) = (l, d)`, where `d = (ord(∂_1), c)`. The order `ord(∂_1)` over
//! `P⁴(c)` is only known to divide the order over `S⁴` stored in the
//! catalog, so every `d` computed here comes from the `S⁴` order and the
//! resulting counts are upper bounds. The relation is sufficient only: this
//! module never claims two gauge groups are inequivalent.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith::{divisor_count, factorize, gcd, gcd_class, nu_p, require_odd_prime};
use crate::catalog::Scope;
use crate::decomposition::{check_loops2, check_loops3};
use crate::error::{Error, Result};
use crate::lie::LieGroup;
use crate::localization::Localization;
use crate::manifold::ManifoldSpec;

/// Where the order behind `d` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderSource {
    Exact,
    /// The order over `S⁴`, a multiple of the order over `P⁴(c)`.
    UpperBoundFromS4,
}

/// One class of `Z/c` under `k ~ l iff (k, d) = (l, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdClass {
    /// The common value of `(k, d)`.
    pub gcd: u64,
    pub representative: u64,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group: LieGroup,
    pub c: u64,
    pub d: u64,
    pub classes: Vec<GcdClass>,
    /// Upper bound on the number of integral homotopy types, `f(d)`.
    pub count_integral: u64,
    /// Upper bound on the number of `p`-local types, `ν_p(d) + 1`, for each
    /// prime `p | c`.
    pub count_at_p: BTreeMap<u64, u64>,
    pub order_source: OrderSource,
    /// `d = 1`: every component is equivalent to the trivial one.
    pub trivial: bool,
}

impl ClassificationReport {
    /// The class containing `k`.
    pub fn class_of(&self, k: u64) -> Result<u64> {
        gcd_class(k as i64, self.d)
    }

    pub fn caveat(&self) -> &'static str {
        match self.order_source {
            OrderSource::Exact => "",
            OrderSource::UpperBoundFromS4 => {
                "d uses the order over S^4, which the order over P^4(c) divides; counts are upper bounds"
            }
        }
    }
}

/// `d = (ord, c)`, assembled one prime of `c` at a time from the catalog
/// order valid at that prime.
pub fn d_of(g: &LieGroup, c: u64) -> Result<u64> {
    if c < 2 {
        return Err(Error::InvalidInput(format!(
            "c must be at least 2, got {c}"
        )));
    }
    let mut d = 1u64;
    for pp in factorize(c)?.factors() {
        let ord = g.ord_partial1_tilde(Scope::At(pp.p))?;
        let e = nu_p(ord, pp.p)?.min(pp.e);
        d *= pp.p.pow(e);
    }
    Ok(d)
}

/// Sufficient condition for `G_k(P⁴(c)) ≃ G_l(P⁴(c))` at every prime.
pub fn same_type_moore(k: u64, l: u64, g: &LieGroup, c: u64) -> Result<bool> {
    let d = d_of(g, c)?;
    Ok(gcd_class(k as i64, d)? == gcd_class(l as i64, d)?)
}

/// Classification of `G_k(P⁴(c))` over `k ∈ Z/c`.
pub fn classify_moore(g: &LieGroup, c: u64) -> Result<ClassificationReport> {
    g.validate()?;
    let d = d_of(g, c)?;
    let mut by_gcd: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for k in 0..c {
        let class = gcd_class(k as i64, d)?;
        by_gcd.entry(class).or_insert((k, 0)).1 += 1;
    }
    let classes = by_gcd
        .into_iter()
        .map(|(gcd, (representative, size))| GcdClass {
            gcd,
            representative,
            size,
        })
        .collect();
    let count_at_p = factorize(c)?
        .primes()
        .map(|p| Ok((p, u64::from(nu_p(d, p)?) + 1)))
        .collect::<Result<_>>()?;
    Ok(ClassificationReport {
        group: *g,
        c,
        d,
        classes,
        count_integral: divisor_count(d)?,
        count_at_p,
        order_source: OrderSource::UpperBoundFromS4,
        trivial: d == 1,
    })
}

/// Classification of `Ω^i G_k(M)` for `i = 2` (`6 ∤ c`) or `i = 3` (odd
/// `c`, `M` stably parallelizable with a single top cell).
pub fn classify_looped_manifold(
    m: &ManifoldSpec,
    g: &LieGroup,
    i: u32,
    loc: &Localization,
) -> Result<ClassificationReport> {
    match i {
        2 => check_loops2(m, g, loc)?,
        3 => check_loops3(m, g, loc)?,
        other => {
            return Err(Error::InvalidInput(format!(
                "looped classification needs i = 2 or 3, got {other}"
            )))
        }
    }
    classify_moore(g, m.c)
}

/// Whether `(G, p, c)` is one of the listed cases in which
/// `G_k(P⁴(c)) ≃_(p) Ω⁴₀(G; c) × G` for every `k`.
///
/// For the matrix groups the condition `ν_p((ord, c)) = 1` is taken
/// literally.
pub fn trivial_case(g: &LieGroup, p: u64, c: u64) -> Result<bool> {
    require_odd_prime(p)?;
    g.validate()?;
    let bound = (p - 1) * (p - 1) + 1;
    let nu_gcd = |ord: u64| -> Result<bool> { Ok(nu_p(gcd(ord, c), p)? == 1) };
    let divides = |n: u64| c.is_multiple_of(n);
    Ok(match *g {
        LieGroup::SU(n) => {
            let n = u64::from(n);
            n <= bound && p >= 3 && nu_gcd(n * (n * n - 1))?
        }
        LieGroup::Sp(n) => {
            let n = u64::from(n);
            (4..=bound).contains(&(2 * n)) && p >= 3 && nu_gcd(n * (2 * n + 1))?
        }
        LieGroup::Spin(big) if big % 2 == 1 => {
            let n = u64::from(big / 2);
            (4..=bound).contains(&(2 * n)) && p >= 3 && nu_gcd(n * (2 * n + 1))?
        }
        LieGroup::Spin(big) => {
            let n = u64::from(big / 2);
            (6..=bound).contains(&(2 * n)) && p >= 5 && nu_gcd((n - 1) * (2 * n - 1))?
        }
        LieGroup::G2 => p >= 3 && !divides(3 * 7),
        LieGroup::F4 => p >= 5 && !divides(5 * 13),
        LieGroup::E6 => p >= 5 && !divides(5 * 7 * 13),
        LieGroup::E7 => p >= 7 && !divides(7 * 11 * 19),
        LieGroup::E8 => p >= 7 && !divides(7 * 11 * 13 * 19 * 31),
    })
}

/// `{ (ord, k + c·i) : 0 <= i <= n }`.
pub fn dirichlet_oracle(k: u64, ord: u64, c: u64, n: u64) -> BTreeSet<u64> {
    (0..=n).map(|i| gcd(ord, k + c * i)).collect()
}

/// The minimum of [`dirichlet_oracle`], stopping early once the value
/// `(k, ord, c)` is reached: every element is a multiple of it.
pub fn dirichlet_min(k: u64, ord: u64, c: u64, n: u64) -> u64 {
    let floor = gcd(k, gcd(ord, c));
    let mut best = u64::MAX;
    for i in 0..=n {
        best = best.min(gcd(ord, k + c * i));
        if best == floor {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_type_examples() {
        assert!(same_type_moore(1, 5, &LieGroup::SU(3), 7).unwrap());
        assert!(!same_type_moore(0, 1, &LieGroup::SU(3), 9).unwrap());
        assert!(same_type_moore(2, 4, &LieGroup::SU(3), 9).unwrap());
    }

    #[test]
    fn classify_examples() {
        let r = classify_moore(&LieGroup::SU(3), 9).unwrap();
        assert_eq!((r.d, r.count_integral), (3, 2));
        assert_eq!(r.count_at_p[&3], 2);
        assert_eq!(r.order_source, OrderSource::UpperBoundFromS4);

        let r = classify_moore(&LieGroup::SU(5), 7).unwrap();
        assert_eq!(r.d, 1);
        assert_eq!(r.classes.len(), 1);
        assert!(r.trivial);

        let r = classify_moore(&LieGroup::G2, 21).unwrap();
        assert_eq!((r.d, r.count_integral), (21, 4));
        let sizes: u64 = r.classes.iter().map(|c| c.size).sum();
        assert_eq!(sizes, 21);
    }

    #[test]
    fn looped_examples() {
        let m = ManifoldSpec::new(5, 2).spin(true);
        let r = classify_looped_manifold(&m, &LieGroup::SU(3), 2, &Localization::Integral).unwrap();
        assert!(r.trivial);

        let m = ManifoldSpec::new(9, 2)
            .stably_parallelizable(true)
            .single_top_cell(true);
        let away2 = Localization::away_from([2]).unwrap();
        let r = classify_looped_manifold(&m, &LieGroup::Sp(2), 3, &away2).unwrap();
        assert_eq!(r.d, 1);

        let m = ManifoldSpec::new(6, 2).spin(true);
        assert_eq!(
            classify_looped_manifold(&m, &LieGroup::SU(3), 2, &Localization::Integral),
            Err(Error::Hypothesis("6∤c".into()))
        );
    }

    #[test]
    fn trivial_cases() {
        assert!(trivial_case(&LieGroup::G2, 5, 5).unwrap());
        assert!(!trivial_case(&LieGroup::E7, 7, 7 * 11 * 19).unwrap());
        assert!(trivial_case(&LieGroup::F4, 5, 13).unwrap());
        // ν_3((24, 9)) = 1
        assert!(trivial_case(&LieGroup::SU(3), 3, 9).unwrap());
        assert!(!trivial_case(&LieGroup::SU(3), 3, 8).unwrap());
        assert!(trivial_case(&LieGroup::SU(3), 2, 9).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(*dirichlet_oracle(1, 24, 9, 100).first().unwrap(), 1);
        assert_eq!(*dirichlet_oracle(3, 24, 9, 100).first().unwrap(), 3);
        let zero: BTreeSet<u64> = dirichlet_oracle(0, 24, 9, 100);
        // i = 0 contributes (24, 0) = 24
        assert!(zero.contains(&24));
        assert_eq!(*zero.first().unwrap(), 3);
        assert_eq!(dirichlet_min(3, 24, 9, 100), 3);
    }
}
