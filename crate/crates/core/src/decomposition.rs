//! Product decompositions of (looped) gauge groups as formal expressions.
//!
//! A [`SpaceExpr`] is a product of atoms built from a group `G`: iterated
//! loop spaces of `G`, of the power-map fibre `G{c}`, of `Map*₀(CP², G)`,
//! of gauge groups over the Moore space `P⁴(c)`, and the rational sphere and
//! Eilenberg-MacLane factors used by [`crate::rational`].
//!
//! Expressions remember the order in which factors were written (so they
//! print the way the decomposition is usually stated) but compare as
//! multisets.
//!
//! ```
//! use gauge5::{decomposition, LieGroup, ManifoldSpec};
//!
//! let m = ManifoldSpec::new(5, 3);
//! let e = decomposition::loops2_gauge(&m, &LieGroup::E8, 0).unwrap();
//! assert_eq!(
//!     e.to_string(),
//!     "Ω²G₀(P⁴(5)) × Ω³Map*₀(CP²,G) × Ω³G{5} × (Ω⁴G)² × Ω⁵G"
//! );
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{hypothesis, Error, Result};
use crate::lie::LieGroup;
use crate::localization::Localization;
use crate::manifold::ManifoldSpec;
use crate::render::{sub, sup};

/// An atomic factor. Loop counts are `loops`; `Group` is `Ω⁰G = G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Atom {
    Group,
    /// `Ω^j G` with `j >= 1`.
    Loops {
        loops: u32,
    },
    /// `Ω^j G{c}`, where `G{c}` is the fibre of the `c`-th power map.
    LoopsFiber {
        loops: u32,
    },
    /// `Ω^n(G; c) = Map*(P^n(c), G)`, which normalizes to `Ω^{n-1} G{c}`.
    MooreMap {
        n: u32,
    },
    /// `Ω^j G_k(P⁴(c))`, the gauge group over the Moore space.
    MooreGauge {
        loops: u32,
        k: u64,
    },
    /// `Ω^j Map*₀(CP², G)`.
    LoopsMapCP2 {
        loops: u32,
    },
    /// A rational sphere `S^n`.
    Sphere {
        dim: u32,
    },
    /// `K(Q, n)`.
    EilenbergMacLane {
        dim: u32,
    },
}

/// The group an expression is built from, reduced to what the expression
/// machinery needs: a label and the degrees of the rational generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupInfo {
    pub name: String,
    /// Degrees `d` with `π_d(G) ⊗ Q ≠ 0`, with multiplicity, ascending.
    pub degrees: Vec<u32>,
}

impl GroupInfo {
    pub fn new(name: impl Into<String>, mut degrees: Vec<u32>) -> Self {
        degrees.sort_unstable();
        GroupInfo {
            name: name.into(),
            degrees,
        }
    }

    pub fn of_lie(g: &LieGroup) -> Result<Self> {
        Ok(Self::new(g.to_string(), g.rational_degrees()?))
    }

    /// Rank of `π_d(G) ⊗ Q`.
    pub fn pi_rank(&self, d: u32) -> u32 {
        self.degrees.iter().filter(|&&x| x == d).count() as u32
    }

    fn max_degree(&self) -> u32 {
        self.degrees.last().copied().unwrap_or(0)
    }
}

/// A formal product of atoms with multiplicities.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceExpr {
    pub group: GroupInfo,
    /// Order of `π_1(M)` for expressions that mention `P⁴(c)` or `G{c}`.
    pub c: Option<u64>,
    pub localization: Localization,
    terms: Vec<(Atom, u32)>,
}

/// The rewrite rules applied by [`SpaceExpr::normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `Map*(P^{j+1}(c), G) → Ω^j G{c}`.
    MooreMapToFiber,
    /// With every prime of `c` inverted, `P⁴(c)` and `G{c}` are
    /// contractible: drop fibre atoms and replace `Ω^j G_k(P⁴(c))` by
    /// `Ω^j G`.
    ContractAwayFromC,
    /// With 2 inverted, `ΣCP² ≃ S³ ∨ S⁵`, so
    /// `Ω^j Map*₀(CP², G) → Ω^{j+2} G × Ω^{j+4} G`.
    SplitCP2AwayFrom2,
    /// `Ω⁰G → G`.
    ZeroLoops,
    /// Rationally, `Ω^j G` is contractible once `j` reaches the top
    /// generator degree.
    DropRationallyContractible,
    /// Merge equal atoms and drop zero multiplicities.
    Merge,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::MooreMapToFiber,
        Rule::ContractAwayFromC,
        Rule::SplitCP2AwayFrom2,
        Rule::ZeroLoops,
        Rule::DropRationallyContractible,
        Rule::Merge,
    ];
}

impl SpaceExpr {
    pub fn new(group: GroupInfo, c: Option<u64>, localization: Localization) -> Self {
        SpaceExpr {
            group,
            c,
            localization,
            terms: Vec::new(),
        }
    }

    /// Appends `mult` copies of `atom`.
    pub fn push(&mut self, atom: Atom, mult: u32) {
        self.terms.push((atom, mult));
    }

    pub fn with(mut self, atom: Atom, mult: u32) -> Self {
        self.push(atom, mult);
        self
    }

    /// Factors in written order, possibly with repeats before
    /// normalization.
    pub fn terms(&self) -> &[(Atom, u32)] {
        &self.terms
    }

    /// Merged, sorted `(atom, multiplicity)` pairs with zero multiplicities
    /// removed: the multiset the expression denotes.
    pub fn canonical_terms(&self) -> Vec<(Atom, u32)> {
        let mut v: Vec<(Atom, u32)> = merge(&self.terms);
        v.sort();
        v
    }

    /// Total number of factors counted with multiplicity.
    pub fn factor_count(&self) -> u64 {
        self.terms.iter().map(|(_, m)| u64::from(*m)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.iter().all(|(_, m)| *m == 0)
    }

    /// Same expression in another localization (not normalized).
    pub fn localized(&self, loc: Localization) -> Self {
        SpaceExpr {
            localization: loc,
            ..self.clone()
        }
    }

    /// Applies one rule to every atom it matches. `None` when the rule
    /// changes nothing.
    pub fn apply_rule(&self, rule: Rule) -> Option<SpaceExpr> {
        let loc = &self.localization;
        let away_from_c = self.c.is_some_and(|c| loc.inverts_all_divisors_of(c));
        let top = self.group.max_degree();
        let rewrite = |atom: &Atom| -> Option<Vec<Atom>> {
            match (rule, atom) {
                (Rule::MooreMapToFiber, Atom::MooreMap { n }) if *n >= 1 => {
                    Some(vec![Atom::LoopsFiber { loops: n - 1 }])
                }
                (Rule::ContractAwayFromC, Atom::MooreMap { .. } | Atom::LoopsFiber { .. })
                    if away_from_c =>
                {
                    Some(vec![])
                }
                (Rule::ContractAwayFromC, Atom::MooreGauge { loops, .. }) if away_from_c => {
                    Some(vec![Atom::Loops { loops: *loops }])
                }
                (Rule::SplitCP2AwayFrom2, Atom::LoopsMapCP2 { loops }) if loc.inverts(2) => {
                    Some(vec![
                        Atom::Loops { loops: loops + 2 },
                        Atom::Loops { loops: loops + 4 },
                    ])
                }
                (Rule::ZeroLoops, Atom::Loops { loops: 0 }) => Some(vec![Atom::Group]),
                (Rule::DropRationallyContractible, Atom::Loops { loops })
                    if loc.is_rational() && *loops >= top =>
                {
                    Some(vec![])
                }
                _ => None,
            }
        };
        if rule == Rule::Merge {
            let merged = merge(&self.terms);
            return (merged != self.terms).then(|| SpaceExpr {
                terms: merged,
                ..self.clone()
            });
        }
        let mut changed = false;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (atom, mult) in &self.terms {
            match rewrite(atom) {
                Some(replacement) => {
                    changed = true;
                    terms.extend(replacement.into_iter().map(|a| (a, *mult)));
                }
                None => terms.push((atom.clone(), *mult)),
            }
        }
        changed.then(|| SpaceExpr {
            terms,
            ..self.clone()
        })
    }

    /// Applies the rewrite rules until none changes the expression.
    pub fn normalize(&self) -> SpaceExpr {
        let mut e = self.clone();
        loop {
            let mut changed = false;
            for rule in Rule::ALL {
                if let Some(next) = e.apply_rule(rule) {
                    e = next;
                    changed = true;
                }
            }
            if !changed {
                return e;
            }
        }
    }

    pub fn is_normalized(&self) -> bool {
        Rule::ALL.iter().all(|&r| self.apply_rule(r).is_none())
    }

    /// Rank of `π_q ⊗ Q` of the product, `q >= 1`.
    pub fn rational_rank(&self, q: u32) -> u32 {
        let pi = |d: u32| self.group.pi_rank(d);
        self.terms
            .iter()
            .map(|(atom, mult)| {
                let r = match atom {
                    Atom::Group => pi(q),
                    Atom::Loops { loops } | Atom::MooreGauge { loops, .. } => pi(q + loops),
                    Atom::LoopsMapCP2 { loops } => pi(q + loops + 2) + pi(q + loops + 4),
                    Atom::LoopsFiber { .. } | Atom::MooreMap { .. } => 0,
                    Atom::Sphere { dim } => {
                        u32::from(q == *dim || (dim % 2 == 0 && q + 1 == 2 * dim))
                    }
                    Atom::EilenbergMacLane { dim } => u32::from(q == *dim),
                };
                r * mult
            })
            .sum()
    }

    /// One record per factor for line-oriented output.
    pub fn records(&self) -> Vec<Record> {
        self.terms
            .iter()
            .map(|(atom, mult)| Record {
                atom: atom.clone(),
                multiplicity: *mult,
            })
            .collect()
    }

    fn render_atom(&self, atom: &Atom) -> String {
        let c = self.c.map_or_else(|| "c".to_string(), |c| c.to_string());
        let omega = |j: u32| match j {
            0 => String::new(),
            1 => "Ω".to_string(),
            j => format!("Ω{}", sup(u64::from(j))),
        };
        match atom {
            Atom::Group => "G".to_string(),
            Atom::Loops { loops } => format!("{}G", omega(*loops)),
            Atom::LoopsFiber { loops } => format!("{}G{{{c}}}", omega(*loops)),
            Atom::MooreMap { n } => format!("{}(G;{c})", omega(*n)),
            Atom::MooreGauge { loops, k } => {
                format!("{}G{}(P⁴({c}))", omega(*loops), sub(*k))
            }
            Atom::LoopsMapCP2 { loops } => format!("{}Map*₀(CP²,G)", omega(*loops)),
            Atom::Sphere { dim } => format!("S{}", sup(u64::from(*dim))),
            Atom::EilenbergMacLane { dim } => format!("K(Q,{dim})"),
        }
    }
}

/// A machine-readable factor: atom kind, loop degree and label in `atom`,
/// plus the multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub atom: Atom,
    pub multiplicity: u32,
}

fn merge(terms: &[(Atom, u32)]) -> Vec<(Atom, u32)> {
    let mut out: Vec<(Atom, u32)> = Vec::with_capacity(terms.len());
    for (atom, mult) in terms {
        if let Some(slot) = out.iter_mut().find(|(a, _)| a == atom) {
            slot.1 += mult;
        } else {
            out.push((atom.clone(), *mult));
        }
    }
    out.retain(|(_, m)| *m > 0);
    out
}

impl PartialEq for SpaceExpr {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
            && self.c == other.c
            && self.localization == other.localization
            && self.canonical_terms() == other.canonical_terms()
    }
}

impl Eq for SpaceExpr {}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(atom, mult)| {
                let s = self.render_atom(atom);
                if *mult == 1 {
                    s
                } else {
                    format!("({s}){}", sup(u64::from(*mult)))
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("*")
        } else {
            f.write_str(&parts.join(" × "))
        }
    }
}

fn require_pi4(g: &LieGroup, loc: &Localization) -> Result<()> {
    if g.pi4_is_trivial(loc) {
        Ok(())
    } else {
        Err(Error::Pi4Nontrivial(g.to_string(), loc.to_string()))
    }
}

/// Checks the hypotheses of the double-loop decomposition.
pub fn check_loops2(m: &ManifoldSpec, g: &LieGroup, loc: &Localization) -> Result<()> {
    m.validate()?;
    g.validate()?;
    m.require_6_coprime()?;
    require_pi4(g, loc)?;
    if !m.spin && m.m < 2 {
        return Err(hypothesis("m≥2"));
    }
    Ok(())
}

/// Checks the hypotheses of the triple-loop decomposition.
pub fn check_loops3(m: &ManifoldSpec, g: &LieGroup, loc: &Localization) -> Result<()> {
    m.validate()?;
    g.validate()?;
    m.require_odd_c()?;
    m.require_framed()?;
    require_pi4(g, loc)
}

/// `Ω²G_k(M)` for `6 ∤ c`, integrally.
pub fn loops2_gauge(m: &ManifoldSpec, g: &LieGroup, k: u64) -> Result<SpaceExpr> {
    loops2_gauge_in(m, g, k, &Localization::Integral)
}

/// `Ω²G_k(M)` for `6 ∤ c` in the localization `loc`.
///
/// Spin: `Ω²G_k(P⁴(c)) × Ω³G{c} × Ω⁷G × (Ω⁴G × Ω⁵G)^{m-1}`.
/// Non-spin: `Ω²G_k(P⁴(c)) × Ω³Map*₀(CP²,G) × Ω³G{c} × (Ω⁴G)^{m-1} ×
/// (Ω⁵G)^{m-2}`.
pub fn loops2_gauge_in(
    m: &ManifoldSpec,
    g: &LieGroup,
    k: u64,
    loc: &Localization,
) -> Result<SpaceExpr> {
    check_loops2(m, g, loc)?;
    let mut e = SpaceExpr::new(GroupInfo::of_lie(g)?, Some(m.c), loc.clone());
    e.push(
        Atom::MooreGauge {
            loops: 2,
            k: k % m.c,
        },
        1,
    );
    if m.spin {
        e.push(Atom::MooreMap { n: 4 }, 1);
        e.push(Atom::Loops { loops: 7 }, 1);
        e.push(Atom::Loops { loops: 4 }, m.m - 1);
        e.push(Atom::Loops { loops: 5 }, m.m - 1);
    } else {
        e.push(Atom::LoopsMapCP2 { loops: 3 }, 1);
        e.push(Atom::MooreMap { n: 4 }, 1);
        e.push(Atom::Loops { loops: 4 }, m.m - 1);
        e.push(Atom::Loops { loops: 5 }, m.m - 2);
    }
    Ok(e.normalize())
}

/// `Ω³G_k(M)` for odd `c` and `M` stably parallelizable with one top cell,
/// integrally.
pub fn loops3_gauge(m: &ManifoldSpec, g: &LieGroup, k: u64) -> Result<SpaceExpr> {
    loops3_gauge_in(m, g, k, &Localization::Integral)
}

/// `Ω³G_k(P⁴(c)) × Ω⁴G{c} × Ω⁸G × (Ω⁵G × Ω⁶G)^{m-1}` in `loc`.
pub fn loops3_gauge_in(
    m: &ManifoldSpec,
    g: &LieGroup,
    k: u64,
    loc: &Localization,
) -> Result<SpaceExpr> {
    check_loops3(m, g, loc)?;
    let mut e = SpaceExpr::new(GroupInfo::of_lie(g)?, Some(m.c), loc.clone());
    e.push(
        Atom::MooreGauge {
            loops: 3,
            k: k % m.c,
        },
        1,
    );
    e.push(Atom::MooreMap { n: 5 }, 1);
    e.push(Atom::Loops { loops: 8 }, 1);
    e.push(Atom::Loops { loops: 5 }, m.m - 1);
    e.push(Atom::Loops { loops: 6 }, m.m - 1);
    Ok(e.normalize())
}

/// `G_k(M)` localized away from `c` (every `k` gives the same answer).
pub fn gauge_away_from_c(m: &ManifoldSpec, g: &LieGroup) -> Result<SpaceExpr> {
    m.validate()?;
    gauge_away_from(m, g, &Localization::away_from_divisors(m.c)?)
}

/// `G_k(M)` in a localization `loc` that inverts every prime of `c`.
///
/// Spin: `G × Ω⁵G × (Ω²G × Ω³G)^{m-1}`. Non-spin:
/// `G × ΩMap*₀(CP²,G) × (Ω²G)^{m-1} × (Ω³G)^{m-2}`.
pub fn gauge_away_from(m: &ManifoldSpec, g: &LieGroup, loc: &Localization) -> Result<SpaceExpr> {
    m.validate()?;
    g.validate()?;
    if !loc.inverts_all_divisors_of(m.c) {
        return Err(hypothesis("localized away from c"));
    }
    require_pi4(g, loc)?;
    let mut e = SpaceExpr::new(GroupInfo::of_lie(g)?, Some(m.c), loc.clone());
    e.push(Atom::Group, 1);
    if m.spin {
        e.push(Atom::Loops { loops: 5 }, 1);
        e.push(Atom::Loops { loops: 2 }, m.m - 1);
        e.push(Atom::Loops { loops: 3 }, m.m - 1);
    } else {
        if m.m < 2 {
            return Err(hypothesis("m≥2"));
        }
        e.push(Atom::LoopsMapCP2 { loops: 1 }, 1);
        e.push(Atom::Loops { loops: 2 }, m.m - 1);
        e.push(Atom::Loops { loops: 3 }, m.m - 2);
    }
    Ok(e.normalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spin(c: u64, m: u32) -> ManifoldSpec {
        ManifoldSpec::new(c, m).spin(true)
    }

    #[test]
    fn loops2_spin() {
        let e = loops2_gauge(&spin(5, 2), &LieGroup::SU(4), 1).unwrap();
        assert_eq!(e.to_string(), "Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁷G × Ω⁴G × Ω⁵G");
        assert!(e.is_normalized());
    }

    #[test]
    fn loops2_rejects() {
        let m = spin(6, 2);
        assert_eq!(
            loops2_gauge(&m, &LieGroup::SU(4), 0),
            Err(Error::Hypothesis("6∤c".into()))
        );
        let m = ManifoldSpec::new(5, 1);
        assert_eq!(
            loops2_gauge(&m, &LieGroup::SU(4), 0),
            Err(Error::Hypothesis("m≥2".into()))
        );
        assert!(matches!(
            loops2_gauge(&spin(5, 2), &LieGroup::Sp(2), 0),
            Err(Error::Pi4Nontrivial(..))
        ));
        let away2 = Localization::away_from([2]).unwrap();
        assert!(loops2_gauge_in(&spin(5, 2), &LieGroup::Sp(2), 0, &away2).is_ok());
    }

    #[test]
    fn loops3() {
        let m = ManifoldSpec::new(9, 2)
            .stably_parallelizable(true)
            .single_top_cell(true);
        let e = loops3_gauge(&m, &LieGroup::SU(5), 2).unwrap();
        assert_eq!(e.to_string(), "Ω³G₂(P⁴(9)) × Ω⁴G{9} × Ω⁸G × Ω⁵G × Ω⁶G");
        let m1 = ManifoldSpec { m: 1, ..m };
        let e = loops3_gauge(&m1, &LieGroup::SU(5), 0).unwrap();
        assert_eq!(e.to_string(), "Ω³G₀(P⁴(9)) × Ω⁴G{9} × Ω⁸G");
        let even = ManifoldSpec { c: 10, ..m };
        assert_eq!(
            loops3_gauge(&even, &LieGroup::SU(5), 0),
            Err(Error::Hypothesis("2∤c".into()))
        );
        let unframed = ManifoldSpec::new(9, 2);
        assert_eq!(
            loops3_gauge(&unframed, &LieGroup::SU(5), 0),
            Err(Error::Hypothesis("stably parallelizable".into()))
        );
    }

    #[test]
    fn away_from_c() {
        let e = gauge_away_from_c(&spin(4, 2), &LieGroup::SU(5)).unwrap();
        assert_eq!(e.to_string(), "G × Ω⁵G × Ω²G × Ω³G");
        let e = gauge_away_from_c(&ManifoldSpec::new(3, 2), &LieGroup::Spin(12)).unwrap();
        assert_eq!(e.to_string(), "G × ΩMap*₀(CP²,G) × Ω²G");
        let e = gauge_away_from_c(&spin(2, 1), &LieGroup::G2).unwrap();
        assert_eq!(e.to_string(), "G × Ω⁵G");
        assert!(gauge_away_from_c(&ManifoldSpec::new(3, 1), &LieGroup::G2).is_err());
    }

    #[test]
    fn rewrite_rules() {
        let g = GroupInfo::of_lie(&LieGroup::SU(4)).unwrap();
        let e = SpaceExpr::new(g.clone(), Some(5), Localization::Integral)
            .with(Atom::MooreMap { n: 4 }, 1)
            .normalize();
        assert_eq!(e.terms(), &[(Atom::LoopsFiber { loops: 3 }, 1)]);

        let away5 = Localization::away_from([5]).unwrap();
        let e = SpaceExpr::new(g.clone(), Some(5), away5)
            .with(Atom::LoopsFiber { loops: 0 }, 1)
            .normalize();
        assert!(e.is_empty());

        let away10 = Localization::away_from([2, 5]).unwrap();
        let e = SpaceExpr::new(g, Some(5), away10)
            .with(Atom::LoopsMapCP2 { loops: 1 }, 1)
            .normalize();
        assert_eq!(e.to_string(), "Ω³G × Ω⁵G");
    }

    #[test]
    fn rational_ranks() {
        let e = loops2_gauge(&spin(5, 2), &LieGroup::SU(4), 1).unwrap();
        // π_3, π_5 of SU(4) from Ω²G_k(P⁴(5)) and Ω⁴G; π_6, π_8 vanish.
        assert_eq!(e.rational_rank(1), 2);
        let g = SpaceExpr::new(
            GroupInfo::of_lie(&LieGroup::G2).unwrap(),
            None,
            Localization::Rational,
        )
        .with(Atom::Group, 1);
        assert_eq!(g.rational_rank(11), 1);
        assert_eq!(g.rational_rank(3), 1);
        assert_eq!(g.rational_rank(5), 0);
        let empty = SpaceExpr::new(GroupInfo::new("G", vec![3]), None, Localization::Rational);
        assert_eq!(empty.rational_rank(3), 0);
    }

    #[test]
    fn machine_round_trip() {
        let e = loops2_gauge(&ManifoldSpec::new(5, 3), &LieGroup::E8, 0).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        let back: SpaceExpr = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_string(), e.to_string());
    }
}
