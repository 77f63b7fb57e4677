//! Rational homotopy of gauge groups over an arbitrary finite-type base.
//!
//! For a rationally simply connected `X` with Betti numbers `b_i` and a
//! group `G` whose rational cohomology is free on generators of degrees
//! `d_j`, the gauge group is rationally `∏_i (Ω^i G)^{b_i}` (with
//! `Ω⁰G = G`; the based gauge group starts at `i = 1`), and the classifying
//! space of based connections `B*` is `∏_{i≥1} (Ω^{i-1} G)^{b_i}`.
//!
//! Rationally `Ω^i` of a generator of degree `d` is a factor of degree
//! `t = d - i`: an odd sphere `S^t` when `t` is odd and `K(Q, t)` when `t`
//! is even. Convention: spheres of dimension `≤ 1` and `K(Q, t)` with
//! `t ≤ 0` are dropped from sphere/Eilenberg-MacLane expansions, since they
//! are rationally trivial in the simply connected setting used here. Loop
//! factors `Ω^i G` with `i` at least the top generator degree are dropped
//! from decompositions for the same reason. Cohomology generator ledgers
//! keep every positive degree.
//!
//! ```
//! use gauge5::rational::{rational_gauge, HilbertSeries, RationalGroupModel};
//!
//! let s4 = HilbertSeries::new(vec![1, 0, 0, 0, 1]).unwrap();
//! let s3 = RationalGroupModel::new(vec![3], vec![]).unwrap();
//! // G × Ω⁴G, and Ω⁴S³ is rationally trivial
//! assert_eq!(rational_gauge(&s4, &s3, false).unwrap().to_string(), "G");
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::decomposition::{Atom, GroupInfo, SpaceExpr};
use crate::error::{Error, Result};
use crate::lie::LieGroup;
use crate::localization::Localization;

/// Rational Betti numbers `b_0, ..., b_N` of a connected, rationally simply
/// connected space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct HilbertSeries {
    b: Vec<u32>,
}

impl HilbertSeries {
    pub fn new(mut b: Vec<u32>) -> Result<Self> {
        if b.first() != Some(&1) {
            return Err(Error::InvalidInput(
                "b_0 must be 1 (connected space)".into(),
            ));
        }
        match b.get(1) {
            Some(&b1) if b1 != 0 => return Err(Error::NotSimplyConnected(b1)),
            _ => {}
        }
        while b.len() > 1 && b.last() == Some(&0) {
            b.pop();
        }
        Ok(HilbertSeries { b })
    }

    /// The point.
    pub fn point() -> Self {
        HilbertSeries { b: vec![1] }
    }

    /// Betti numbers of the 5-manifolds in this crate: `(1,0,m-1,m-1,0,1)`.
    pub fn of_manifold(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("m must be at least 1".into()));
        }
        Self::new(vec![1, 0, m - 1, m - 1, 0, 1])
    }

    pub fn betti(&self, i: usize) -> u32 {
        self.b.get(i).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.b
    }

    /// Top degree with a nonzero Betti number.
    pub fn top_degree(&self) -> usize {
        self.b.len() - 1
    }

    /// Parses TOML `betti = [1, 0, 1]` or a bare comma list `1,0,1`.
    pub fn from_config(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Config {
            betti: Vec<u32>,
        }
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(cfg.betti)
    }
}

impl FromStr for HilbertSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains('=') {
            return Self::from_config(s);
        }
        let b = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("Betti number '{t}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(b)
    }
}

impl TryFrom<Vec<u32>> for HilbertSeries {
    type Error = Error;

    fn try_from(b: Vec<u32>) -> Result<Self> {
        Self::new(b)
    }
}

impl From<HilbertSeries> for Vec<u32> {
    fn from(h: HilbertSeries) -> Vec<u32> {
        h.b
    }
}

/// `H^*(G; Q) = Λ(exterior generators) ⊗ Q[polynomial generators]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalGroupModel {
    exterior: Vec<u32>,
    polynomial: Vec<u32>,
}

impl RationalGroupModel {
    pub fn new(mut exterior: Vec<u32>, mut polynomial: Vec<u32>) -> Result<Self> {
        if let Some(d) = exterior.iter().find(|&&d| d < 3 || d % 2 == 0) {
            return Err(Error::InvalidInput(format!(
                "exterior generator degree {d} must be odd and at least 3"
            )));
        }
        if let Some(d) = polynomial.iter().find(|&&d| d < 2 || d % 2 == 1) {
            return Err(Error::InvalidInput(format!(
                "polynomial generator degree {d} must be even and at least 2"
            )));
        }
        exterior.sort_unstable();
        polynomial.sort_unstable();
        Ok(RationalGroupModel {
            exterior,
            polynomial,
        })
    }

    pub fn of_lie(g: &LieGroup) -> Result<Self> {
        Self::new(g.rational_degrees()?, Vec::new())
    }

    /// Parses TOML with `exterior = [...]` and optional `polynomial = [...]`.
    pub fn from_config(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Config {
            exterior: Vec<u32>,
            #[serde(default)]
            polynomial: Vec<u32>,
        }
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(cfg.exterior, cfg.polynomial)
    }

    pub fn exterior(&self) -> &[u32] {
        &self.exterior
    }

    pub fn polynomial(&self) -> &[u32] {
        &self.polynomial
    }

    pub fn is_exterior_only(&self) -> bool {
        self.polynomial.is_empty()
    }

    /// All generator degrees, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .exterior
            .iter()
            .chain(&self.polynomial)
            .copied()
            .collect();
        d.sort_unstable();
        d
    }

    /// Rank of `π_d(G) ⊗ Q`: the number of generators of degree `d`.
    pub fn pi_rank(&self, d: u32) -> u32 {
        self.degrees().iter().filter(|&&x| x == d).count() as u32
    }

    pub fn group_info(&self) -> GroupInfo {
        GroupInfo::new("G", self.degrees())
    }
}

fn require_simply_connected(x: &HilbertSeries) -> Result<()> {
    match x.betti(1) {
        0 => Ok(()),
        b1 => Err(Error::NotSimplyConnected(b1)),
    }
}

fn loops_atom(i: u32) -> Atom {
    if i == 0 {
        Atom::Group
    } else {
        Atom::Loops { loops: i }
    }
}

/// `∏_{i} (Ω^i G)^{b_i}`, starting at `i = 1` when `based`.
pub fn rational_gauge(x: &HilbertSeries, g: &RationalGroupModel, based: bool) -> Result<SpaceExpr> {
    require_simply_connected(x)?;
    let mut e = SpaceExpr::new(g.group_info(), None, Localization::Rational);
    let start = usize::from(based);
    for i in start..=x.top_degree() {
        e.push(loops_atom(i as u32), x.betti(i));
    }
    Ok(e.normalize())
}

/// `B* ≃_Q ∏_{i≥1} (Ω^{i-1} G)^{b_i}`; needs `G` with finite-dimensional
/// rational homology.
pub fn rational_b_star(x: &HilbertSeries, g: &RationalGroupModel) -> Result<SpaceExpr> {
    require_simply_connected(x)?;
    if !g.is_exterior_only() {
        return Err(Error::InvalidInput(
            "B* needs a group with finite-dimensional rational homology (no polynomial generators)"
                .into(),
        ));
    }
    let mut e = SpaceExpr::new(g.group_info(), None, Localization::Rational);
    for i in 1..=x.top_degree() {
        e.push(loops_atom(i as u32 - 1), x.betti(i));
    }
    Ok(e.normalize())
}

/// The factor `Ω^i` of a generator of degree `d` becomes, or `None` when
/// dropped.
fn shifted_factor(d: u32, i: u32) -> Option<Atom> {
    let t = i64::from(d) - i64::from(i);
    if t % 2 != 0 {
        (t >= 3).then_some(Atom::Sphere { dim: t as u32 })
    } else {
        (t >= 2).then_some(Atom::EilenbergMacLane { dim: t as u32 })
    }
}

/// Replaces each `Ω^i G` factor of `e` with the spheres and
/// Eilenberg-MacLane spaces it is rationally equivalent to.
pub fn loops_to_em(e: &SpaceExpr) -> Result<SpaceExpr> {
    let mut out = SpaceExpr::new(e.group.clone(), e.c, Localization::Rational);
    for (atom, mult) in e.terms() {
        let i = match atom {
            Atom::Group => 0,
            Atom::Loops { loops } => *loops,
            Atom::Sphere { .. } | Atom::EilenbergMacLane { .. } => {
                out.push(atom.clone(), *mult);
                continue;
            }
            other => {
                return Err(Error::Unsupported(format!(
                    "no rational sphere expansion for {other:?}"
                )))
            }
        };
        for &d in &e.group.degrees {
            if let Some(a) = shifted_factor(d, i) {
                out.push(a, *mult);
            }
        }
    }
    Ok(out.normalize())
}

/// The gauge group as a product of odd spheres and `K(Q, n)`s: for an
/// exterior generator of degree `2n+1`, `b_{2k}` copies of `S^{2n-2k+1}` and
/// `b_{2k+1}` copies of `K(Q, 2n-2k)`; for a polynomial generator of degree
/// `2m`, `b_{2k}` copies of `K(Q, 2m-2k)` and `b_{2k+1}` copies of
/// `S^{2m-2k-1}`.
pub fn em_expansion(x: &HilbertSeries, g: &RationalGroupModel, based: bool) -> Result<SpaceExpr> {
    require_simply_connected(x)?;
    let mut e = SpaceExpr::new(g.group_info(), None, Localization::Rational);
    let top = x.top_degree() as u32;
    let start = u32::from(based);
    let keep_sphere = |dim: i64| (dim >= 3).then_some(Atom::Sphere { dim: dim as u32 });
    let keep_em = |dim: i64| (dim >= 2).then_some(Atom::EilenbergMacLane { dim: dim as u32 });
    for &d in g.exterior() {
        let n = i64::from(d - 1) / 2;
        for k in 0..=top / 2 {
            let kk = i64::from(k);
            if 2 * k >= start {
                if let Some(a) = keep_sphere(2 * n - 2 * kk + 1) {
                    e.push(a, x.betti(2 * k as usize));
                }
            }
            if let Some(a) = keep_em(2 * n - 2 * kk) {
                e.push(a, x.betti(2 * k as usize + 1));
            }
        }
    }
    for &d in g.polynomial() {
        let m = i64::from(d) / 2;
        for k in 0..=top / 2 {
            let kk = i64::from(k);
            if 2 * k >= start {
                if let Some(a) = keep_em(2 * m - 2 * kk) {
                    e.push(a, x.betti(2 * k as usize));
                }
            }
            if let Some(a) = keep_sphere(2 * m - 2 * kk - 1) {
                e.push(a, x.betti(2 * k as usize + 1));
            }
        }
    }
    Ok(e.normalize())
}

/// `rank π_q(G_α(X)) ⊗ Q = Σ_r b_r · rank π_{r+q}(G) ⊗ Q`, with the sum
/// starting at `r = 1` for the based gauge group.
pub fn rational_rank_formula(
    x: &HilbertSeries,
    g: &RationalGroupModel,
    q: u32,
    based: bool,
) -> u32 {
    let start = usize::from(based);
    (start..=x.top_degree())
        .map(|r| x.betti(r) * g.pi_rank(r as u32 + q))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Exterior,
    Polynomial,
}

/// Generators of a free graded-commutative algebra, as sorted
/// `(degree, kind)` pairs with repetition.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GeneratorLedger {
    pub generators: Vec<(u32, GeneratorKind)>,
}

impl GeneratorLedger {
    fn from_unsorted(mut generators: Vec<(u32, GeneratorKind)>) -> Self {
        generators.sort_unstable();
        GeneratorLedger { generators }
    }

    pub fn count_in_degree(&self, d: u32) -> u32 {
        self.generators.iter().filter(|(x, _)| *x == d).count() as u32
    }
}

impl fmt::Display for GeneratorLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ext: Vec<String> = self
            .generators
            .iter()
            .filter(|(_, k)| *k == GeneratorKind::Exterior)
            .map(|(d, _)| format!("x{d}"))
            .collect();
        let poly: Vec<String> = self
            .generators
            .iter()
            .filter(|(_, k)| *k == GeneratorKind::Polynomial)
            .map(|(d, _)| format!("y{d}"))
            .collect();
        match (ext.is_empty(), poly.is_empty()) {
            (true, true) => f.write_str("Q"),
            (false, true) => write!(f, "Λ({})", ext.join(", ")),
            (true, false) => write!(f, "Q[{}]", poly.join(", ")),
            (false, false) => write!(f, "Λ({}) ⊗ Q[{}]", ext.join(", "), poly.join(", ")),
        }
    }
}

/// Which space's cohomology to describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CohomologyTarget {
    Gauge,
    BStar,
}

impl FromStr for CohomologyTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gauge" => Ok(CohomologyTarget::Gauge),
            "b_star" | "bstar" => Ok(CohomologyTarget::BStar),
            other => Err(Error::InvalidInput(format!(
                "cohomology target must be gauge or b_star, got {other}"
            ))),
        }
    }
}

/// Generators of `H^*(-; Q)` for the gauge group or `B*`.
///
/// Gauge group: each generator of degree `d` of `G` gives `b_i` generators
/// of degree `d - i`. `B*`: `b_i` generators of degree `d - i + 1` for
/// `i >= 1`. Odd degrees are exterior, even polynomial; degrees `≤ 0` are
/// dropped.
pub fn rational_cohomology_ring(
    target: CohomologyTarget,
    x: &HilbertSeries,
    g: &RationalGroupModel,
) -> Result<GeneratorLedger> {
    require_simply_connected(x)?;
    let (start, lift) = match target {
        CohomologyTarget::Gauge => (0, 0),
        CohomologyTarget::BStar => {
            if !g.is_exterior_only() {
                return Err(Error::InvalidInput(
                    "B* needs a group with no polynomial generators".into(),
                ));
            }
            (1, 1)
        }
    };
    let mut gens = Vec::new();
    for d in g.degrees() {
        for i in start..=x.top_degree() {
            let deg = i64::from(d) - i as i64 + lift;
            if deg <= 0 {
                continue;
            }
            let kind = if deg % 2 == 1 {
                GeneratorKind::Exterior
            } else {
                GeneratorKind::Polynomial
            };
            gens.extend(std::iter::repeat_n((deg as u32, kind), x.betti(i) as usize));
        }
    }
    Ok(GeneratorLedger::from_unsorted(gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(b: &[u32]) -> HilbertSeries {
        HilbertSeries::new(b.to_vec()).unwrap()
    }

    fn s3() -> RationalGroupModel {
        RationalGroupModel::new(vec![3], vec![]).unwrap()
    }

    #[test]
    fn gauge_decompositions() {
        let su4 = RationalGroupModel::of_lie(&LieGroup::SU(4)).unwrap();
        let s4 = series(&[1, 0, 0, 0, 1]);
        assert_eq!(
            rational_gauge(&s4, &su4, false).unwrap().to_string(),
            "G × Ω⁴G"
        );
        assert_eq!(
            rational_gauge(&HilbertSeries::point(), &su4, false)
                .unwrap()
                .to_string(),
            "G"
        );
        let m = HilbertSeries::of_manifold(3).unwrap();
        assert_eq!(
            rational_gauge(&m, &su4, false).unwrap().to_string(),
            "G × (Ω²G)² × (Ω³G)² × Ω⁵G"
        );
        assert_eq!(
            HilbertSeries::new(vec![1, 2]),
            Err(Error::NotSimplyConnected(2))
        );
    }

    #[test]
    fn b_star() {
        let su4 = RationalGroupModel::of_lie(&LieGroup::SU(4)).unwrap();
        let s4 = series(&[1, 0, 0, 0, 1]);
        assert_eq!(rational_b_star(&s4, &su4).unwrap().to_string(), "Ω³G");
        let wedge = series(&[1, 0, 1, 1]);
        assert_eq!(
            rational_b_star(&wedge, &su4).unwrap().to_string(),
            "ΩG × Ω²G"
        );
        let poly = RationalGroupModel::new(vec![3], vec![4]).unwrap();
        assert!(rational_b_star(&s4, &poly).is_err());
    }

    #[test]
    fn em_examples() {
        let s2 = series(&[1, 0, 1]);
        assert_eq!(em_expansion(&s2, &s3(), false).unwrap().to_string(), "S³");
        assert!(em_expansion(&s2, &s3(), true).unwrap().is_empty());
        let s4 = series(&[1, 0, 0, 0, 1]);
        assert_eq!(em_expansion(&s4, &s3(), false).unwrap().to_string(), "S³");
        let g = RationalGroupModel::new(vec![3, 5], vec![]).unwrap();
        let pt = HilbertSeries::point();
        assert_eq!(em_expansion(&pt, &g, false).unwrap().to_string(), "S³ × S⁵");
        assert!(em_expansion(&pt, &g, true).unwrap().is_empty());
    }

    #[test]
    fn rank_formula() {
        let su4 = RationalGroupModel::of_lie(&LieGroup::SU(4)).unwrap();
        let s4 = series(&[1, 0, 0, 0, 1]);
        assert_eq!(rational_rank_formula(&s4, &su4, 3, false), 2);
        assert_eq!(rational_rank_formula(&s4, &su4, 40, false), 0);
        let m = HilbertSeries::of_manifold(4).unwrap();
        assert_eq!(rational_rank_formula(&m, &s3(), 3, false), 1);
    }

    #[test]
    fn cohomology() {
        let s4 = series(&[1, 0, 0, 0, 1]);
        let gauge = rational_cohomology_ring(CohomologyTarget::Gauge, &s4, &s3()).unwrap();
        assert_eq!(gauge.generators, vec![(3, GeneratorKind::Exterior)]);
        assert_eq!(gauge.to_string(), "Λ(x3)");
        // Ω³S³ has rationally trivial identity component.
        let bstar = rational_cohomology_ring(CohomologyTarget::BStar, &s4, &s3()).unwrap();
        assert!(bstar.generators.is_empty());
        let pt = HilbertSeries::point();
        let su3 = RationalGroupModel::of_lie(&LieGroup::SU(3)).unwrap();
        let own = rational_cohomology_ring(CohomologyTarget::Gauge, &pt, &su3).unwrap();
        assert_eq!(own.to_string(), "Λ(x3, x5)");
    }

    #[test]
    fn configs() {
        let h: HilbertSeries = "betti = [1, 0, 2, 2, 0, 1]".parse().unwrap();
        assert_eq!(h, HilbertSeries::of_manifold(3).unwrap());
        let h: HilbertSeries = "1,0,0,0,1,0,0".parse().unwrap();
        assert_eq!(h.top_degree(), 4);
        let g = RationalGroupModel::from_config("exterior = [5, 3]\npolynomial = [4]").unwrap();
        assert_eq!(g.degrees(), vec![3, 4, 5]);
        assert!(RationalGroupModel::new(vec![4], vec![]).is_err());
        assert!(RationalGroupModel::new(vec![], vec![3]).is_err());
    }
}
