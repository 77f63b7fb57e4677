//! The 5-manifold data model: homology, bundle classes, low-dimensional
//! homotopy of Moore spaces and suspension splittings.
//!
//! `P^n(c)` denotes the Moore space `S^{n-1} ∪_c e^n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian::FGAbelianGroup;
use crate::arith::gcd;
use crate::error::{hypothesis, Error, Result};
use crate::lie::LieGroup;
use crate::localization::Localization;
use crate::render::sup;

/// An orientable closed 5-manifold `M` with `π_1(M) = Z/c` and
/// `H_2(M; Z)` free of rank `m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ManifoldSpec {
    pub c: u64,
    pub m: u32,
    #[serde(default)]
    pub spin: bool,
    #[serde(default)]
    pub stably_parallelizable: bool,
    #[serde(default)]
    pub single_top_cell: bool,
}

impl ManifoldSpec {
    /// A non-spin manifold with the given `c` and `m`; the flags are set
    /// with the builder methods.
    pub fn new(c: u64, m: u32) -> Self {
        ManifoldSpec {
            c,
            m,
            spin: false,
            stably_parallelizable: false,
            single_top_cell: false,
        }
    }

    pub fn spin(mut self, spin: bool) -> Self {
        self.spin = spin;
        self
    }

    pub fn stably_parallelizable(mut self, sp: bool) -> Self {
        self.stably_parallelizable = sp;
        self
    }

    pub fn single_top_cell(mut self, stc: bool) -> Self {
        self.single_top_cell = stc;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.c < 2 {
            return Err(Error::InvalidInput(format!(
                "c must be at least 2, got {}",
                self.c
            )));
        }
        if self.m < 1 {
            return Err(Error::InvalidInput("m must be at least 1".into()));
        }
        Ok(())
    }

    /// Parses the `key = value` config form, e.g.
    ///
    /// ```
    /// # use gauge5::ManifoldSpec;
    /// let m = ManifoldSpec::from_config("c = 9\nm = 2\nspin = true").unwrap();
    /// assert_eq!(m, ManifoldSpec::new(9, 2).spin(true));
    /// ```
    pub fn from_config(text: &str) -> Result<Self> {
        let spec: ManifoldSpec = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    /// Rational Betti numbers `b_0, ..., b_5`.
    pub fn betti(&self) -> [u32; 6] {
        let r = self.m - 1;
        [1, 0, r, r, 0, 1]
    }

    pub(crate) fn require_odd_c(&self) -> Result<()> {
        if self.c.is_multiple_of(2) {
            return Err(hypothesis("2∤c"));
        }
        Ok(())
    }

    pub(crate) fn require_6_coprime(&self) -> Result<()> {
        if self.c.is_multiple_of(6) {
            return Err(hypothesis("6∤c"));
        }
        Ok(())
    }

    pub(crate) fn require_framed(&self) -> Result<()> {
        if !self.stably_parallelizable {
            return Err(hypothesis("stably parallelizable"));
        }
        if !self.single_top_cell {
            return Err(hypothesis("single top cell"));
        }
        Ok(())
    }
}

impl FromStr for ManifoldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_config(s)
    }
}

/// `H_0(M), ..., H_5(M)`.
pub fn homology(m: &ManifoldSpec) -> Result<Vec<FGAbelianGroup>> {
    m.validate()?;
    let zc = FGAbelianGroup::cyclic(m.c)?;
    let free = FGAbelianGroup::free(m.m - 1);
    Ok(vec![
        FGAbelianGroup::free(1),
        zc.clone(),
        free.clone(),
        free.direct_sum(&zc),
        FGAbelianGroup::trivial(),
        FGAbelianGroup::free(1),
    ])
}

/// Reduced homology of `M` as a degree-indexed map (zero groups omitted).
pub fn reduced_homology(m: &ManifoldSpec) -> Result<BTreeMap<u32, FGAbelianGroup>> {
    Ok(homology(m)?
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|(_, g)| !g.is_trivial())
        .map(|(i, g)| (i as u32, g))
        .collect())
}

/// `[M, BG] ≅ Z/c`, valid when `π_4(G)` vanishes in `loc`.
pub fn bundle_classes(
    m: &ManifoldSpec,
    g: &LieGroup,
    loc: &Localization,
) -> Result<FGAbelianGroup> {
    m.validate()?;
    g.validate()?;
    if !g.pi4_is_trivial(loc) {
        return Err(Error::Pi4Nontrivial(g.to_string(), loc.to_string()));
    }
    FGAbelianGroup::cyclic(m.c)
}

fn require_odd(c: u64) -> Result<()> {
    if c < 3 || c.is_multiple_of(2) {
        return Err(hypothesis("2∤c"));
    }
    Ok(())
}

/// `π_n(P^n(c))` for odd `c`: `Z/c` when `n = 3`, zero for `n >= 4`.
pub fn pi_moore_self(n: u32, c: u64) -> Result<FGAbelianGroup> {
    require_odd(c)?;
    match n {
        3 => FGAbelianGroup::cyclic(c),
        n if n >= 4 => Ok(FGAbelianGroup::trivial()),
        _ => Err(Error::InvalidInput(format!(
            "pi_moore_self needs n >= 3, got {n}"
        ))),
    }
}

/// `π_6(P^4(c)) ≅ Z/c ⊕ Z/(3,c)` for odd `c`.
pub fn pi6_p4(c: u64) -> Result<FGAbelianGroup> {
    require_odd(c)?;
    FGAbelianGroup::from_cyclic_orders(&[c, gcd(3, c)])
}

/// `π_7(P^5(c)) ≅ Z/c ⊕ Z/(3,c)` for odd `c`.
pub fn pi7_p5(c: u64) -> Result<FGAbelianGroup> {
    pi6_p4(c)
}

/// Order of the image of `Σ: π_6(P^4(c)) → π_7(P^5(c))`, which is
/// `Z/(3,c)`.
pub fn suspension_image_order(c: u64) -> Result<u64> {
    require_odd(c)?;
    Ok(gcd(3, c))
}

/// Homotopy groups with `Z/c` coefficients that enter the splitting
/// arguments: `π_4(S^3; Z/c)`, `π_5(S^4; Z/c)`, `π_4(P^3(c); Z/c)`,
/// `π_5(P^4(c); Z/c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientTarget {
    S3At4,
    S4At5,
    P3At4,
    P4At5,
}

impl FromStr for CoefficientTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "S3@4" => CoefficientTarget::S3At4,
            "S4@5" => CoefficientTarget::S4At5,
            "P3@4" => CoefficientTarget::P3At4,
            "P4@5" => CoefficientTarget::P4At5,
            other => return Err(Error::Unsupported(other.to_string())),
        })
    }
}

pub fn pi_with_coefficients(target: CoefficientTarget, c: u64) -> Result<FGAbelianGroup> {
    require_odd(c)?;
    match target {
        CoefficientTarget::P3At4 => FGAbelianGroup::cyclic(c),
        _ => Ok(FGAbelianGroup::trivial()),
    }
}

/// A wedge summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WedgeAtom {
    Sphere(u32),
    /// `P^n(c)`.
    Moore {
        n: u32,
        c: u64,
    },
    /// A summand with no known description beyond its reduced homology.
    Opaque {
        tag: String,
        homology: Vec<(u32, FGAbelianGroup)>,
    },
}

impl WedgeAtom {
    fn reduced_homology(&self) -> Result<Vec<(u32, FGAbelianGroup)>> {
        Ok(match self {
            WedgeAtom::Sphere(n) => vec![(*n, FGAbelianGroup::free(1))],
            WedgeAtom::Moore { n, c } => vec![(n - 1, FGAbelianGroup::cyclic(*c)?)],
            WedgeAtom::Opaque { homology, .. } => homology.clone(),
        })
    }
}

impl fmt::Display for WedgeAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WedgeAtom::Sphere(n) => write!(f, "S{}", sup(u64::from(*n))),
            WedgeAtom::Moore { n, c } => write!(f, "P{}({c})", sup(u64::from(*n))),
            WedgeAtom::Opaque { tag, .. } => write!(f, "{tag}"),
        }
    }
}

/// A finite wedge. Summands print in the order they were added; equality
/// ignores that order.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct WedgeExpr {
    atoms: Vec<WedgeAtom>,
}

impl WedgeExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, atom: WedgeAtom) {
        self.atoms.push(atom);
    }

    pub fn atoms(&self) -> &[WedgeAtom] {
        &self.atoms
    }

    /// Summands in sorted order.
    pub fn canonical(&self) -> Vec<WedgeAtom> {
        let mut v = self.atoms.clone();
        v.sort();
        v
    }

    /// Reduced homology of the wedge (the direct sum over summands).
    pub fn reduced_homology(&self) -> Result<BTreeMap<u32, FGAbelianGroup>> {
        let mut out: BTreeMap<u32, FGAbelianGroup> = BTreeMap::new();
        for atom in &self.atoms {
            for (deg, g) in atom.reduced_homology()? {
                let slot = out.entry(deg).or_default();
                *slot = slot.direct_sum(&g);
            }
        }
        out.retain(|_, g| !g.is_trivial());
        Ok(out)
    }
}

impl PartialEq for WedgeExpr {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for WedgeExpr {}

impl fmt::Display for WedgeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("*");
        }
        let parts: Vec<String> = self.atoms.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" ∨ "))
    }
}

/// Tag of the residual summand in the triple suspension.
pub const RESIDUAL_TAG: &str = "ΣZ′";

/// The wedge decomposition of the `t`-fold suspension of `M`.
///
/// - `t = 2`: the 4-skeleton, `Σ²M_4 ≃ P⁶(c) ∨ P⁴(c) ∨ ⋁^{m-1}(S⁵ ∨ S⁴)`,
///   for odd `c`;
/// - `t = 3`: `ΣZ′ ∨ P⁵(c) ∨ P⁷(c) ∨ ⋁^{m-2}(S⁶ ∨ S⁵)` for `6 ∤ c`,
///   `m >= 2`, where `ΣZ′` is kept opaque;
/// - `t = 4`: `S⁹ ∨ P⁸(c) ∨ P⁶(c) ∨ ⋁^{m-1}(S⁷ ∨ S⁶)` for odd `c` and `M`
///   stably parallelizable with a single top cell.
pub fn suspension_splitting(m: &ManifoldSpec, t: u32) -> Result<WedgeExpr> {
    m.validate()?;
    let c = m.c;
    let mut w = WedgeExpr::new();
    let pairs = |w: &mut WedgeExpr, count: u32, hi: u32| {
        for _ in 0..count {
            w.push(WedgeAtom::Sphere(hi));
            w.push(WedgeAtom::Sphere(hi - 1));
        }
    };
    match t {
        2 => {
            m.require_odd_c()?;
            w.push(WedgeAtom::Moore { n: 6, c });
            w.push(WedgeAtom::Moore { n: 4, c });
            pairs(&mut w, m.m - 1, 5);
        }
        3 => {
            m.require_6_coprime()?;
            if m.m < 2 {
                return Err(hypothesis("m≥2"));
            }
            let z = FGAbelianGroup::free(1);
            w.push(WedgeAtom::Opaque {
                tag: RESIDUAL_TAG.to_string(),
                homology: vec![(5, z.clone()), (6, z.clone()), (8, z)],
            });
            w.push(WedgeAtom::Moore { n: 5, c });
            w.push(WedgeAtom::Moore { n: 7, c });
            pairs(&mut w, m.m - 2, 6);
        }
        4 => {
            m.require_odd_c()?;
            m.require_framed()?;
            w.push(WedgeAtom::Sphere(9));
            w.push(WedgeAtom::Moore { n: 8, c });
            w.push(WedgeAtom::Moore { n: 6, c });
            pairs(&mut w, m.m - 1, 7);
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "suspension splittings exist for t = 2, 3, 4, not {other}"
            )))
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(orders: &[u64]) -> FGAbelianGroup {
        FGAbelianGroup::from_cyclic_orders(orders).unwrap()
    }

    #[test]
    fn homology_examples() {
        let h = homology(&ManifoldSpec::new(5, 3)).unwrap();
        assert_eq!(h[3], group(&[0, 0, 5]));
        let h = homology(&ManifoldSpec::new(4, 1)).unwrap();
        assert!(h[2].is_trivial());
        assert_eq!(h[1], group(&[4]));
        let h = homology(&ManifoldSpec::new(12, 2)).unwrap();
        assert_eq!(h[1], group(&[4, 3]));
        assert!(homology(&ManifoldSpec::new(1, 2)).is_err());
    }

    #[test]
    fn bundles() {
        let m = ManifoldSpec::new(7, 2);
        assert_eq!(
            bundle_classes(&m, &LieGroup::SU(3), &Localization::Integral).unwrap(),
            group(&[7])
        );
        let m = ManifoldSpec::new(2, 2);
        assert_eq!(
            bundle_classes(&m, &LieGroup::E8, &Localization::Integral).unwrap(),
            group(&[2])
        );
        let m = ManifoldSpec::new(9, 2);
        assert!(matches!(
            bundle_classes(&m, &LieGroup::Sp(2), &Localization::Integral),
            Err(Error::Pi4Nontrivial(..))
        ));
    }

    #[test]
    fn moore_groups() {
        assert_eq!(pi_moore_self(3, 9).unwrap(), group(&[9]));
        assert!(pi_moore_self(4, 9).unwrap().is_trivial());
        assert!(pi_moore_self(7, 15).unwrap().is_trivial());
        assert_eq!(pi6_p4(9).unwrap(), group(&[9, 3]));
        assert_eq!(pi7_p5(5).unwrap(), group(&[5]));
        assert_eq!(pi6_p4(15).unwrap(), group(&[5, 3, 3]));
        assert_eq!(suspension_image_order(9).unwrap(), 3);
        assert_eq!(suspension_image_order(5).unwrap(), 1);
        assert_eq!(suspension_image_order(21).unwrap(), 3);
        assert_eq!(pi6_p4(4), Err(Error::Hypothesis("2∤c".into())));
    }

    #[test]
    fn coefficient_groups() {
        use CoefficientTarget::*;
        assert!(pi_with_coefficients(S3At4, 9).unwrap().is_trivial());
        assert_eq!(pi_with_coefficients(P3At4, 9).unwrap(), group(&[9]));
        assert!(pi_with_coefficients(P4At5, 15).unwrap().is_trivial());
        assert!("S5@7".parse::<CoefficientTarget>().is_err());
    }

    #[test]
    fn splittings() {
        let w = suspension_splitting(&ManifoldSpec::new(5, 3), 2).unwrap();
        assert_eq!(w.to_string(), "P⁶(5) ∨ P⁴(5) ∨ S⁵ ∨ S⁴ ∨ S⁵ ∨ S⁴");
        let w = suspension_splitting(&ManifoldSpec::new(5, 2), 3).unwrap();
        assert_eq!(w.to_string(), "ΣZ′ ∨ P⁵(5) ∨ P⁷(5)");
        let m = ManifoldSpec::new(9, 2)
            .stably_parallelizable(true)
            .single_top_cell(true);
        let w = suspension_splitting(&m, 4).unwrap();
        assert_eq!(w.to_string(), "S⁹ ∨ P⁸(9) ∨ P⁶(9) ∨ S⁷ ∨ S⁶");
        assert_eq!(
            suspension_splitting(&ManifoldSpec::new(12, 2), 3),
            Err(Error::Hypothesis("6∤c".into()))
        );
        assert_eq!(
            suspension_splitting(&ManifoldSpec::new(9, 2), 4),
            Err(Error::Hypothesis("stably parallelizable".into()))
        );
    }

    #[test]
    fn config() {
        let m: ManifoldSpec = "c = 9\nm = 2\nstably_parallelizable = true\nsingle_top_cell = true"
            .parse()
            .unwrap();
        assert!(m.stably_parallelizable && m.single_top_cell && !m.spin);
        assert!(ManifoldSpec::from_config("c = 1\nm = 2").is_err());
        assert!(ManifoldSpec::from_config("m = 2").is_err());
    }
}
