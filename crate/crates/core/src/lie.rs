//! Simply connected compact simple Lie groups and the data attached to them:
//! rational type, `π_4` triviality, p-regularity, the low-rank range,
//! `r(G, p)`, the catalog order and stable homotopy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian::FGAbelianGroup;
use crate::arith::require_odd_prime;
use crate::catalog::{self, CatalogFamily, CatalogKey, Scope};
use crate::error::{Error, Result};
use crate::localization::Localization;

/// A simply connected compact simple Lie group.
///
/// `Spin(n)` is indexed by `n` itself (so `Spin(12)`, not the `Spin(2n)`
/// parameter), and requires `n >= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum LieGroup {
    SU(u32),
    Sp(u32),
    Spin(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

/// Families whose stable homotopy is given by Bott periodicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StableFamily {
    SU,
    Spin,
}

impl fmt::Display for StableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StableFamily::SU => "SU",
            StableFamily::Spin => "Spin",
        })
    }
}

impl FromStr for StableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "SU" | "su" => Ok(StableFamily::SU),
            "Spin" | "spin" => Ok(StableFamily::Spin),
            other => Err(Error::InvalidInput(format!(
                "stable family must be SU or Spin, got {other}"
            ))),
        }
    }
}

impl LieGroup {
    pub const EXCEPTIONAL: [LieGroup; 5] = [
        LieGroup::G2,
        LieGroup::F4,
        LieGroup::E6,
        LieGroup::E7,
        LieGroup::E8,
    ];

    /// Checks the parameter range of the family.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            LieGroup::SU(n) => n >= 2,
            LieGroup::Sp(n) => n >= 1,
            LieGroup::Spin(n) => n >= 5,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGroup(format!(
                "{self}: parameter out of range (SU(n) n >= 2, Sp(n) n >= 1, Spin(n) n >= 5)"
            )))
        }
    }

    pub fn is_exceptional(&self) -> bool {
        Self::EXCEPTIONAL.contains(self)
    }

    /// The type `t(G)`: `G` is rationally a product of spheres `S^{2n_i+1}`.
    /// Returned sorted ascending.
    pub fn type_of(&self) -> Result<Vec<u32>> {
        self.validate()?;
        let mut t: Vec<u32> = match *self {
            LieGroup::SU(n) => (1..n).collect(),
            LieGroup::Sp(n) => (1..=n).map(|i| 2 * i - 1).collect(),
            LieGroup::Spin(n) if n % 2 == 1 => {
                let h = (n - 1) / 2;
                (1..=h).map(|i| 2 * i - 1).collect()
            }
            LieGroup::Spin(n) => {
                let h = n / 2;
                (1..h).map(|i| 2 * i - 1).chain([h - 1]).collect()
            }
            LieGroup::G2 => vec![1, 5],
            LieGroup::F4 => vec![1, 5, 7, 11],
            LieGroup::E6 => vec![1, 4, 5, 7, 8, 11],
            LieGroup::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            LieGroup::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        };
        t.sort_unstable();
        Ok(t)
    }

    /// `l(G)`, the largest entry of the type.
    pub fn l_of(&self) -> Result<u32> {
        Ok(*self.type_of()?.last().expect("types are nonempty"))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.type_of()?.len())
    }

    /// Degrees `2n_i + 1` of the exterior generators of `H^*(G; Q)`.
    pub fn rational_degrees(&self) -> Result<Vec<u32>> {
        Ok(self.type_of()?.into_iter().map(|n| 2 * n + 1).collect())
    }

    /// Rank of `π_d(G) ⊗ Q`.
    pub fn rational_pi_rank(&self, d: u32) -> Result<u32> {
        Ok(self.rational_degrees()?.iter().filter(|&&x| x == d).count() as u32)
    }

    /// How this group is looked up in the catalog. `Sp(1) = SU(2)` shares
    /// the `SU(2)` rows.
    pub fn catalog_key(&self) -> Result<CatalogKey> {
        self.validate()?;
        let (family, n) = match *self {
            LieGroup::Sp(1) => (CatalogFamily::SU, Some(2)),
            LieGroup::SU(n) => (CatalogFamily::SU, Some(u64::from(n))),
            LieGroup::Sp(n) => (CatalogFamily::Sp, Some(u64::from(n))),
            LieGroup::Spin(n) if n % 2 == 1 => (CatalogFamily::SpinOdd, Some(u64::from(n / 2))),
            LieGroup::Spin(n) => (CatalogFamily::SpinEven, Some(u64::from(n / 2))),
            LieGroup::G2 => (CatalogFamily::G2, None),
            LieGroup::F4 => (CatalogFamily::F4, None),
            LieGroup::E6 => (CatalogFamily::E6, None),
            LieGroup::E7 => (CatalogFamily::E7, None),
            LieGroup::E8 => (CatalogFamily::E8, None),
        };
        Ok(CatalogKey { family, n })
    }

    /// Whether `π_4(G)` vanishes after applying `loc`. `π_4` is `Z/2` for
    /// `Sp(n)` (including `SU(2) = Sp(1)` and `Spin(5) = Sp(2)`) and zero
    /// for every other group here.
    pub fn pi4_is_trivial(&self, loc: &Localization) -> bool {
        let z2 = matches!(self, LieGroup::SU(2) | LieGroup::Sp(_) | LieGroup::Spin(5));
        !z2 || loc.inverts(2)
    }

    /// The order of the connecting map for `G_1(S^4)` from the catalog.
    pub fn ord_partial1_tilde(&self, scope: Scope) -> Result<u64> {
        if let Scope::At(p) = scope {
            crate::arith::require_prime(p)?;
        }
        catalog::active()
            .order(&self.catalog_key()?, scope)?
            .ok_or_else(|| Error::OrderUnknown(format!("{self} ({scope})")))
    }

    /// `p >= l(G) + 1` and `H^*(G; Z)` has no `p`-torsion.
    pub fn is_p_regular(&self, p: u64) -> Result<bool> {
        require_odd_prime(p)?;
        let torsion = catalog::active().torsion_primes(&self.catalog_key()?)?;
        Ok(p > u64::from(self.l_of()?) && !torsion.contains(&p))
    }

    pub fn in_theriault_range(&self, p: u64) -> Result<bool> {
        require_odd_prime(p)?;
        catalog::active().in_range(&self.catalog_key()?, p)
    }

    /// `r(G, p)`: the power of `p` through which the power map on `ΩG`
    /// factors through the product of looped spheres. Classical groups use
    /// `ν_p` of a factorial at every odd prime; exceptional groups have
    /// values only inside the low-rank range.
    pub fn r_of(&self, p: u64) -> Result<u64> {
        require_odd_prime(p)?;
        catalog::active()
            .r_value(&self.catalog_key()?, p)?
            .ok_or_else(|| Error::OutOfRange {
                group: self.to_string(),
                range: "of low rank groups",
                p,
            })
    }

    /// `ε(G, p)`: 1 exactly for `p = 3` and `G ∈ {SU(2), SU(3), SU(4), Spin(6)}`.
    pub fn epsilon(&self, p: u64) -> Result<u32> {
        require_odd_prime(p)?;
        let special = matches!(
            self,
            LieGroup::SU(2) | LieGroup::SU(3) | LieGroup::SU(4) | LieGroup::Spin(6)
        );
        Ok(u32::from(p == 3 && special))
    }
}

/// Stable `π_r(SU)` (`r >= 1`) or `π_r(Spin)` (`r >= 2`).
pub fn stable_pi(family: StableFamily, r: u32) -> Result<FGAbelianGroup> {
    match family {
        StableFamily::SU => {
            if r < 1 {
                return Err(Error::InvalidInput("stable π_r(SU) needs r >= 1".into()));
            }
            Ok(FGAbelianGroup::free(r % 2))
        }
        StableFamily::Spin => {
            if r < 2 {
                return Err(Error::InvalidInput("stable π_r(Spin) needs r >= 2".into()));
            }
            Ok(match r % 8 {
                0 | 1 => FGAbelianGroup::cyclic(2)?,
                3 | 7 => FGAbelianGroup::free(1),
                _ => FGAbelianGroup::trivial(),
            })
        }
    }
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieGroup::SU(n) => write!(f, "SU({n})"),
            LieGroup::Sp(n) => write!(f, "Sp({n})"),
            LieGroup::Spin(n) => write!(f, "Spin({n})"),
            LieGroup::G2 => f.write_str("G2"),
            LieGroup::F4 => f.write_str("F4"),
            LieGroup::E6 => f.write_str("E6"),
            LieGroup::E7 => f.write_str("E7"),
            LieGroup::E8 => f.write_str("E8"),
        }
    }
}

/// Parses `family:param` (`SU:4`, `Sp:2`, `Spin:12`) or a bare exceptional
/// name (`G2`, `E8`). `SU(4)`-style input is accepted too.
impl FromStr for LieGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidGroup(format!("cannot parse '{s}' (expected family:param)"));
        let (family, param) = if let Some((f, p)) = s.split_once(':') {
            (f.trim(), Some(p.trim()))
        } else if let Some((f, rest)) = s.split_once('(') {
            (
                f.trim(),
                Some(rest.strip_suffix(')').ok_or_else(bad)?.trim()),
            )
        } else {
            (s, None)
        };
        let param = param
            .map(|p| p.parse::<u32>().map_err(|_| bad()))
            .transpose()?;
        let g = match (family.to_ascii_lowercase().as_str(), param) {
            ("su", Some(n)) => LieGroup::SU(n),
            ("sp", Some(n)) => LieGroup::Sp(n),
            ("spin", Some(n)) => LieGroup::Spin(n),
            ("g2", None) => LieGroup::G2,
            ("f4", None) => LieGroup::F4,
            ("e6", None) => LieGroup::E6,
            ("e7", None) => LieGroup::E7,
            ("e8", None) => LieGroup::E8,
            _ => return Err(bad()),
        };
        g.validate()?;
        Ok(g)
    }
}

impl TryFrom<String> for LieGroup {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LieGroup> for String {
    fn from(g: LieGroup) -> String {
        match g {
            LieGroup::SU(n) => format!("SU:{n}"),
            LieGroup::Sp(n) => format!("Sp:{n}"),
            LieGroup::Spin(n) => format!("Spin:{n}"),
            other => other.to_string(),
        }
    }
}
