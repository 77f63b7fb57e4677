//! The Lie group data catalog: orders of the connecting map over `S^4`,
//! low-rank ranges, the powers `r(G, p)` and cohomology torsion primes.
//!
//! The catalog is a plain-text file (see `data/catalog.txt`) compiled into
//! the library. A replacement can be loaded from disk and installed once per
//! process with [`install`]; every query in the crate goes through
//! [`active`].

mod expr;

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use expr::{parse_conditions, parse_expr, Condition, Env, Expr};

use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../data/catalog.txt");

/// Row families. Spin groups are split by parity because their formulas
/// are written in terms of `n` for `Spin(2n+1)` and `Spin(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogFamily {
    SU,
    Sp,
    SpinOdd,
    SpinEven,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl CatalogFamily {
    pub fn name(self) -> &'static str {
        match self {
            CatalogFamily::SU => "SU",
            CatalogFamily::Sp => "Sp",
            CatalogFamily::SpinOdd => "SpinOdd",
            CatalogFamily::SpinEven => "SpinEven",
            CatalogFamily::G2 => "G2",
            CatalogFamily::F4 => "F4",
            CatalogFamily::E6 => "E6",
            CatalogFamily::E7 => "E7",
            CatalogFamily::E8 => "E8",
        }
    }
}

impl FromStr for CatalogFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "SU" => CatalogFamily::SU,
            "Sp" => CatalogFamily::Sp,
            "SpinOdd" => CatalogFamily::SpinOdd,
            "SpinEven" => CatalogFamily::SpinEven,
            "G2" => CatalogFamily::G2,
            "F4" => CatalogFamily::F4,
            "E6" => CatalogFamily::E6,
            "E7" => CatalogFamily::E7,
            "E8" => CatalogFamily::E8,
            other => {
                return Err(Error::InvalidGroup(format!(
                    "unknown catalog family {other}"
                )))
            }
        })
    }
}

/// A family together with its parameter (absent for exceptional groups).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CatalogKey {
    pub family: CatalogFamily,
    pub n: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Order,
    Range,
    R,
    Torsion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Guard {
    /// Holds for every parameter, or at every prime.
    Any,
    /// Prime guard meaning "valid without localizing".
    Integral,
    All(Vec<Condition>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Value {
    None,
    Expr(Expr),
    Primes(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Row {
    line: usize,
    kind: Kind,
    family: CatalogFamily,
    params: Guard,
    primes: Guard,
    value: Value,
}

/// Where a catalog order is queried: integrally, or after localizing at `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Integral,
    At(u64),
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Integral => f.write_str("integral"),
            Scope::At(p) => write!(f, "p = {p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    rows: Vec<Row>,
}

impl Row {
    fn env(&self, key: &CatalogKey, p: Option<u64>) -> Env {
        Env { n: key.n, p }
    }

    fn params_hold(&self, key: &CatalogKey) -> Result<bool> {
        if self.family != key.family {
            return Ok(false);
        }
        match &self.params {
            Guard::Any | Guard::Integral => Ok(true),
            Guard::All(conds) => all_hold(conds, &self.env(key, None)),
        }
    }

    fn primes_hold(&self, key: &CatalogKey, scope: Scope) -> Result<bool> {
        match (&self.primes, scope) {
            (Guard::Integral, _) => Ok(true),
            (_, Scope::Integral) => Ok(false),
            (Guard::Any, Scope::At(_)) => Ok(true),
            (Guard::All(conds), Scope::At(p)) => all_hold(conds, &self.env(key, Some(p))),
        }
    }

    fn eval(&self, key: &CatalogKey, p: Option<u64>) -> Result<u64> {
        let Value::Expr(e) = &self.value else {
            return Err(self.error("row has no value"));
        };
        let v = e
            .eval(&self.env(key, p))?
            .ok_or_else(|| self.error("value depends on an unbound variable"))?;
        u64::try_from(v).map_err(|_| self.error(&format!("value {v} is negative")))
    }

    fn error(&self, msg: &str) -> Error {
        Error::Catalog {
            line: self.line,
            msg: msg.to_string(),
        }
    }
}

fn all_hold(conds: &[Condition], env: &Env) -> Result<bool> {
    for c in conds {
        if !c.holds(env)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl Catalog {
    /// The catalog compiled into the library.
    pub fn builtin() -> &'static Catalog {
        static BUILTIN_CATALOG: OnceLock<Catalog> = OnceLock::new();
        BUILTIN_CATALOG.get_or_init(|| BUILTIN.parse().expect("builtin catalog parses"))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Catalog> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("reading {}: {e}", path.display())))?;
        text.parse()
    }

    fn rows_for<'a>(
        &'a self,
        kind: Kind,
        key: &'a CatalogKey,
    ) -> impl Iterator<Item = Result<&'a Row>> + 'a {
        self.rows
            .iter()
            .filter(move |r| r.kind == kind)
            .filter_map(move |r| match r.params_hold(key) {
                Ok(true) => Some(Ok(r)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
    }

    fn first_match<'a>(
        &'a self,
        kind: Kind,
        key: &'a CatalogKey,
        scope: Scope,
    ) -> Result<Option<&'a Row>> {
        for row in self.rows_for(kind, key) {
            let row = row?;
            if row.primes_hold(key, scope)? {
                return Ok(Some(row));
            }
        }
        Ok(None)
    }

    /// Order of the connecting map for `G_1(S^4)`, if a row covers `scope`.
    pub fn order(&self, key: &CatalogKey, scope: Scope) -> Result<Option<u64>> {
        let p = match scope {
            Scope::Integral => None,
            Scope::At(p) => Some(p),
        };
        self.first_match(Kind::Order, key, scope)?
            .map(|row| row.eval(key, p))
            .transpose()
    }

    /// Whether `(key, p)` lies in the low-rank range.
    pub fn in_range(&self, key: &CatalogKey, p: u64) -> Result<bool> {
        Ok(self.first_match(Kind::Range, key, Scope::At(p))?.is_some())
    }

    pub fn r_value(&self, key: &CatalogKey, p: u64) -> Result<Option<u64>> {
        self.first_match(Kind::R, key, Scope::At(p))?
            .map(|row| row.eval(key, Some(p)))
            .transpose()
    }

    /// Primes at which the integral cohomology has torsion.
    pub fn torsion_primes(&self, key: &CatalogKey) -> Result<Vec<u64>> {
        match self.rows_for(Kind::Torsion, key).next().transpose()? {
            Some(Row {
                value: Value::Primes(ps),
                ..
            }) => Ok(ps.clone()),
            _ => Ok(Vec::new()),
        }
    }
}

fn parse_guard(src: &str, allow_integral: bool) -> std::result::Result<Guard, String> {
    match src {
        "any" | "-" => Ok(Guard::Any),
        "integral" if allow_integral => Ok(Guard::Integral),
        _ => parse_conditions(src).map(Guard::All),
    }
}

fn parse_row(line: usize, text: &str) -> Result<Row> {
    let err = |msg: String| Error::Catalog { line, msg };
    let cols: Vec<&str> = text.split('|').map(str::trim).collect();
    let [kind, family, params, primes, value] = cols[..] else {
        return Err(err(format!("expected 5 columns, found {}", cols.len())));
    };
    let kind = match kind {
        "order" => Kind::Order,
        "range" => Kind::Range,
        "r" => Kind::R,
        "torsion" => Kind::Torsion,
        other => return Err(err(format!("unknown row kind '{other}'"))),
    };
    let family: CatalogFamily = family.parse().map_err(|e: Error| err(e.to_string()))?;
    let params = parse_guard(params, false).map_err(err)?;
    let primes = parse_guard(primes, true).map_err(err)?;
    let value = match (kind, value) {
        (Kind::Range, "-") | (Kind::Torsion, "-") => Value::None,
        (Kind::Range, v) => return Err(err(format!("range rows take '-', found '{v}'"))),
        (Kind::Torsion, v) => Value::Primes(
            v.split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|e| err(format!("bad prime '{s}': {e}")))
                })
                .collect::<Result<_>>()?,
        ),
        (_, v) => Value::Expr(parse_expr(v).map_err(err)?),
    };
    Ok(Row {
        line,
        kind,
        family,
        params,
        primes,
        value,
    })
}

impl FromStr for Catalog {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            rows.push(parse_row(i + 1, content)?);
        }
        Ok(Catalog { rows })
    }
}

static ACTIVE: OnceLock<Catalog> = OnceLock::new();

/// Installs `catalog` as the process-wide catalog. Fails if a catalog was
/// already installed or [`active`] has already been consulted.
pub fn install(catalog: Catalog) -> Result<()> {
    ACTIVE
        .set(catalog)
        .map_err(|_| Error::InvalidInput("catalog already installed".into()))
}

/// The catalog in effect: the installed one, or the builtin.
pub fn active() -> &'static Catalog {
    ACTIVE.get_or_init(|| Catalog::builtin().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(family: CatalogFamily, n: Option<u64>) -> CatalogKey {
        CatalogKey { family, n }
    }

    #[test]
    fn builtin_orders() {
        let cat = Catalog::builtin();
        let su3 = key(CatalogFamily::SU, Some(3));
        assert_eq!(cat.order(&su3, Scope::Integral).unwrap(), Some(24));
        assert_eq!(cat.order(&su3, Scope::At(7)).unwrap(), Some(24));
        let su4 = key(CatalogFamily::SU, Some(4));
        assert_eq!(cat.order(&su4, Scope::Integral).unwrap(), None);
        assert_eq!(cat.order(&su4, Scope::At(3)).unwrap(), Some(60));
        let g2 = key(CatalogFamily::G2, None);
        assert_eq!(cat.order(&g2, Scope::At(3)).unwrap(), Some(21));
        assert_eq!(cat.order(&g2, Scope::At(2)).unwrap(), None);
        let e8 = key(CatalogFamily::E8, None);
        assert_eq!(cat.order(&e8, Scope::At(5)).unwrap(), None);
    }

    #[test]
    fn builtin_r_and_range() {
        let cat = Catalog::builtin();
        let e8 = key(CatalogFamily::E8, None);
        assert_eq!(cat.r_value(&e8, 7).unwrap(), Some(2));
        assert_eq!(cat.r_value(&e8, 41).unwrap(), Some(0));
        let su7 = key(CatalogFamily::SU, Some(7));
        assert!(cat.in_range(&su7, 5).unwrap());
        assert!(!cat.in_range(&key(CatalogFamily::SU, Some(14)), 5).unwrap());
        assert_eq!(cat.torsion_primes(&e8).unwrap(), vec![2, 3, 5]);
        assert!(cat.torsion_primes(&su7).unwrap().is_empty());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad = "# header\norder | SU | n>=2 | p>=3\n";
        assert!(matches!(
            bad.parse::<Catalog>(),
            Err(Error::Catalog { line: 2, .. })
        ));
        let bad = "order | XY | any | any | 3\n";
        assert!(matches!(
            bad.parse::<Catalog>(),
            Err(Error::Catalog { line: 1, .. })
        ));
    }
}
