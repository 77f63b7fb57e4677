//! Upper bounds on the `p`-primary homotopy exponent of `G_k(M)`.
//!
//! Every bound here has the shape `max(a, ν_p(c) + b)`, so bounds are kept
//! symbolic in `ν_p(c)` as a [`MaxForm`] and evaluated on demand. Three
//! routes are available: the `p`-regular route, the low-rank route through
//! `r(G, p)`, and the closed forms for the matrix groups. The bound does not
//! depend on the component `k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{nu_p, require_odd_prime};
use crate::catalog::Scope;
use crate::error::{hypothesis, Error, Result};
use crate::lie::LieGroup;
use crate::manifold::ManifoldSpec;

/// `ν ↦ max(a, ν + b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MaxForm {
    pub a: u64,
    pub b: u64,
}

impl MaxForm {
    pub fn eval(&self, nu_c: u64) -> u64 {
        self.a.max(nu_c + self.b)
    }
}

impl fmt::Display for MaxForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.b {
            0 => write!(f, "max({}, ν_p(c))", self.a),
            b => write!(f, "max({}, ν_p(c)+{b})", self.a),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Regular,
    Theriault,
    ClosedForm,
    MooreFiber,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Regular => "regular",
            Route::Theriault => "theriault",
            Route::ClosedForm => "closed_form",
            Route::MooreFiber => "moore_fiber",
        })
    }
}

/// `exp_p ≤ p^exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentBound {
    pub p: u64,
    pub exponent: u64,
    pub route: Route,
    pub form: MaxForm,
    pub assumptions: Vec<String>,
}

/// A combined bound: the smallest exponent among the applicable routes,
/// with every route's bound kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinedBound {
    pub best: ExponentBound,
    pub routes: Vec<ExponentBound>,
}

fn ord_valuation(g: &LieGroup, p: u64) -> Result<u64> {
    Ok(u64::from(nu_p(g.ord_partial1_tilde(Scope::At(p))?, p)?))
}

/// `ν_p(ord) + max(l(G), ν_p(c))`, plus one for `SU(2)` and `SU(3)`.
pub fn regular_form(g: &LieGroup, p: u64) -> Result<MaxForm> {
    require_odd_prime(p)?;
    if !g.is_p_regular(p)? {
        return Err(Error::NotRegular(g.to_string(), p));
    }
    let adjust = u64::from(matches!(g, LieGroup::SU(2) | LieGroup::SU(3)));
    let nu = ord_valuation(g, p)? + adjust;
    Ok(MaxForm {
        a: nu + u64::from(g.l_of()?),
        b: nu,
    })
}

/// `r + ν_p(ord) + max(r + l(G), ν_p(c))`.
pub fn theriault_form(g: &LieGroup, p: u64) -> Result<MaxForm> {
    require_odd_prime(p)?;
    if !g.in_theriault_range(p)? {
        return Err(Error::OutOfRange {
            group: g.to_string(),
            range: "of low rank groups",
            p,
        });
    }
    let r = g.r_of(p)?;
    let nu = ord_valuation(g, p)?;
    Ok(MaxForm {
        a: 2 * r + nu + u64::from(g.l_of()?),
        b: r + nu,
    })
}

/// The closed forms for matrix groups:
/// `SU(n)`: `max(n+2p-5, ν+p-1)`; `Sp(n)`, `Spin(2n+1)`:
/// `max(2n+2p-6, ν+p-2)`; `Spin(2n)`: `max(2n+2p-8, ν+p-2)`.
pub fn closed_form(g: &LieGroup, p: u64) -> Result<MaxForm> {
    require_odd_prime(p)?;
    g.validate()?;
    let (a, b) = match *g {
        LieGroup::SU(n) => (u64::from(n) + 2 * p - 5, p - 1),
        LieGroup::Sp(n) => (2 * u64::from(n) + 2 * p - 6, p - 2),
        LieGroup::Spin(big) if big % 2 == 1 => (2 * u64::from(big / 2) + 2 * p - 6, p - 2),
        LieGroup::Spin(big) => (2 * u64::from(big / 2) + 2 * p - 8, p - 2),
        _ => {
            return Err(Error::Unsupported(format!(
                "no closed form for {g}; use the exceptional table"
            )))
        }
    };
    Ok(MaxForm { a, b })
}

/// The hypotheses on `M` under which the bounds hold: `6 ∤ c`, or `2 ∤ c`
/// with `M` stably parallelizable. (`6 | c` forces `c` even, so the first
/// set is implied whenever either holds.)
fn manifold_assumptions(m: &ManifoldSpec) -> Result<Vec<String>> {
    m.validate()?;
    if m.c.is_multiple_of(6) {
        return Err(hypothesis("6∤c"));
    }
    let mut out = vec!["6∤c".to_string()];
    if m.c % 2 == 1 && m.stably_parallelizable {
        out.push("2∤c, stably parallelizable".to_string());
    }
    Ok(out)
}

fn bound(
    m: &ManifoldSpec,
    p: u64,
    route: Route,
    form: MaxForm,
    extra: &str,
) -> Result<ExponentBound> {
    let mut assumptions = manifold_assumptions(m)?;
    assumptions.push(extra.to_string());
    let nu_c = u64::from(nu_p(m.c, p)?);
    Ok(ExponentBound {
        p,
        exponent: form.eval(nu_c),
        route,
        form,
        assumptions,
    })
}

pub fn exp_bound_regular(m: &ManifoldSpec, g: &LieGroup, p: u64) -> Result<ExponentBound> {
    let form = regular_form(g, p)?;
    bound(m, p, Route::Regular, form, &format!("{g} is {p}-regular"))
}

pub fn exp_bound_theriault(m: &ManifoldSpec, g: &LieGroup, p: u64) -> Result<ExponentBound> {
    let form = theriault_form(g, p)?;
    bound(
        m,
        p,
        Route::Theriault,
        form,
        &format!("{g} is in the low rank range at {p}"),
    )
}

/// The closed-form bound, taking `ν_p(c)` directly.
pub fn exp_bound_closed_form(g: &LieGroup, p: u64, nu_c: u64) -> Result<ExponentBound> {
    let form = closed_form(g, p)?;
    let range = if g.in_theriault_range(p)? {
        format!("{g} is in the low rank range at {p}")
    } else {
        format!("{g} is outside the low rank range at {p}; formula evaluated as stated")
    };
    Ok(ExponentBound {
        p,
        exponent: form.eval(nu_c),
        route: Route::ClosedForm,
        form,
        assumptions: vec![range],
    })
}

/// `exp_p(Ω²X{c}) ≤ p^{ν_p(c)}`.
pub fn exp_moore_fiber(c: u64, p: u64) -> Result<ExponentBound> {
    require_odd_prime(p)?;
    let form = MaxForm { a: 0, b: 0 };
    Ok(ExponentBound {
        p,
        exponent: form.eval(u64::from(nu_p(c, p)?)),
        route: Route::MooreFiber,
        form,
        assumptions: Vec::new(),
    })
}

/// The best bound among the routes that apply.
pub fn exp_bound(m: &ManifoldSpec, g: &LieGroup, p: u64) -> Result<CombinedBound> {
    require_odd_prime(p)?;
    let mut routes = Vec::new();
    let mut first_err = None;
    for attempt in [exp_bound_regular(m, g, p), exp_bound_theriault(m, g, p)] {
        match attempt {
            Ok(b) => routes.push(b),
            Err(e @ Error::Hypothesis(_)) => return Err(e),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    let best = routes
        .iter()
        .min_by_key(|b| b.exponent)
        .cloned()
        .ok_or_else(|| first_err.expect("some route failed"))?;
    Ok(CombinedBound { best, routes })
}

/// A prime condition for a table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeRange {
    Exactly(u64),
    AtLeast(u64),
}

impl PrimeRange {
    pub fn contains(&self, p: u64) -> bool {
        match *self {
            PrimeRange::Exactly(q) => p == q,
            PrimeRange::AtLeast(q) => p >= q,
        }
    }

    /// The smallest prime in the range.
    pub fn representative(&self) -> u64 {
        match *self {
            PrimeRange::Exactly(q) | PrimeRange::AtLeast(q) => q,
        }
    }
}

impl fmt::Display for PrimeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeRange::Exactly(p) => write!(f, "p={p}"),
            PrimeRange::AtLeast(p) => write!(f, "p≥{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: LieGroup,
    pub primes: PrimeRange,
    pub form: MaxForm,
}

/// Prime ranges on which the exceptional bounds are constant: the primes
/// where `r(G, p)` or `ν_p(ord)` is nonzero get their own row.
const EXCEPTIONAL_ROWS: [(LieGroup, &[u64], u64); 5] = [
    (LieGroup::G2, &[5, 7], 11),
    (LieGroup::F4, &[5, 7, 11, 13], 17),
    (LieGroup::E6, &[5, 7, 11, 13], 17),
    (LieGroup::E7, &[7, 11, 13, 17, 19], 23),
    (LieGroup::E8, &[7, 11, 13, 17, 19, 23, 29, 31], 37),
];

/// The exceptional-group exponent table, optionally filtered to rows whose
/// prime range contains `p`.
pub fn exceptional_table(p: Option<u64>) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (group, exact, tail) in EXCEPTIONAL_ROWS {
        let ranges = exact
            .iter()
            .map(|&q| PrimeRange::Exactly(q))
            .chain([PrimeRange::AtLeast(tail)]);
        for primes in ranges {
            if p.is_some_and(|p| !primes.contains(p)) {
                continue;
            }
            rows.push(TableRow {
                group,
                primes,
                form: theriault_form(&group, primes.representative())?,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_examples() {
        let su4 = regular_form(&LieGroup::SU(4), 5).unwrap();
        assert_eq!(su4.eval(0), 4);
        assert_eq!(regular_form(&LieGroup::SU(3), 5).unwrap().eval(0), 3);
        assert_eq!(regular_form(&LieGroup::G2, 11).unwrap().eval(2), 5);
        assert!(matches!(
            regular_form(&LieGroup::SU(4), 3),
            Err(Error::NotRegular(..))
        ));
    }

    #[test]
    fn theriault_examples() {
        assert_eq!(
            theriault_form(&LieGroup::F4, 5).unwrap(),
            MaxForm { a: 15, b: 3 }
        );
        assert_eq!(theriault_form(&LieGroup::E8, 31).unwrap().eval(0), 30);
        let f = theriault_form(&LieGroup::E8, 7).unwrap();
        assert_eq!(f.eval(100), 100 + f.b);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(&LieGroup::SU(4), 5).unwrap().eval(0), 9);
        assert_eq!(closed_form(&LieGroup::Spin(8), 5).unwrap().eval(0), 10);
        assert_eq!(closed_form(&LieGroup::Sp(2), 3).unwrap().eval(5), 6);
        assert!(matches!(
            closed_form(&LieGroup::E6, 5),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn moore_fiber() {
        assert_eq!(exp_moore_fiber(9, 3).unwrap().exponent, 2);
        assert_eq!(exp_moore_fiber(5, 3).unwrap().exponent, 0);
        assert_eq!(exp_moore_fiber(135, 3).unwrap().exponent, 3);
    }

    #[test]
    fn combined() {
        let m = ManifoldSpec::new(5, 2).spin(true);
        let b = exp_bound(&m, &LieGroup::SU(4), 5).unwrap();
        assert_eq!(b.routes.len(), 2);
        assert_eq!(b.best.exponent, 4);
        let m6 = ManifoldSpec::new(6, 2);
        assert_eq!(
            exp_bound(&m6, &LieGroup::SU(4), 5),
            Err(Error::Hypothesis("6∤c".into()))
        );
        assert!(exp_bound(&m, &LieGroup::E8, 5).is_err());
    }

    #[test]
    fn table_shape() {
        let rows = exceptional_table(None).unwrap();
        assert_eq!(rows.len(), 28);
        let p5 = exceptional_table(Some(5)).unwrap();
        assert_eq!(p5.len(), 3);
        assert_eq!(p5[0].form.to_string(), "max(7, ν_p(c)+1)");
    }
}
