//! Text and JSON-lines rendering.

use std::io::Write;

use clap::ValueEnum;
use gauge5::classification::ClassificationReport;
use gauge5::decomposition::SpaceExpr;
use gauge5::exponents::{CombinedBound, TableRow};
use gauge5::lie::StableFamily;
use gauge5::manifold::WedgeExpr;
use gauge5::rational::GeneratorLedger;
use gauge5::{FGAbelianGroup, LieGroup};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

pub struct Out {
    format: Format,
    stdout: std::io::Stdout,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out {
            format,
            stdout: std::io::stdout(),
        }
    }

    fn line(&mut self, s: &str) {
        // a closed pipe is not an error worth reporting
        let _ = writeln!(self.stdout.lock(), "{s}");
    }

    fn record(&mut self, value: &impl Serialize) -> gauge5::Result<()> {
        let s = serde_json::to_string(value).map_err(|e| gauge5::Error::Parse(e.to_string()))?;
        self.line(&s);
        Ok(())
    }

    pub fn space(&mut self, e: &SpaceExpr) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                self.line(&e.to_string());
                Ok(())
            }
            Format::Machine => {
                self.record(&json!({
                    "record": "space",
                    "group": e.group,
                    "c": e.c,
                    "localization": e.localization,
                    "text": e.to_string(),
                }))?;
                for r in e.records() {
                    self.record(&json!({
                        "record": "factor",
                        "atom": r.atom,
                        "multiplicity": r.multiplicity,
                    }))?;
                }
                Ok(())
            }
        }
    }

    pub fn classification(&mut self, r: &ClassificationReport) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                self.line(&format!("group {}  c = {}  d = {}", r.group, r.c, r.d));
                self.line("gcd(k,d)  representative  size");
                for class in &r.classes {
                    self.line(&format!(
                        "{:>8}  {:>14}  {:>4}",
                        class.gcd, class.representative, class.size
                    ));
                }
                self.line(&format!("at most {} homotopy types", r.count_integral));
                for (p, n) in &r.count_at_p {
                    self.line(&format!("at most {n} types at p = {p}"));
                }
                if r.trivial {
                    self.line("all components equivalent");
                }
                let caveat = r.caveat();
                if !caveat.is_empty() {
                    self.line(&format!("note: {caveat}"));
                }
                Ok(())
            }
            Format::Machine => self.record(&json!({ "record": "classification", "report": r })),
        }
    }

    pub fn exponent(&mut self, g: &LieGroup, b: &CombinedBound) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                self.line(&format!(
                    "exp_{}(G_k^{g}) ≤ {}^{}  [{} route: {}]",
                    b.best.p, b.best.p, b.best.exponent, b.best.route, b.best.form
                ));
                for route in &b.routes {
                    self.line(&format!(
                        "  {:<9} {}  = {}  ({})",
                        route.route.to_string(),
                        route.form,
                        route.exponent,
                        route.assumptions.join("; ")
                    ));
                }
                Ok(())
            }
            Format::Machine => {
                for route in &b.routes {
                    self.record(&json!({
                        "record": "bound",
                        "group": g,
                        "best": route == &b.best,
                        "bound": route,
                    }))?;
                }
                Ok(())
            }
        }
    }

    pub fn exponent_table(&mut self, rows: &[TableRow]) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                self.line(&format!("{:<4} {:<6} exp(G_k) ≤ ?", "G", "p"));
                let mut last = None;
                for row in rows {
                    let name = if last == Some(row.group) {
                        String::new()
                    } else {
                        row.group.to_string()
                    };
                    last = Some(row.group);
                    self.line(&format!(
                        "{:<4} {:<6} {}",
                        name,
                        row.primes.to_string(),
                        row.form
                    ));
                }
                Ok(())
            }
            Format::Machine => {
                for row in rows {
                    self.record(&json!({ "record": "exponent_row", "row": row }))?;
                }
                Ok(())
            }
        }
    }

    pub fn bott(
        &mut self,
        family: StableFamily,
        rows: &[(u32, FGAbelianGroup)],
        period: Option<u32>,
    ) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                let label = match period {
                    Some(p) => format!("r mod {p}"),
                    None => "r".to_string(),
                };
                self.line(&format!("{label:<8} π_r(G_k({family}))"));
                for (r, g) in rows {
                    self.line(&format!("{r:<8} {g}"));
                }
                Ok(())
            }
            Format::Machine => {
                for (r, g) in rows {
                    let key = if period.is_some() { "residue" } else { "r" };
                    self.record(&json!({
                        "record": "stable_pi",
                        "family": family.to_string(),
                        key: r,
                        "group": g,
                    }))?;
                }
                Ok(())
            }
        }
    }

    pub fn ledger(&mut self, l: &GeneratorLedger) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                self.line(&l.to_string());
                Ok(())
            }
            Format::Machine => {
                for (degree, kind) in &l.generators {
                    self.record(&json!({ "record": "generator", "degree": degree, "kind": kind }))?;
                }
                Ok(())
            }
        }
    }

    pub fn groups(&mut self, named: &[(String, FGAbelianGroup)]) -> gauge5::Result<()> {
        for (name, g) in named {
            match self.format {
                Format::Text => self.line(&format!("{name} = {g}")),
                Format::Machine => {
                    self.record(&json!({ "record": "group", "name": name, "group": g }))?
                }
            }
        }
        Ok(())
    }

    pub fn value(&mut self, name: &str, v: u64) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                self.line(&format!("{name} = {v}"));
                Ok(())
            }
            Format::Machine => self.record(&json!({ "record": "value", "name": name, "value": v })),
        }
    }

    pub fn wedge(&mut self, t: u32, w: &WedgeExpr) -> gauge5::Result<()> {
        match self.format {
            Format::Text => {
                self.line(&format!("Σ{}M ≃ {w}", sup(t)));
                Ok(())
            }
            Format::Machine => {
                for atom in w.atoms() {
                    self.record(&json!({ "record": "summand", "suspension": t, "atom": atom }))?;
                }
                Ok(())
            }
        }
    }
}

fn sup(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}
