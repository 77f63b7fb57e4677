//! `gauge5`: command-line front end for the gauge5 library.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gauge5::bott::{bott_table, stable_pi_gauge, StableQuery};
use gauge5::catalog::{self, Catalog};
use gauge5::classification::{classify_looped_manifold, classify_moore};
use gauge5::decomposition::{gauge_away_from, loops2_gauge_in, loops3_gauge_in};
use gauge5::exponents::{exceptional_table, exp_bound};
use gauge5::lie::StableFamily;
use gauge5::manifold::{
    homology, pi6_p4, pi7_p5, pi_with_coefficients, suspension_image_order, suspension_splitting,
    CoefficientTarget,
};
use gauge5::rational::{
    em_expansion, rational_b_star, rational_cohomology_ring, rational_gauge, CohomologyTarget,
    HilbertSeries, RationalGroupModel,
};
use gauge5::{Error, LieGroup, Localization, ManifoldSpec};

use output::{Format, Out};

#[derive(Debug, Parser)]
#[command(
    name = "gauge5",
    version,
    about = "Gauge groups over 5-manifolds with π₁ = Z/c"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format: human-readable text or JSON lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the components G_k by the gcd criterion.
    Classify {
        #[command(flatten)]
        manifold: ManifoldArgs,
        #[command(flatten)]
        group: GroupArg,
        /// Classify Ω^i G_k(M) (2 or 3); without it, G_k(P⁴(c)).
        #[arg(long)]
        loops: Option<u32>,
        #[command(flatten)]
        loc: LocArgs,
    },
    /// Homotopy decomposition of a looped gauge group.
    Decompose {
        #[command(flatten)]
        manifold: ManifoldArgs,
        #[command(flatten)]
        group: GroupArg,
        /// Bundle component k ∈ Z/c.
        #[arg(long, default_value_t = 1)]
        k: u64,
        /// Number of loops, 2 or 3.
        #[arg(long, required_unless_present = "away_from_c")]
        loops: Option<u32>,
        /// Decompose G_k(M) itself, localized away from c.
        #[arg(long, conflicts_with = "loops")]
        away_from_c: bool,
        #[command(flatten)]
        loc: LocArgs,
    },
    /// Upper bounds on homotopy exponents.
    Exponent {
        #[command(flatten)]
        manifold: OptManifoldArgs,
        #[arg(long)]
        group: Option<LieGroup>,
        #[arg(long)]
        p: Option<u64>,
        /// Print a whole table instead of one bound.
        #[arg(long, value_enum)]
        table: Option<Table>,
    },
    /// Stable homotopy groups of SU and Spin gauge groups.
    Bott {
        #[command(flatten)]
        manifold: ManifoldArgs,
        #[arg(long, default_value = "SU")]
        family: StableFamily,
        /// A single degree; without it, one row per residue class.
        #[arg(long)]
        r: Option<u32>,
        /// Localize away from 2c rather than c.
        #[arg(long)]
        away_from_2: bool,
    },
    /// Rational decompositions for a space X given by its Betti numbers.
    Rational {
        /// Betti numbers b_0, b_1, ... as a comma list.
        #[arg(long, conflicts_with = "m")]
        betti: Option<HilbertSeries>,
        /// Use the Betti numbers of M with H_2 of rank m - 1.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, required_unless_present = "exterior")]
        group: Option<LieGroup>,
        /// Exterior generator degrees of a custom group model.
        #[arg(long, value_delimiter = ',', conflicts_with = "group")]
        exterior: Option<Vec<u32>>,
        /// Polynomial generator degrees of a custom group model.
        #[arg(long, value_delimiter = ',', requires = "exterior")]
        polynomial: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = View::Loops)]
        view: View,
        /// The based gauge group.
        #[arg(long)]
        based: bool,
    },
    /// Homotopy groups of Moore spaces.
    Moore {
        #[arg(long)]
        c: u64,
        /// Coefficient target such as S3@4 or P4@5.
        #[arg(long)]
        target: Option<CoefficientTarget>,
    },
    /// Homology of M, or a splitting of its suspension.
    Homology {
        #[command(flatten)]
        manifold: ManifoldArgs,
        /// Split Σ^t M instead (t = 2, 3, 4).
        #[arg(long)]
        suspend: Option<u32>,
    },
}

#[derive(Debug, Args)]
struct ManifoldArgs {
    /// Order of π₁(M).
    #[arg(long)]
    c: u64,
    /// H₂(M) is free of rank m - 1.
    #[arg(long)]
    m: u32,
    #[arg(long)]
    spin: bool,
    /// Stably parallelizable.
    #[arg(long)]
    sp: bool,
    /// The top cell splits off after one suspension.
    #[arg(long)]
    stc: bool,
}

impl ManifoldArgs {
    fn spec(&self) -> ManifoldSpec {
        ManifoldSpec::new(self.c, self.m)
            .spin(self.spin)
            .stably_parallelizable(self.sp)
            .single_top_cell(self.stc)
    }
}

#[derive(Debug, Args)]
struct OptManifoldArgs {
    #[arg(long)]
    c: Option<u64>,
    #[arg(long, default_value_t = 2)]
    m: u32,
    #[arg(long)]
    spin: bool,
    #[arg(long)]
    sp: bool,
}

#[derive(Debug, Args)]
struct GroupArg {
    /// family:param, e.g. SU:4, Sp:2, Spin:9, or G2, F4, E6, E7, E8.
    #[arg(long)]
    group: LieGroup,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct LocArgs {
    /// Localize at the prime P.
    #[arg(long, value_name = "P")]
    at_p: Option<u64>,
    /// Localize away from a comma list of primes.
    #[arg(long, value_delimiter = ',', value_name = "PRIMES")]
    away: Option<Vec<u64>>,
    /// Rationalize.
    #[arg(long)]
    rational: bool,
}

impl LocArgs {
    fn localization(&self) -> gauge5::Result<Localization> {
        if let Some(p) = self.at_p {
            Localization::at(p)
        } else if let Some(ps) = &self.away {
            Localization::away_from(ps.iter().copied())
        } else if self.rational {
            Ok(Localization::Rational)
        } else {
            Ok(Localization::Integral)
        }
    }

    fn is_set(&self) -> bool {
        self.at_p.is_some() || self.away.is_some() || self.rational
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Table {
    Exceptional,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum View {
    /// Product of iterated loop spaces of G.
    Loops,
    /// Product of spheres and Eilenberg-MacLane spaces.
    Em,
    /// The classifying-space factor B*.
    BStar,
    /// Generators of the rational cohomology of the gauge group.
    Ring,
    /// Generators of the rational cohomology of B*.
    RingBStar,
}

fn run(cmd: Command, out: &mut Out) -> gauge5::Result<()> {
    match cmd {
        Command::Classify {
            manifold,
            group,
            loops,
            loc,
        } => {
            let report = match loops {
                Some(i) => classify_looped_manifold(
                    &manifold.spec(),
                    &group.group,
                    i,
                    &loc.localization()?,
                )?,
                None => classify_moore(&group.group, manifold.c)?,
            };
            out.classification(&report)
        }
        Command::Decompose {
            manifold,
            group,
            k,
            loops,
            away_from_c,
            loc,
        } => {
            let m = manifold.spec();
            let g = group.group;
            let expr = if away_from_c {
                let loc = if loc.is_set() {
                    loc.localization()?
                } else {
                    Localization::away_from_divisors(m.c)?
                };
                gauge_away_from(&m, &g, &loc)?
            } else {
                let loc = loc.localization()?;
                match loops {
                    Some(2) => loops2_gauge_in(&m, &g, k, &loc)?,
                    Some(3) => loops3_gauge_in(&m, &g, k, &loc)?,
                    other => {
                        return Err(Error::InvalidInput(format!(
                            "--loops must be 2 or 3, got {}",
                            other.map_or("nothing".into(), |i| i.to_string())
                        )))
                    }
                }
            };
            out.space(&expr)
        }
        Command::Exponent {
            manifold,
            group,
            p,
            table,
        } => {
            if let Some(Table::Exceptional) = table {
                return out.exponent_table(&exceptional_table(p)?);
            }
            let g = group.ok_or_else(|| Error::InvalidInput("--group is required".into()))?;
            let p = p.ok_or_else(|| Error::InvalidInput("--p is required".into()))?;
            let c = manifold
                .c
                .ok_or_else(|| Error::InvalidInput("--c is required".into()))?;
            let m = ManifoldSpec::new(c, manifold.m)
                .spin(manifold.spin)
                .stably_parallelizable(manifold.sp);
            out.exponent(&g, &exp_bound(&m, &g, p)?)
        }
        Command::Bott {
            manifold,
            family,
            r,
            away_from_2,
        } => {
            let m = manifold.spec();
            let away_from_2 = away_from_2 || !m.spin;
            match r {
                Some(r) => {
                    let q = StableQuery {
                        manifold: m,
                        family,
                        r,
                        away_from_2,
                    };
                    out.bott(family, &[(r, stable_pi_gauge(&q)?)], None)
                }
                None => {
                    let period = if family == StableFamily::SU { 2 } else { 8 };
                    out.bott(family, &bott_table(&m, family, away_from_2)?, Some(period))
                }
            }
        }
        Command::Rational {
            betti,
            m,
            group,
            exterior,
            polynomial,
            view,
            based,
        } => {
            let x = match (betti, m) {
                (Some(x), _) => x,
                (None, Some(m)) => HilbertSeries::of_manifold(m)?,
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "one of --betti or --m is required".into(),
                    ))
                }
            };
            let model = match (group, exterior) {
                (Some(g), _) => RationalGroupModel::of_lie(&g)?,
                (None, Some(ext)) => RationalGroupModel::new(ext, polynomial.unwrap_or_default())?,
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "--group or --exterior is required".into(),
                    ))
                }
            };
            match view {
                View::Loops => out.space(&rational_gauge(&x, &model, based)?),
                View::Em => out.space(&em_expansion(&x, &model, based)?),
                View::BStar => out.space(&rational_b_star(&x, &model)?),
                View::Ring => out.ledger(&rational_cohomology_ring(
                    CohomologyTarget::Gauge,
                    &x,
                    &model,
                )?),
                View::RingBStar => out.ledger(&rational_cohomology_ring(
                    CohomologyTarget::BStar,
                    &x,
                    &model,
                )?),
            }
        }
        Command::Moore { c, target } => match target {
            Some(t) => out.groups(&[(format!("{t:?}"), pi_with_coefficients(t, c)?)]),
            None => {
                out.groups(&[
                    ("π₆(P⁴)".to_string(), pi6_p4(c)?),
                    ("π₇(P⁵)".to_string(), pi7_p5(c)?),
                ])?;
                out.value("suspension image order", suspension_image_order(c)?)
            }
        },
        Command::Homology { manifold, suspend } => {
            let m = manifold.spec();
            match suspend {
                Some(t) => out.wedge(t, &suspension_splitting(&m, t)?),
                None => {
                    let h = homology(&m)?;
                    let named: Vec<(String, _)> = h
                        .into_iter()
                        .enumerate()
                        .map(|(i, g)| (format!("H{i}"), g))
                        .collect();
                    out.groups(&named)
                }
            }
        }
    }
}

fn install_catalog() -> gauge5::Result<()> {
    if let Some(path) = std::env::var_os("GAUGE_CATALOG") {
        catalog::install(Catalog::from_path(path)?)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.format);
    let result = install_catalog().and_then(|()| run(cli.command, &mut out));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
