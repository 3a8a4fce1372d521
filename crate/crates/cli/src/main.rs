//! Command-line surface: cohomology tables, Saito-Kurokawa multiplicities,
//! cusp-form dimensions, Hodge-class verdicts for the universal families,
//! and a fixture consistency check.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hodgescan_core::cohomology::{cohomological_reps, hodge_bigrading};
use hodgescan_core::geometry::{hc_verdict, preset_twist, Base, FamilySpec, Fiber, TwistPreset};
use hodgescan_core::hodge::TwistConstant;
use hodgescan_core::lie::{build_root_system, GroupTag, Weight};
use hodgescan_core::modforms::{self, dim_cusp, CuspSpaceSpec, Restriction, Sign};
use hodgescan_core::multiplicity::{mult_lookup, mult_sigma, GammaSpec, MultSymbol};
use hodgescan_core::reps::Irrep;
use hodgescan_core::scalar::{Rat, Scalar};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hodgescan",
    about = "Hodge-graded cohomology of automorphic local systems on ball quotients and Siegel threefolds",
    version
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomological representations and bigraded tables for a coefficient
    /// system
    Tables {
        /// Group: SU21, SU31 or SP4
        group: String,
        /// Highest weight, comma-separated fundamental coordinates
        #[arg(long, short = 'v')]
        v: String,
        /// Twist preset: none, curve, k3 or cy3
        #[arg(long, default_value = "curve")]
        preset: String,
        /// Read the weight as the classical Sp(4) labels (a, b) with
        /// a >= b >= 0 instead of fundamental coordinates
        #[arg(long)]
        ab: bool,
        /// Arithmetic group for multiplicity lookups (prime paramodular
        /// level; 1 means the full Siegel modular group)
        #[arg(long)]
        para: Option<u64>,
    },
    /// Multiplicity of sigma_k in the discrete spectrum at paramodular
    /// level p
    Mult {
        #[arg(long)]
        k: i64,
        /// Prime paramodular level; 1 means the full Siegel modular group
        #[arg(long)]
        p: u64,
    },
    /// Cusp form dimensions for Gamma_0(N)
    Dims {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        n: u64,
        /// full or new
        #[arg(long, default_value = "full")]
        restriction: String,
        /// none, plus or minus (prime level new subspaces only)
        #[arg(long, default_value = "none")]
        sign: String,
    },
    /// Hodge-class verdict for a universal family
    Verdict {
        /// Family: picard_curve, genus2_curve, abelian_surface, k3_rho16,
        /// rohde_cy3
        family: String,
        /// Fiber power
        #[arg(long, short = 'n', default_value_t = 1)]
        n: u32,
        /// Prime paramodular level (Siegel families)
        #[arg(long)]
        para: Option<u64>,
        /// Use the full Siegel modular group
        #[arg(long)]
        sp4z: bool,
        /// Base for the Picard curve family: ball2 or ball3
        #[arg(long)]
        base: Option<String>,
        /// Label for a generic arithmetic subgroup
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Diff the dimension formulas against the packaged fixture table
    FixturesCheck,
}

#[derive(Serialize)]
struct TablesDoc {
    schema_version: u32,
    group: String,
    highest_weight: String,
    twist: String,
    weight: i64,
    gamma: String,
    rows: Vec<TableDocRow>,
}

#[derive(Serialize)]
struct TableDocRow {
    rep: String,
    min_k_type: String,
    degree: usize,
    p: i64,
    q: i64,
    dim: u64,
    mult: MultSymbol,
}

#[derive(Serialize)]
struct MultDoc {
    schema_version: u32,
    k: i64,
    gamma: String,
    multiplicity: MultSymbol,
}

#[derive(Serialize)]
struct DimsDoc {
    schema_version: u32,
    weight: i64,
    level: u64,
    restriction: String,
    al_sign: String,
    dim: u64,
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight<Rat>> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().context("weight coordinate"))
        .collect::<Result<_>>()?;
    if coords.len() != rank {
        bail!("expected {rank} coordinates, got {}", coords.len());
    }
    Ok(Weight::from_ints(&coords))
}

fn gamma_from(para: Option<u64>, sp4z: bool, generic: Option<String>) -> GammaSpec {
    if sp4z {
        return GammaSpec::FullSp4Z;
    }
    match (para, generic) {
        (Some(1), _) => GammaSpec::FullSp4Z,
        (Some(p), _) => GammaSpec::ParamodularPrime(p),
        (None, Some(label)) => GammaSpec::Generic(label),
        (None, None) => GammaSpec::Generic("Gamma".to_string()),
    }
}

fn run_tables(
    group: &str,
    v: &str,
    preset: &str,
    ab: bool,
    para: Option<u64>,
    format: Format,
) -> Result<()> {
    let group = GroupTag::parse(group)
        .ok_or_else(|| anyhow!("unknown group {group}; expected SU21, SU31 or SP4"))?;
    let preset = TwistPreset::parse(preset)
        .ok_or_else(|| anyhow!("unknown preset; expected none, curve, k3 or cy3"))?;
    let rs = build_root_system::<Rat>(group);
    let hw = parse_weight(v, rs.rank)?;
    let hw = if ab {
        if group != GroupTag::Sp4 {
            bail!("--ab labels are specific to SP4");
        }
        let a = hw.coords[0].to_int().unwrap();
        let b = hw.coords[1].to_int().unwrap();
        if a < b {
            bail!("Sp(4) labels require a >= b >= 0");
        }
        Weight::from_ints(&[a - b, b])
    } else {
        hw
    };
    let irrep = Irrep::new(group, hw.clone()).map_err(|e| anyhow!("{e}"))?;
    let (c, w) = preset_twist(group, &hw, preset);
    let gamma = gamma_from(para, false, None);

    let mut rows = Vec::new();
    for rep in cohomological_reps(&rs, &irrep) {
        let table = hodge_bigrading(&rs, &rep, &irrep, &TwistConstant(c), w)
            .map_err(|e| anyhow!("inconsistent twist/weight for {}: {e}", rep.label))?;
        let mult = mult_lookup(&rep.label, &gamma);
        for (&(i, p, q), &dim) in &table.entries {
            rows.push(TableDocRow {
                rep: rep.label.to_string(),
                min_k_type: rep.min_k_type.to_string(),
                degree: i,
                p,
                q,
                dim,
                mult: mult.clone(),
            });
        }
    }
    let doc = TablesDoc {
        schema_version: 1,
        group: group.to_string(),
        highest_weight: hw.to_string(),
        twist: c.to_string(),
        weight: w,
        gamma: gamma.to_string(),
        rows,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
        Format::Human => {
            println!(
                "{} coefficients V^{} twisted by {{{}}}, weight {} over {}",
                doc.group, doc.highest_weight, doc.twist, doc.weight, doc.gamma
            );
            println!(
                "{:<12} {:<16} {:>3} {:>8} {:>5} {:>8}",
                "rep", "min K-type", "H^i", "(p,q)", "dim", "mult"
            );
            for r in &doc.rows {
                println!(
                    "{:<12} {:<16} {:>3} {:>8} {:>5} {:>8}",
                    r.rep,
                    r.min_k_type,
                    r.degree,
                    format!("({},{})", r.p, r.q),
                    r.dim,
                    r.mult.to_string()
                );
            }
        }
    }
    Ok(())
}

fn run_mult(k: i64, p: u64, format: Format) -> Result<()> {
    let gamma = if p == 1 {
        GammaSpec::FullSp4Z
    } else {
        GammaSpec::ParamodularPrime(p)
    };
    let m = mult_sigma(k, &gamma).map_err(|e| anyhow!("{e}"))?;
    let doc = MultDoc {
        schema_version: 1,
        k,
        gamma: gamma.to_string(),
        multiplicity: m,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
        Format::Human => match &doc.multiplicity {
            MultSymbol::Known { value, provenance } => {
                println!("mult(sigma_{k}, {}) = {value}   [{provenance}]", doc.gamma)
            }
            MultSymbol::Unknown { gamma, rep } => {
                println!(
                    "mult(sigma_{k}, {}) = m({gamma},{rep})  (not computed)",
                    doc.gamma
                )
            }
        },
    }
    Ok(())
}

fn run_dims(k: i64, n: u64, restriction: &str, sign: &str, format: Format) -> Result<()> {
    let restriction = match restriction.to_ascii_lowercase().as_str() {
        "full" => Restriction::Full,
        "new" => Restriction::New,
        other => bail!("unknown restriction {other}; expected full or new"),
    };
    let al_sign = match sign.to_ascii_lowercase().as_str() {
        "none" => Sign::None,
        "plus" | "+" => Sign::Plus,
        "minus" | "-" => Sign::Minus,
        other => bail!("unknown sign {other}; expected none, plus or minus"),
    };
    let spec = CuspSpaceSpec {
        weight: k,
        level: n,
        restriction,
        al_sign,
    };
    let dim = dim_cusp(&spec).map_err(|e| anyhow!("{e}"))?;
    let doc = DimsDoc {
        schema_version: 1,
        weight: k,
        level: n,
        restriction: format!("{restriction:?}").to_lowercase(),
        al_sign: format!("{al_sign:?}").to_lowercase(),
        dim,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
        Format::Human => {
            let sup = match al_sign {
                Sign::None => String::new(),
                Sign::Plus => ",+".into(),
                Sign::Minus => ",-".into(),
            };
            let res = match restriction {
                Restriction::Full => String::new(),
                Restriction::New => format!("^new{sup}"),
            };
            println!("dim S_{k}(Gamma_0({n})){res} = {dim}");
        }
    }
    Ok(())
}

fn run_verdict(
    family: &str,
    n: u32,
    para: Option<u64>,
    sp4z: bool,
    base: Option<String>,
    gamma: Option<String>,
    format: Format,
) -> Result<()> {
    let fiber = Fiber::parse(family).ok_or_else(|| {
        anyhow!(
            "unknown family {family}; expected picard_curve, genus2_curve, abelian_surface, k3_rho16 or rohde_cy3"
        )
    })?;
    let base = match base {
        Some(b) => Base::parse(&b)
            .ok_or_else(|| anyhow!("unknown base {b}; expected ball2, ball3 or siegel3"))?,
        None => match fiber {
            Fiber::PicardCurve | Fiber::K3Rho16 | Fiber::RohdeCy3 => Base::Ball2,
            Fiber::Genus2Curve | Fiber::AbelianSurface => Base::Siegel3,
        },
    };
    let gamma = gamma_from(para, sp4z, gamma);
    let family = FamilySpec::new(base, fiber, n, gamma).map_err(|e| anyhow!("{e}"))?;
    let verdict = hc_verdict(&family);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&verdict)?),
        Format::Human => {
            println!(
                "{:?} over {:?}, fiber power {}, Gamma = {}: total space dimension {}",
                verdict.fiber, verdict.base, verdict.power, verdict.gamma, verdict.total_dim
            );
            for cell in &verdict.cells {
                let alg = if cell.algebraic_base_classes > 0 {
                    format!(
                        "  [+{} algebraic from the base]",
                        cell.algebraic_base_classes
                    )
                } else {
                    String::new()
                };
                let status = match &cell.status {
                    hodgescan_core::geometry::CellStatus::NoHodgeClasses => {
                        "no Hodge classes".to_string()
                    }
                    hodgescan_core::geometry::CellStatus::HodgeClasses {
                        dim, rational, ..
                    } => format!(
                        "{dim} Hodge class(es){}",
                        if *rational {
                            ", rational by purity"
                        } else {
                            ""
                        }
                    ),
                    hodgescan_core::geometry::CellStatus::Unknown { reason } => {
                        format!("unknown ({reason})")
                    }
                };
                println!(
                    "  cell (p={}, i={}) on H^{}(Y, H^{}(fiber)): {}{}",
                    cell.p, cell.i, cell.i, cell.fiber_degree, status, alg
                );
            }
            let summary = match &verdict.summary {
                hodgescan_core::geometry::Summary::HcHoldsVacuously => {
                    "verdict: no nontrivial Hodge classes; the conjecture holds vacuously".into()
                }
                hodgescan_core::geometry::Summary::HcOpenWithClasses { cells } => format!(
                    "verdict: Hodge classes present at {cells:?}; cycle representatives unknown"
                ),
                hodgescan_core::geometry::Summary::Inconclusive { cells } => {
                    format!("verdict: inconclusive at {cells:?} (unknown multiplicities)")
                }
            };
            println!("{summary}");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct FixtureCheckDoc {
    schema_version: u32,
    rows: usize,
    mismatches: Vec<String>,
}

fn run_fixtures_check(format: Format) -> Result<()> {
    let text = match std::env::var("HODGESCAN_FIXTURES") {
        Ok(path) => std::fs::read_to_string(&path)
            .with_context(|| format!("reading fixture override {path}"))?,
        Err(_) => modforms::BUNDLED_FIXTURES.to_string(),
    };
    let rows = modforms::parse_fixtures(&text);
    let bad = modforms::diff_fixtures(&rows);
    let doc = FixtureCheckDoc {
        schema_version: 1,
        rows: rows.len(),
        mismatches: bad
            .iter()
            .map(|(row, got)| {
                format!(
                    "k={} N={} {:?} {:?}: fixture {} vs formula {got}",
                    row.weight, row.level, row.restriction, row.al_sign, row.dim
                )
            })
            .collect(),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&doc)?),
        Format::Human => {
            if doc.mismatches.is_empty() {
                println!("{} fixture rows agree with the formulas", doc.rows);
            } else {
                for m in &doc.mismatches {
                    eprintln!("mismatch: {m}");
                }
            }
        }
    }
    if doc.mismatches.is_empty() {
        Ok(())
    } else {
        bail!("{} fixture mismatches", doc.mismatches.len())
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Tables {
            group,
            v,
            preset,
            ab,
            para,
        } => run_tables(group, v, preset, *ab, *para, cli.format),
        Command::Mult { k, p } => run_mult(*k, *p, cli.format),
        Command::Dims {
            k,
            n,
            restriction,
            sign,
        } => run_dims(*k, *n, restriction, sign, cli.format),
        Command::Verdict {
            family,
            n,
            para,
            sp4z,
            base,
            gamma,
        } => run_verdict(
            family,
            *n,
            *para,
            *sp4z,
            base.clone(),
            gamma.clone(),
            cli.format,
        ),
        Command::FixturesCheck => run_fixtures_check(cli.format),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}
