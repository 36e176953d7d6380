//! Command-line front end. Every command prints one JSON envelope
//! `{command, inputs, result, warnings, version}` with sorted keys, except
//! `gl3 figure --format csv|svg`, which prints the raw document.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::functor::{
    parabolic_image, pi1_pushforward, pi1_pushforward_multiplication_convention, transfer_stratum, Isogeny, IsogenyKind,
};
use crate::gl3borel::{classify, closure_dag, figure_data, hirschowitz_ceiling, Window};
use crate::lattice::Character;
use crate::parabolic::{degree_pushforward, parse_list, Lagrangian, NumericalType, ParabolicType};
use crate::rootdata::{root_system_of, Group, TopologicalType};
use crate::segre::{expand_to_torus, segre_value};
use crate::strata::{closure_order, hn_upper_bound, CurveContext, DimKind, Family, Nonempty, StratumRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "segre-strata",
    version,
    about = "Segre stratification data for principal bundles on curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, center and fundamental group of a group.
    Group(GroupArgs),
    /// Roots and simple roots in the ε-basis.
    Roots(GroupArgs),
    /// Levi blocks and quotient roots of a parabolic.
    Parabolic(ParabolicArgs),
    /// Determinant of the isotropy representation on g/p.
    Isotropy(ParabolicArgs),
    /// Segre value of a numerical type.
    Segre(SegreArgs),
    /// One stratum record.
    Stratum(StratumArgs),
    /// All s with nonempty strata, and the undecided band.
    Sigma(FamilyArgs),
    /// Closure relation between two strata of a family.
    Closure(ClosureArgs),
    /// Transfer a stratum along a central isogeny.
    Transfer(TransferArgs),
    /// Borel reductions of rank-3 bundles.
    #[command(subcommand)]
    Gl3(Gl3Command),
}

#[derive(Debug, Args, Serialize)]
struct GroupArgs {
    /// e.g. GL(3), SL(6)/mu(2), Sp(4), Spin(8)
    name: String,
}

#[derive(Debug, Clone, Args, Serialize)]
struct FlagArgs {
    /// Type A block sizes, e.g. 1,2
    #[arg(long)]
    flag: Option<String>,
    /// Types B/C/D isotropic dimensions, e.g. 3 or 1,2,3
    #[arg(long = "isotropic-flag")]
    isotropic_flag: Option<String>,
    /// Which maximal isotropic class in SO(2n): 1 or 2
    #[arg(long, default_value_t = 1)]
    lagrangian: u8,
    /// The Borel subgroup
    #[arg(long)]
    borel: bool,
}

#[derive(Debug, Args, Serialize)]
struct ParabolicArgs {
    name: String,
    #[command(flatten)]
    #[serde(flatten)]
    flag: FlagArgs,
}

#[derive(Debug, Args, Serialize)]
struct SegreArgs {
    name: String,
    #[command(flatten)]
    #[serde(flatten)]
    flag: FlagArgs,
    /// One degree per GL block of the Levi
    #[arg(long, allow_hyphen_values = true)]
    degrees: String,
}

#[derive(Debug, Args, Serialize)]
struct FamilyArgs {
    name: String,
    #[command(flatten)]
    #[serde(flatten)]
    flag: FlagArgs,
    /// Topological type (degree for GL, residue otherwise)
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    delta: i64,
    #[arg(long)]
    genus: i64,
}

#[derive(Debug, Args, Serialize)]
struct StratumArgs {
    #[command(flatten)]
    #[serde(flatten)]
    family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
}

#[derive(Debug, Args, Serialize)]
struct ClosureArgs {
    #[command(flatten)]
    #[serde(flatten)]
    family: FamilyArgs,
    #[arg(long, allow_hyphen_values = true)]
    s1: i64,
    #[arg(long, allow_hyphen_values = true)]
    s2: i64,
}

#[derive(Debug, Args, Serialize)]
struct TransferArgs {
    /// adjoint | central-quotient | quotient-to-adjoint | adjoint-symplectic | cover
    #[arg(long)]
    iso: String,
    /// r for GL/SL/PGL/Spin/SO kinds, 2n for adjoint-symplectic
    #[arg(long)]
    rank: u32,
    /// order of μ_m for the SL(r)/μ_m kinds
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[command(flatten)]
    #[serde(flatten)]
    flag: FlagArgs,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    delta: i64,
    #[arg(long)]
    genus: i64,
    #[arg(long, allow_hyphen_values = true)]
    s: i64,
}

#[derive(Debug, Subcommand)]
enum Gl3Command {
    /// Classify one type (d1,d2,d3).
    Classify(Gl3ClassifyArgs),
    /// Upper bound on the Borel Segre invariant.
    Ceiling(Gl3Base),
    /// Closure edges over a window.
    Dag(Gl3WindowArgs),
    /// Figure over a window.
    Figure(Gl3FigureArgs),
}

#[derive(Debug, Args, Serialize)]
struct Gl3Base {
    #[arg(long)]
    genus: i64,
    #[arg(long, allow_hyphen_values = true)]
    delta: i64,
}

#[derive(Debug, Args, Serialize)]
struct Gl3ClassifyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    base: Gl3Base,
    /// d1,d2,d3
    #[arg(long, allow_hyphen_values = true)]
    d: String,
}

#[derive(Debug, Args, Serialize)]
struct Gl3WindowArgs {
    #[command(flatten)]
    #[serde(flatten)]
    base: Gl3Base,
    /// d1min:d1max,d3min:d3max
    #[arg(long, allow_hyphen_values = true)]
    window: String,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FigureFormat {
    Csv,
    Svg,
    Json,
}

#[derive(Debug, Args, Serialize)]
struct Gl3FigureArgs {
    #[command(flatten)]
    #[serde(flatten)]
    window: Gl3WindowArgs,
    #[arg(long, value_enum, default_value_t = FigureFormat::Json)]
    format: FigureFormat,
    #[arg(long)]
    out: Option<String>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    inputs: Value,
    result: Value,
    warnings: Vec<String>,
}

/// Either an envelope or a raw document for stdout.
enum Output {
    Envelope(Report),
    Raw(String),
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

fn parse_group(name: &str) -> Result<Group> {
    name.parse()
}

fn parse_ints(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {text:?}")))
        })
        .collect()
}

fn parabolic_from(group: Group, f: &FlagArgs) -> Result<ParabolicType> {
    let tag = match f.lagrangian {
        1 => Lagrangian::First,
        2 => Lagrangian::Second,
        other => return Err(Error::Parse(format!("--lagrangian must be 1 or 2, got {other}"))),
    };
    let chosen = [f.flag.is_some(), f.isotropic_flag.is_some(), f.borel]
        .iter()
        .filter(|&&b| b)
        .count();
    if chosen != 1 {
        return Err(Error::Parse(
            "give exactly one of --flag, --isotropic-flag, --borel".into(),
        ));
    }
    if f.borel {
        return Ok(ParabolicType::borel(group));
    }
    if let Some(flag) = &f.flag {
        return ParabolicType::from_blocks(group, &parse_list(flag)?);
    }
    let dims = parse_list(f.isotropic_flag.as_deref().unwrap_or_default())?;
    ParabolicType::from_isotropic_flag(group, &dims, tag)
}

fn family_from(args: &FamilyArgs) -> Result<(Family, CurveContext)> {
    let group = parse_group(&args.name)?;
    let p = parabolic_from(group, &args.flag)?;
    let ctx = CurveContext::new(args.genus)?;
    let delta = TopologicalType::reduce(&group, args.delta);
    Ok((Family::from_parts(group, delta, &p)?, ctx))
}

fn family_warnings(family: &Family, records: &[&StratumRecord]) -> Vec<String> {
    let mut w = Vec::new();
    if matches!(family, Family::Gl { .. } | Family::Pgl { .. })
        && records.iter().any(|r| r.nonempty == Nonempty::Unknown)
    {
        w.push(
            "s lies between the n(r-n)(g-1)+(n-1) bound and the n(r-n)(g-1)+epsilon bound; nonemptiness undecided"
                .to_string(),
        );
    }
    w
}

fn cmd_group(a: &GroupArgs) -> Result<Report> {
    let g = parse_group(&a.name)?;
    Ok(Report {
        command: "group",
        inputs: to_value(a),
        result: json!({
            "group": g,
            "cartan_type": g.cartan_type(),
            "semisimple_rank": g.semisimple_rank(),
            "torus_rank": g.torus_rank(),
            "dim": g.dim(),
            "dim_center": g.dim_center(),
            "pi1": g.pi1().to_string(),
            "pi1_structure": g.pi1(),
        }),
        warnings: match g {
            Group::SLmod { r, m } => vec![format!(
                "pi1(SL({r})/mu({m})) is taken as Z_{m}, the kernel of SL({r}) -> SL({r})/mu({m})"
            )],
            _ => vec![],
        },
    })
}

fn cmd_roots(a: &GroupArgs) -> Result<Report> {
    let g = parse_group(&a.name)?;
    let rs = root_system_of(&g);
    Ok(Report {
        command: "roots",
        inputs: to_value(a),
        result: json!({
            "group": g,
            "cartan_type": rs.cartan_type,
            "rank": rs.rank,
            "count": rs.roots.len(),
            "roots": rs.roots,
            "simple_roots": rs.simple_roots,
        }),
        warnings: vec![],
    })
}

fn cmd_parabolic(a: &ParabolicArgs) -> Result<Report> {
    let g = parse_group(&a.name)?;
    let p = parabolic_from(g, &a.flag)?;
    let blocks: Vec<String> = p.levi_blocks().iter().map(|b| b.name()).collect();
    Ok(Report {
        command: "parabolic",
        inputs: to_value(a),
        result: json!({
            "parabolic": p,
            "levi_blocks": blocks,
            "dim": p.dim(),
            "flag_dim": p.flag_dim(),
            "quotient_roots": p.quotient_roots()?,
        }),
        warnings: vec![],
    })
}

fn cmd_isotropy(a: &ParabolicArgs) -> Result<Report> {
    let g = parse_group(&a.name)?;
    let p = parabolic_from(g, &a.flag)?;
    Ok(Report {
        command: "isotropy",
        inputs: to_value(a),
        result: json!({
            "parabolic": p,
            "det_iota": p.isotropy_det_char()?,
            "quotient_roots": p.quotient_roots()?,
        }),
        warnings: vec![],
    })
}

fn cmd_segre(a: &SegreArgs) -> Result<Report> {
    let g = parse_group(&a.name)?;
    let p = parabolic_from(g, &a.flag)?;
    let d = NumericalType::new(p.clone(), parse_ints(&a.degrees)?)?;
    let det: Character = p.isotropy_det_char()?;
    Ok(Report {
        command: "segre",
        inputs: to_value(a),
        result: json!({
            "parabolic": p,
            "block_degrees": d.block_degrees(),
            "cocharacter": expand_to_torus(&d)?,
            "det_iota": det,
            "segre_value": segre_value(&d)?,
            "degree_pushforward": degree_pushforward(&d)?,
        }),
        warnings: vec![],
    })
}

fn cmd_stratum(a: &StratumArgs) -> Result<Report> {
    let (family, ctx) = family_from(&a.family)?;
    let rec = family.record(a.s, ctx)?;
    let warnings = family_warnings(&family, &[&rec]);
    Ok(Report {
        command: "stratum",
        inputs: to_value(a),
        result: to_value(&rec),
        warnings,
    })
}

fn cmd_sigma(a: &FamilyArgs) -> Result<Report> {
    let (family, ctx) = family_from(a)?;
    let sigma = family.sigma_set(ctx)?;
    Ok(Report {
        command: "sigma",
        inputs: to_value(a),
        result: json!({
            "group": family.group(),
            "flag": family.parabolic().flag_signature(),
            "nonempty": sigma.nonempty,
            "unknown": sigma.unknown,
            "proven_bound": family.proven_bound(ctx)?,
            "outer_bound": family.outer_bound(ctx)?,
            "hn_upper_bound": hn_upper_bound(&family.parabolic(), ctx)?,
        }),
        warnings: vec![],
    })
}

fn cmd_closure(a: &ClosureArgs) -> Result<Report> {
    let (family, _) = family_from(&a.family)?;
    Ok(Report {
        command: "closure",
        inputs: to_value(a),
        result: json!({ "relation": closure_order(&family, a.s1, a.s2)? }),
        warnings: vec![],
    })
}

fn isogeny_from(a: &TransferArgs) -> Result<Isogeny> {
    match a.iso.parse::<IsogenyKind>()? {
        IsogenyKind::Adjoint => Isogeny::adjoint(a.rank),
        IsogenyKind::CentralQuotient => Isogeny::central_quotient(a.rank, a.m),
        IsogenyKind::QuotientToAdjoint => Isogeny::quotient_to_adjoint(a.rank, a.m),
        IsogenyKind::AdjointSymplectic => Isogeny::adjoint_symplectic(a.rank),
        IsogenyKind::Cover => Isogeny::cover(a.rank),
    }
}

fn cmd_transfer(a: &TransferArgs) -> Result<Report> {
    let iso = isogeny_from(a)?;
    let ctx = CurveContext::new(a.genus)?;
    let source = iso.source()?;
    let p = parabolic_from(source, &a.flag)?;
    let delta = TopologicalType::reduce(&source, a.delta);
    let mut warnings = Vec::new();
    let source_rec = match Family::from_parts(source, delta, &p) {
        Ok(f) => f.record(a.s, ctx)?,
        Err(Error::UnsupportedFamily(msg)) => {
            warnings.push(format!(
                "source stratum not in catalog ({msg}); status reported as unknown"
            ));
            StratumRecord {
                group: source,
                delta,
                parabolic: p.clone(),
                s: a.s,
                nonempty: Nonempty::Unknown,
                dim: None,
                dim_is: DimKind::Unknown,
            }
        }
        Err(e) => return Err(e),
    };
    let target_rec = transfer_stratum(&iso, &source_rec, ctx)?;
    let alt = pi1_pushforward_multiplication_convention(&iso, delta)?;
    if alt.is_some() {
        warnings.push(
            "pi1 of SL(r)/mu(m) read as Z_m with pushforward d -> (r/m)d; the Z_(r/m), d -> m*d reading is reported alongside"
                .to_string(),
        );
    }
    if !iso.is_surjective() {
        warnings.push("map on moduli not known to be surjective; only nonemptiness carries over".to_string());
    }
    Ok(Report {
        command: "transfer",
        inputs: to_value(a),
        result: json!({
            "isogeny": iso,
            "source_group": source,
            "target_group": iso.target()?,
            "surjective": iso.is_surjective(),
            "source": source_rec,
            "target": target_rec,
            "target_parabolic": parabolic_image(&iso, &p)?,
            "pi1": {
                "standard": pi1_pushforward(&iso, delta)?,
                "multiplication_convention": alt,
            },
        }),
        warnings,
    })
}

fn gl3(cmd: &Gl3Command) -> Result<Output> {
    let base = match cmd {
        Gl3Command::Classify(a) => &a.base,
        Gl3Command::Ceiling(a) => a,
        Gl3Command::Dag(a) => &a.base,
        Gl3Command::Figure(a) => &a.window.base,
    };
    let ctx = CurveContext::new(base.genus)?;
    let delta = base.delta;
    let report = match cmd {
        Gl3Command::Classify(a) => {
            let d = parse_ints(&a.d)?;
            let d: [i64; 3] = d
                .try_into()
                .map_err(|v: Vec<i64>| Error::Parse(format!("--d needs three integers, got {}", v.len())))?;
            Report {
                command: "gl3 classify",
                inputs: to_value(a),
                result: to_value(&classify(&d, delta, ctx)?),
                warnings: vec![],
            }
        }
        Gl3Command::Ceiling(a) => Report {
            command: "gl3 ceiling",
            inputs: to_value(a),
            result: to_value(&hirschowitz_ceiling(delta, ctx)),
            warnings: vec![],
        },
        Gl3Command::Dag(a) => {
            let w: Window = a.window.parse()?;
            Report {
                command: "gl3 dag",
                inputs: to_value(a),
                result: to_value(&closure_dag(delta, ctx, &w)?),
                warnings: vec![],
            }
        }
        Gl3Command::Figure(a) => {
            let w: Window = a.window.window.parse()?;
            let fig = figure_data(delta, ctx, &w)?;
            let body = match a.format {
                FigureFormat::Csv => fig.to_csv(),
                FigureFormat::Svg => fig.to_svg(),
                FigureFormat::Json => render(&Report {
                    command: "gl3 figure",
                    inputs: to_value(a),
                    result: to_value(&fig),
                    warnings: vec![],
                }),
            };
            return match &a.out {
                None => Ok(Output::Raw(body)),
                Some(path) => {
                    std::fs::write(path, &body)
                        .map_err(|e| Error::ParameterRange(format!("cannot write {path}: {e}")))?;
                    Ok(Output::Envelope(Report {
                        command: "gl3 figure",
                        inputs: to_value(a),
                        result: json!({ "out": path, "format": a.format, "bytes": body.len() }),
                        warnings: vec![],
                    }))
                }
            };
        }
    };
    Ok(Output::Envelope(report))
}

fn render(r: &Report) -> String {
    let v = json!({
        "command": r.command,
        "inputs": r.inputs,
        "result": r.result,
        "warnings": r.warnings,
        "version": env!("CARGO_PKG_VERSION"),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serialisable");
    s.push('\n');
    s
}

fn dispatch(cmd: &Command) -> Result<Output> {
    let report = match cmd {
        Command::Group(a) => cmd_group(a)?,
        Command::Roots(a) => cmd_roots(a)?,
        Command::Parabolic(a) => cmd_parabolic(a)?,
        Command::Isotropy(a) => cmd_isotropy(a)?,
        Command::Segre(a) => cmd_segre(a)?,
        Command::Stratum(a) => cmd_stratum(a)?,
        Command::Sigma(a) => cmd_sigma(a)?,
        Command::Closure(a) => cmd_closure(a)?,
        Command::Transfer(a) => cmd_transfer(a)?,
        Command::Gl3(c) => return gl3(c),
    };
    Ok(Output::Envelope(report))
}

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(Output::Envelope(r)) => Outcome {
            code: EXIT_OK,
            stdout: render(&r),
            stderr: String::new(),
        },
        Ok(Output::Raw(body)) => Outcome {
            code: EXIT_OK,
            stdout: body,
            stderr: String::new(),
        },
        Err(e) => {
            let code = if matches!(e, Error::Parse(_)) {
                EXIT_USAGE
            } else {
                EXIT_DOMAIN
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}
