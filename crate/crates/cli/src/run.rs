use std::ffi::OsString;
use std::io::Read as _;

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::Parser;
use leekh_core::algebra::{homology_image, x_power_image, ModuleDecomposition};
use leekh_core::cobordism::{verify_neck_cutting, DottedCobordismSpec, NeckSite};
use leekh_core::diagram::{checkerboard, connect_sum_pd, default_outer_face, mirror, parse_pd, LinkDiagram};
use leekh_core::invariants::{connect_sum_module, extortion_order, s_invariant, KnotInvariantReport};
use leekh_core::khovanov::{build_lee_complex_with, lee_module_with, BuildOptions, LeeComplex};
use leekh_core::oracle::{jones_euler, khovanov_t0, lee_rank_t1, LaurentPoly};
use leekh_core::Error;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Cli, Command, Format, Global, Source, Verify};
use crate::events::parse_events;
use crate::output::*;
use crate::table::{lookup, read_table};

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_INPUT: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// A failed consistency check.
#[derive(Debug)]
struct Internal(String);

impl std::fmt::Display for Internal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "internal invariant violated: {}", self.0)
    }
}

impl std::error::Error for Internal {}

pub fn exit_code(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        if let Some(err) = cause.downcast_ref::<Error>() {
            return match err {
                Error::ResourceLimit { .. } => EXIT_RESOURCE,
                err if err.is_internal() => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            };
        }
        if cause.downcast_ref::<Internal>().is_some() {
            return EXIT_INTERNAL;
        }
    }
    EXIT_INPUT
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: shown, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: shown },
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {:#}\n", e) },
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let g = &cli.global;
    match &cli.command {
        Command::Compute { source } => {
            let [(name, d)] = operands::<1>(g, source)?;
            let out = compute(g, name, &d)?;
            let code = if out.oracles.as_ref().is_some_and(|o| !oracles_consistent(o)) { EXIT_INTERNAL } else { 0 };
            Ok((render(g.format, &out, ComputeJson::text)?, code))
        }
        Command::ConnectSum { source, mirror: flips, algebraic, diagrammatic, check } => {
            let [(_, mut a), (_, mut b)] = operands::<2>(g, source)?;
            for &k in flips {
                match k {
                    1 => a = mirror(&a),
                    2 => b = mirror(&b),
                    _ => bail!("--mirror takes 1 or 2, got {}", k),
                }
            }
            let both = *check || algebraic == diagrammatic;
            let out = connect_sum(g, &a, &b, both || *diagrammatic, both || *algebraic)?;
            let code = if out.agree == Some(false) { EXIT_INTERNAL } else { 0 };
            Ok((render(g.format, &out, ConnectSumJson::text)?, code))
        }
        Command::Verify { what: Verify::NeckCutting { source, circle, saddle, colored } } => {
            let [(_, d)] = operands::<1>(g, source)?;
            let site = match (circle, saddle) {
                (Some(c), None) => NeckSite::Circle(*c),
                (None, Some((p, q))) => NeckSite::Saddle(*p, *q),
                _ => bail!("give exactly one of --circle and --saddle"),
            };
            let colored = *colored || g.outer_face.is_some();
            let c = LeeComplex::build(&d, g.field)?;
            let col = if colored { Some(checkerboard(&d, g.outer_face.unwrap_or_else(|| default_outer_face(&d)))?) } else { None };
            let r = verify_neck_cutting(&c, site, col.as_ref())?;
            let out = NeckJson {
                pd: d.to_pd_string(),
                site: match site {
                    NeckSite::Circle(a) => format!("circle {}", a),
                    NeckSite::Saddle(p, q) => format!("saddle {},{}", p, q),
                },
                colored,
                holds_up_to_sign: r.holds_up_to_sign,
                resolved_sign: r.resolved_sign,
            };
            let text = |o: &NeckJson| {
                format!(
                    "{}: {} (sign {})\n",
                    o.site,
                    if o.holds_up_to_sign { "holds" } else { "FAILS" },
                    o.resolved_sign.map_or("none".into(), |s| format!("{:+}", s))
                )
            };
            Ok((render(g.format, &out, text)?, 0))
        }
        Command::Verify { what: Verify::Events { source, events } } => {
            let [(_, d)] = operands::<1>(g, source)?;
            let text = if events.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                s
            } else {
                std::fs::read_to_string(events).with_context(|| format!("reading {}", events.display()))?
            };
            let lines = parse_events(&text)?;
            let mut cur = d.clone();
            let mut resolved = Vec::with_capacity(lines.len());
            for (k, line) in lines.iter().enumerate() {
                let e = line.resolve(&cur, g.outer_face).with_context(|| format!("event {}", k + 1))?;
                cur = e.apply(&cur).with_context(|| format!("event {}", k + 1))?;
                resolved.push(e);
            }
            let spec = DottedCobordismSpec { source: d, events: resolved };
            let (f, end) = spec.chain_map(g.field)?;
            if f.shift() != spec.bigrading() {
                return Err(Internal(format!("map of degree {} but the events give {}", f.shift(), spec.bigrading())).into());
            }
            let out = EventsJson {
                source: spec.source.to_pd_string(),
                target: end.diagram().to_pd_string(),
                events: spec.events.len(),
                euler_characteristic: spec.euler_characteristic(),
                dots: spec.dot_count(),
                bigrading: TowerJson { i: f.shift().i, j: f.shift().j },
                commutes_with_differentials: true,
                homology_image: DecompositionJson::from_module(&homology_image(&f)),
            };
            let text = |o: &EventsJson| {
                format!(
                    "{} events, chi {}, {} dots, degree ({}, {}), chain map: yes\ntarget {}\nimage  {}\n",
                    o.events, o.euler_characteristic, o.dots, o.bigrading.i, o.bigrading.j, o.target, o.homology_image.universal_kh
                )
            };
            Ok((render(g.format, &out, text)?, 0))
        }
        Command::XImage { source, power } => {
            let [(_, d)] = operands::<1>(g, source)?;
            let m = lee_module_with(&d, g.field, &options(g))?;
            let out = XImageJson {
                power: *power,
                module: DecompositionJson::from_module(&m),
                image: DecompositionJson::from_module(&x_power_image(&m, *power)),
            };
            let text = |o: &XImageJson| format!("module {}\nX^{}    {}\n", o.module.universal_kh, o.power, o.image.universal_kh);
            Ok((render(g.format, &out, text)?, 0))
        }
        Command::Table { jobs } => table(g, *jobs),
    }
}

fn options(g: &Global) -> BuildOptions {
    BuildOptions { max_crossings: g.max_crossings, ..Default::default() }
}

fn render<T: Serialize>(format: Format, value: &T, text: impl Fn(&T) -> String) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(value)? + "\n",
        Format::Text => text(value),
    })
}

/// The `N` diagrams named by `--pd` or `--name`.
fn operands<const N: usize>(g: &Global, s: &Source) -> Result<[(Option<String>, LinkDiagram); N]> {
    let mut out = Vec::new();
    if !s.pd.is_empty() && !s.name.is_empty() {
        bail!("give the diagrams either all by --pd or all by --name");
    }
    for pd in &s.pd {
        out.push((None, parse_pd(pd).with_context(|| format!("parsing `{}`", pd))?));
    }
    if !s.name.is_empty() {
        let path = g.table.as_ref().ok_or_else(|| anyhow!("--name needs --table FILE"))?;
        let table = read_table(path)?;
        for name in &s.name {
            let e = lookup(&table, name)?;
            out.push((Some(name.clone()), parse_pd(&e.pd).with_context(|| format!("parsing `{}`", name))?));
        }
    }
    let n = out.len();
    out.try_into().map_err(|_| anyhow!("expected {} diagram(s), got {}", N, n))
}

fn compute(g: &Global, name: Option<String>, d: &LinkDiagram) -> Result<ComputeJson> {
    let m = lee_module_with(d, g.field, &options(g))?;
    let pd = d.to_pd_string();
    let components = d.components().len();
    let mut out = if components == 1 {
        ComputeJson::knot(name, pd, d.crossing_count(), &KnotInvariantReport::from_module(m.clone())?)
    } else {
        ComputeJson {
            name,
            pd,
            crossings: d.crossing_count(),
            components,
            s: None,
            xo: extortion_order(&m)?,
            ribbon_lower_bound: None,
            collapse_page_bound: None,
            bound: None,
            decomposition: DecompositionJson::from_module(&m),
            oracles: None,
        }
    };
    if g.with_oracles {
        out.oracles = Some(oracles(g, d, &m)?);
    }
    Ok(out)
}

fn oracles(g: &Global, d: &LinkDiagram, m: &ModuleDecomposition) -> Result<OracleJson> {
    let t0 = khovanov_t0(d, g.field)?;
    let t1 = lee_rank_t1(d, g.field)?;
    let jones = jones_euler(d)?;
    let c = build_lee_complex_with(d, g.field, &options(g))?;
    let mut expected = LaurentPoly::new();
    for (&j, &k) in &c.graded_euler() {
        *expected.entry(j).or_default() += k;
        *expected.entry(j - 2).or_default() += k;
    }
    expected.retain(|_, k| *k != 0);
    Ok(OracleJson {
        khovanov_t0_total: t0.total(),
        khovanov_t0: t0.dims.iter().map(|(&(i, j), &dim)| DimJson { i, j, dim }).collect(),
        lee_rank_t1: t1,
        t0_matches_module: t0.total() == m.t0_dimension() && t0.euler() == jones,
        jones_matches_complex: expected == jones,
        lee_rank_matches_components: t1 == 1 << d.components().len(),
        jones_euler: jones,
    })
}

fn oracles_consistent(o: &OracleJson) -> bool {
    o.t0_matches_module && o.jones_matches_complex && o.lee_rank_matches_components
}

fn connect_sum(g: &Global, a: &LinkDiagram, b: &LinkDiagram, diagrammatic: bool, algebraic: bool) -> Result<ConnectSumJson> {
    let d = connect_sum_pd(a, b);
    let direct = if diagrammatic { Some(lee_module_with(&d, g.field, &options(g))?) } else { None };
    let formula = if algebraic {
        let ma = lee_module_with(a, g.field, &options(g))?;
        let mb = lee_module_with(b, g.field, &options(g))?;
        Some(connect_sum_module(&ma, &mb)?)
    } else {
        None
    };
    let m = direct.as_ref().or(formula.as_ref()).expect("at least one method runs");
    let r = KnotInvariantReport::from_module(m.clone())?;
    Ok(ConnectSumJson {
        pd: d.to_pd_string(),
        agree: match (&direct, &formula) {
            (Some(x), Some(y)) => Some(x == y),
            _ => None,
        },
        diagrammatic: direct.as_ref().map(DecompositionJson::from_module),
        algebraic: formula.as_ref().map(DecompositionJson::from_module),
        s: s_invariant(m)?,
        xo: r.xo,
        bound: r.semantics(),
    })
}

#[derive(Serialize)]
struct TableError {
    name: String,
    error: String,
    exit: i32,
}

fn table(g: &Global, jobs: usize) -> Result<(String, i32)> {
    let path = g.table.as_ref().ok_or_else(|| anyhow!("table needs --table FILE"))?;
    let entries = read_table(path)?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let rows: Vec<(String, i32)> = pool.install(|| {
        entries
            .par_iter()
            .map(|e| {
                let result = parse_pd(&e.pd).map_err(anyhow::Error::from).and_then(|d| compute(g, Some(e.name.clone()), &d));
                match result {
                    Ok(out) => {
                        let code = if out.oracles.as_ref().is_some_and(|o| !oracles_consistent(o)) { EXIT_INTERNAL } else { 0 };
                        let line = match g.format {
                            Format::Json => serde_json::to_string(&out).expect("serializable"),
                            Format::Text => format!(
                                "{}\ts={}\txo={}\t{}",
                                e.name,
                                out.s.map_or("-".into(), |s| s.to_string()),
                                out.xo,
                                out.decomposition.universal_kh
                            ),
                        };
                        (line, code)
                    }
                    Err(err) => {
                        let code = exit_code(&err);
                        let line = match g.format {
                            Format::Json => serde_json::to_string(&TableError { name: e.name.clone(), error: format!("{:#}", err), exit: code })
                                .expect("serializable"),
                            Format::Text => format!("{}\terror: {:#}", e.name, err),
                        };
                        (line, code)
                    }
                }
            })
            .collect()
    });
    let code = rows.iter().map(|r| r.1).max().unwrap_or(0);
    let mut out = String::new();
    for (line, _) in rows {
        out.push_str(&line);
        out.push('\n');
    }
    Ok((out, code))
}
