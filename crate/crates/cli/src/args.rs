//! Command-line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leekh_core::FieldSpec;

#[derive(Debug, Parser)]
#[command(name = "leekh", version, about = "Lee-deformed Khovanov homology over F[X] and the extortion order")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Coefficient field: `q` or `fp:P` for an odd prime P.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: FieldSpec,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Cross-check results against the brute-force oracles.
    #[arg(long, global = true)]
    pub with_oracles: bool,
    #[arg(long, global = true, default_value_t = leekh_core::khovanov::DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,
    /// Face index used as the unbounded region for dot signs.
    #[arg(long, global = true)]
    pub outer_face: Option<usize>,
    /// Knot table, one `name<TAB>pd` per line.
    #[arg(long, global = true)]
    pub table: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Inline PD code.
    #[arg(long)]
    pub pd: Vec<String>,
    /// Knot name looked up in `--table`.
    #[arg(long)]
    pub name: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Module, s-invariant, extortion order and ribbon-distance bound of one knot.
    Compute {
        #[command(flatten)]
        source: Source,
    },
    /// Module of a connected sum, from the diagram and from the factors' modules.
    ConnectSum {
        #[command(flatten)]
        source: Source,
        /// Mirror the given operand (1 or 2) before summing.
        #[arg(long)]
        mirror: Vec<usize>,
        #[arg(long)]
        algebraic: bool,
        #[arg(long)]
        diagrammatic: bool,
        /// Compute both ways and report whether they agree.
        #[arg(long)]
        check: bool,
    },
    /// Chain-level checks of cobordism maps.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Image of multiplication by `X^d` on the module.
    XImage {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        power: u32,
    },
    /// Every knot of `--table`, one JSON line each, in file order.
    Table {
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Neck-cutting identity at a free circle or a saddle site.
    NeckCutting {
        #[command(flatten)]
        source: Source,
        /// Free circle to cut.
        #[arg(long, conflicts_with = "saddle")]
        circle: Option<u32>,
        /// Saddle site `P,Q`.
        #[arg(long, value_parser = parse_pair)]
        saddle: Option<(u32, u32)>,
        /// Sign dots with the checkerboard coloring.
        #[arg(long)]
        colored: bool,
    },
    /// Chain map of an event list: one event per line.
    Events {
        #[command(flatten)]
        source: Source,
        /// Event file, `-` for stdin.
        #[arg(long)]
        events: PathBuf,
    },
}

pub fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let spec = match s.to_ascii_lowercase().as_str() {
        "q" => FieldSpec::Rational,
        other => {
            let p = other
                .strip_prefix("fp:")
                .ok_or_else(|| format!("expected `q` or `fp:P`, got `{}`", s))?
                .parse::<u64>()
                .map_err(|e| e.to_string())?;
            FieldSpec::Prime(p)
        }
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected `P,Q`")?;
    Ok((a.trim().parse().map_err(|_| "bad arc")?, b.trim().parse().map_err(|_| "bad arc")?))
}

pub fn field_name(f: FieldSpec) -> String {
    match f {
        FieldSpec::Rational => "q".into(),
        FieldSpec::Prime(p) => format!("fp:{}", p),
    }
}
