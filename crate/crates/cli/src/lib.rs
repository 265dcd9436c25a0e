//! Command-line surface for p2walls: text and JSON reports and SVG drawings.

pub mod json;
pub mod svg;
pub mod text;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use p2walls::exactnum::parse_rational;
use p2walls::exceptional::{chern_of, set_max_level};
use p2walls::ktheory::euler_form;
use p2walls::lepotier::{last_wall, position, right_last_wall};
use p2walls::quiver::{dimension_vector, moduli_dim, triple_data, DimSign};
use p2walls::walls::{enumerate_walls, movable_boundary, nef_boundary, Side};
use p2walls::{ChernCharacter, DyadicIndex, Rational};
use serde_json::json;
use thiserror::Error;

pub const MAX_LEVEL_ENV: &str = "P2WALLS_MAX_LEVEL";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] p2walls::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) | CliError::Io { .. } => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    Both,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::Both => Side::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "p2walls", version, about = "Walls, nef and movable boundaries for sheaves on P2")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "left")]
    pub side: SideArg,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write an SVG drawing of the fan (walls only).
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Deepest dyadic level searched for controlling exceptionals.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_level: u32,
    #[arg(long, global = true)]
    pub include_rejected: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// A character `(ch0, ch1, ch2)`; `ch2` may be written `d` or `d/2`.
#[derive(Debug, Args)]
pub struct CharArgs {
    #[arg(allow_hyphen_values = true)]
    pub ch0: String,
    #[arg(allow_hyphen_values = true)]
    pub ch1: String,
    #[arg(allow_hyphen_values = true)]
    pub ch2: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All actual walls of w.
    Walls(CharArgs),
    /// The last wall (effective boundary).
    Last(CharArgs),
    /// The nef boundary.
    Nef(CharArgs),
    /// The movable boundary.
    Movable(CharArgs),
    /// Position relative to the Le Potier curve.
    Cone(CharArgs),
    /// The exceptional character with a dyadic index.
    Exc {
        #[arg(allow_hyphen_values = true)]
        index: String,
    },
    /// Quiver data of w over an exceptional triple.
    Quiver {
        #[command(flatten)]
        w: CharArgs,
        #[arg(allow_hyphen_values = true, num_args = 3, value_names = ["E1", "E2", "E3"])]
        triple: Vec<String>,
    },
    /// The Euler pairing chi(v, w).
    Chi {
        #[arg(allow_hyphen_values = true, num_args = 6, value_names = ["V0", "V1", "V2", "W0", "W1", "W2"])]
        operands: Vec<String>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn integer(s: &str) -> Result<Rational, CliError> {
    parse_rational(s)
        .filter(|q| q.is_integer())
        .ok_or_else(|| CliError::Usage(format!("expected an integer, got {s:?}")))
}

pub fn parse_character(ch0: &str, ch1: &str, ch2: &str) -> Result<ChernCharacter, CliError> {
    let d = parse_rational(ch2).ok_or_else(|| CliError::Usage(format!("expected d or d/2, got {ch2:?}")))?;
    if !(d.clone() * Rational::from_integer(2.into())).is_integer() {
        return Err(CliError::Usage(format!("ch2 must be an integer or half-integer, got {ch2}")));
    }
    let v = ChernCharacter::new(integer(ch0)?, integer(ch1)?, d);
    if !v.is_lattice() {
        return Err(CliError::Usage(format!("{v} is not a lattice character: ch2 − ch1/2 must be an integer")));
    }
    Ok(v)
}

fn character(a: &CharArgs) -> Result<ChernCharacter, CliError> {
    parse_character(&a.ch0, &a.ch1, &a.ch2)
}

fn index(s: &str) -> Result<DyadicIndex, CliError> {
    s.parse().map_err(CliError::Usage)
}

fn q(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn chern_json(v: &ChernCharacter) -> serde_json::Value {
    json!([q(&v.ch0), q(&v.ch1), q(&v.ch2)])
}

fn line_json(l: &p2walls::PlaneLine) -> serde_json::Value {
    let (a, b, c) = l.coefficients();
    json!([a.to_string(), b.to_string(), c.to_string()])
}

fn emit_json(mut value: serde_json::Value) -> String {
    value.as_object_mut().expect("object").insert("schema".into(), json!(json::SCHEMA));
    let mut s = serde_json::to_string_pretty(&value).expect("plain data");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let as_json = cli.format == Format::Json;
    let side: Side = cli.side.into();
    match &cli.command {
        Command::Walls(a) => {
            let w = character(a)?;
            let summary = enumerate_walls(&w, side)?;
            if let Some(path) = &cli.svg {
                std::fs::write(path, svg::render(&summary)).map_err(|source| CliError::Io { path: path.clone(), source })?;
            }
            Ok(if as_json {
                json::to_string(&summary, cli.include_rejected)
            } else {
                text::walls_report(&summary, cli.include_rejected)
            })
        }
        Command::Last(a) => {
            let w = character(a)?;
            let mut lws = Vec::new();
            if side != Side::Right {
                lws.push(("left", last_wall(&w)?));
            }
            if side != Side::Left {
                lws.push(("right", right_last_wall(&w)?));
            }
            if as_json {
                let items: Vec<_> = lws
                    .iter()
                    .map(|(s, l)| json!({"side": s, "line": line_json(&l.line), "case": format!("{:?}", l.case), "e_w": l.e_w.to_string()}))
                    .collect();
                return Ok(emit_json(json!({"character": chern_json(&w), "last": items})));
            }
            Ok(lws.iter().map(|(s, l)| format!("last ({s}): {} {:?} E_w = {}\n", l.line, l.case, l.e_w)).collect())
        }
        Command::Nef(a) => {
            let w = character(a)?;
            let nef = nef_boundary(&w)?;
            if as_json {
                let v = nef.v.as_ref().map(chern_json);
                return Ok(emit_json(
                    json!({"character": chern_json(&w), "nef": {"line": line_json(&nef.line), "v": v, "fallback": nef.fallback}}),
                ));
            }
            let how = if nef.fallback { "enumeration" } else { "direct construction" };
            Ok(match nef.v {
                Some(v) => format!("nef: {} spanned by {v} ({how})\n", nef.line),
                None => format!("nef: {} equals the last wall ({how})\n", nef.line),
            })
        }
        Command::Movable(a) => {
            let w = character(a)?;
            let m = movable_boundary(&w)?;
            let s = |n: &Option<num_bigint::BigInt>| n.as_ref().map(|n| n.to_string());
            if as_json {
                return Ok(emit_json(json!({
                    "character": chern_json(&w),
                    "movable": {"line": line_json(&m.line), "case": format!("{:?}", m.case),
                                "p": m.p.as_ref().map(chern_json), "n1": s(&m.n1), "n2": s(&m.n2)}
                })));
            }
            Ok(match (&m.p, &m.n1, &m.n2) {
                (Some(p), Some(n1), Some(n2)) => {
                    format!("movable: {} {:?} n1 = {n1} n2 = {n2} P = {p}\n", m.line, m.case)
                }
                _ => format!("movable: {} {:?}\n", m.line, m.case),
            })
        }
        Command::Cone(a) => {
            let v = character(a)?;
            let p = position(&v)?;
            if as_json {
                return Ok(emit_json(json!({"character": chern_json(&v), "position": p.to_string()})));
            }
            Ok(format!("{p}\n"))
        }
        Command::Exc { index: ix } => {
            let ix = index(ix)?;
            let e = chern_of(&ix);
            if as_json {
                return Ok(emit_json(json!({"index": ix.to_string(), "character": chern_json(&e)})));
            }
            Ok(format!("{e}\n"))
        }
        Command::Quiver { w, triple } => {
            let w = character(w)?;
            let ixs = triple.iter().map(|s| index(s)).collect::<Result<Vec<_>, _>>()?;
            let t = triple_data(&ixs[0], &ixs[1], &ixs[2])?;
            let dv = dimension_vector(&w, &t)?;
            let sign = if dv.sign == DimSign::PlusW { "+w" } else { "-w" };
            let dim = moduli_dim(&w);
            if as_json {
                return Ok(emit_json(json!({
                    "character": chern_json(&w),
                    "triple": ixs.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                    "hom": [t.hom12.to_string(), t.hom23.to_string(), t.hom13.to_string()],
                    "dimension_vector": [dv.n1.to_string(), dv.n2.to_string(), dv.n3.to_string()],
                    "sign": sign,
                    "moduli_dim": dim.to_string(),
                })));
            }
            Ok(format!(
                "hom12 = {} hom23 = {} hom13 = {}\nn = ({},{},{}) resolving {sign}\nexpected dimension = {dim}\n",
                t.hom12, t.hom23, t.hom13, dv.n1, dv.n2, dv.n3
            ))
        }
        Command::Chi { operands: o } => {
            let v = parse_character(&o[0], &o[1], &o[2])?;
            let w = parse_character(&o[3], &o[4], &o[5])?;
            let x = euler_form(&v, &w);
            if as_json {
                return Ok(emit_json(json!({"v": chern_json(&v), "w": chern_json(&w), "chi": q(&x)})));
            }
            Ok(format!("{x}\n"))
        }
    }
}

fn max_level(flag: u32) -> Result<u32, CliError> {
    match std::env::var(MAX_LEVEL_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("{MAX_LEVEL_ENV} must be a level, got {s:?}"))),
        Err(_) => Ok(flag),
    }
}

/// Parses `args` (including the program name) and runs the request.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let result = max_level(cli.max_level).and_then(|level| {
        set_max_level(level);
        execute(&cli)
    });
    match result {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
