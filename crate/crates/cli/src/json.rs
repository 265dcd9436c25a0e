//! Versioned JSON form of a [`ConeSummary`].

use num_bigint::BigInt;
use p2walls::exactnum::parse_rational;
use p2walls::lepotier::{LastWall, LastWallCase};
use p2walls::walls::{ConeSummary, DestabilizingPair, Fan, PairKind, RejectReason, Side, WallClass, WallFlags, WallReport};
use p2walls::{ChernCharacter, DyadicIndex, PlaneLine, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA: &str = "p2walls/1";

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unsupported schema {0:?}")]
    Schema(String),
    #[error("bad field {field}: {value:?}")]
    Field { field: &'static str, value: String },
}

type Result<T> = std::result::Result<T, JsonError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonSummary {
    pub schema: String,
    pub character: [String; 3],
    pub side: String,
    pub fans: Vec<JsonFan>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonFan {
    pub side: String,
    pub effective: JsonEffective,
    pub movable: Option<JsonLine>,
    pub nef: JsonNef,
    pub walls: Vec<JsonWall>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rejected: Option<Vec<JsonRejected>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEffective {
    pub line: [String; 3],
    pub case: String,
    pub e_w: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonLine {
    pub line: [String; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonNef {
    pub line: [String; 3],
    pub v: Option<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonWall {
    pub line: [String; 3],
    pub slope: String,
    pub pairs: Vec<JsonPair>,
    pub flags: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonPair {
    pub v: [String; 3],
    pub u: [String; 3],
    pub chi_vu: String,
    pub chi_uv: String,
    pub class: String,
    pub codim_plus: String,
    pub codim_minus: String,
    pub v_kind: String,
    pub u_kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRejected {
    pub v: [String; 3],
    pub reason: String,
}

fn q(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn chern(v: &ChernCharacter) -> [String; 3] {
    [q(&v.ch0), q(&v.ch1), q(&v.ch2)]
}

fn line(l: &PlaneLine) -> [String; 3] {
    let (a, b, c) = l.coefficients();
    [a.to_string(), b.to_string(), c.to_string()]
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
        Side::Both => "both",
    }
}

fn flag_names(f: &WallFlags) -> Vec<String> {
    let named = [(f.actual, "actual"), (f.nef, "nef"), (f.movable, "movable"), (f.last, "last")];
    named.iter().filter(|(on, _)| *on).map(|(_, n)| n.to_string()).collect()
}

pub fn to_json(s: &ConeSummary, include_rejected: bool) -> JsonSummary {
    let fans = s
        .fans
        .iter()
        .map(|f| JsonFan {
            side: side_name(f.side).into(),
            effective: JsonEffective {
                line: line(&f.effective.line),
                case: format!("{:?}", f.effective.case),
                e_w: f.effective.e_w.to_string(),
            },
            movable: f.movable.as_ref().map(|l| JsonLine { line: line(l) }),
            nef: JsonNef {
                line: line(&f.nef),
                v: f.walls.first().filter(|w| w.line == f.nef).map(|w| chern(&w.pairs[0].v)),
            },
            walls: f
                .walls
                .iter()
                .map(|w| JsonWall {
                    line: line(&w.line),
                    slope: q(&w.slope),
                    pairs: w
                        .pairs
                        .iter()
                        .map(|p| JsonPair {
                            v: chern(&p.v),
                            u: chern(&p.u),
                            chi_vu: q(&p.chi_vu),
                            chi_uv: q(&p.chi_uv),
                            class: format!("{:?}", p.class),
                            codim_plus: q(&p.codim_plus),
                            codim_minus: q(&p.codim_minus),
                            v_kind: format!("{:?}", p.v_kind),
                            u_kind: format!("{:?}", p.u_kind),
                        })
                        .collect(),
                    flags: flag_names(&w.flags),
                })
                .collect(),
            rejected: include_rejected.then(|| {
                f.rejected.iter().map(|(v, r)| JsonRejected { v: chern(v), reason: r.to_string() }).collect()
            }),
        })
        .collect();
    JsonSummary {
        schema: SCHEMA.into(),
        character: chern(&s.w),
        side: side_name(s.side).into(),
        fans,
    }
}

pub fn to_string(s: &ConeSummary, include_rejected: bool) -> String {
    let mut out = serde_json::to_string_pretty(&to_json(s, include_rejected)).expect("plain data serializes");
    out.push('\n');
    out
}

fn bad(field: &'static str, value: &str) -> JsonError {
    JsonError::Field { field, value: value.into() }
}

fn parse_q(field: &'static str, s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| bad(field, s))
}

fn parse_chern(field: &'static str, v: &[String; 3]) -> Result<ChernCharacter> {
    Ok(ChernCharacter::new(parse_q(field, &v[0])?, parse_q(field, &v[1])?, parse_q(field, &v[2])?))
}

fn parse_line(field: &'static str, l: &[String; 3]) -> Result<PlaneLine> {
    let n = |s: &String| s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad(field, s));
    PlaneLine::new(&n(&l[0])?, &n(&l[1])?, &n(&l[2])?).ok_or_else(|| bad(field, &l.join(",")))
}

fn parse_side(s: &str) -> Result<Side> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        "both" => Ok(Side::Both),
        _ => Err(bad("side", s)),
    }
}

fn parse_case(s: &str) -> Result<LastWallCase> {
    match s {
        "AboveCase" => Ok(LastWallCase::AboveCase),
        "BelowCase" => Ok(LastWallCase::BelowCase),
        "OrthogonalCase" => Ok(LastWallCase::OrthogonalCase),
        _ => Err(bad("case", s)),
    }
}

fn parse_class(s: &str) -> Result<WallClass> {
    match s {
        "Divisorial" => Ok(WallClass::Divisorial),
        "Flip" => Ok(WallClass::Flip),
        "TotalContraction" => Ok(WallClass::TotalContraction),
        "Other" => Ok(WallClass::Other),
        _ => Err(bad("class", s)),
    }
}

fn parse_kind(s: &str) -> Result<PairKind> {
    match s {
        "ExceptionalMultiple" => Ok(PairKind::ExceptionalMultiple),
        "OnCurve" => Ok(PairKind::OnCurve),
        "BelowCurve" => Ok(PairKind::BelowCurve),
        "Torsion" => Ok(PairKind::Torsion),
        _ => Err(bad("kind", s)),
    }
}

fn parse_index(field: &'static str, s: &str) -> Result<DyadicIndex> {
    s.parse().map_err(|_| bad(field, s))
}

fn parse_reason(s: &str) -> Result<RejectReason> {
    use RejectReason::*;
    let tr = |prefix: &str| s.strip_prefix(prefix).and_then(|t| t.strip_suffix(')'));
    if let Some(e) = tr("InTR(v,") {
        return Ok(VInTr(parse_index("reason", e)?));
    }
    if let Some(e) = tr("InTR(u,") {
        return Ok(UInTr(parse_index("reason", e)?));
    }
    Ok(match s {
        "NotLattice" => NotLattice,
        "RankOrSlope" => RankOrSlope,
        "NotAboveLastWall" => NotAboveLastWall,
        "WrongComponent" => WrongComponent,
        "VInsideCone" => VInsideCone,
        "UInsideCone" => UInsideCone,
        _ => return Err(bad("reason", s)),
    })
}

fn parse_flags(names: &[String]) -> Result<WallFlags> {
    let mut f = WallFlags::default();
    for n in names {
        match n.as_str() {
            "actual" => f.actual = true,
            "nef" => f.nef = true,
            "movable" => f.movable = true,
            "last" => f.last = true,
            _ => return Err(bad("flags", n)),
        }
    }
    Ok(f)
}

fn parse_pair(p: &JsonPair) -> Result<DestabilizingPair> {
    Ok(DestabilizingPair {
        v: parse_chern("v", &p.v)?,
        u: parse_chern("u", &p.u)?,
        chi_vu: parse_q("chi_vu", &p.chi_vu)?,
        chi_uv: parse_q("chi_uv", &p.chi_uv)?,
        codim_plus: parse_q("codim_plus", &p.codim_plus)?,
        codim_minus: parse_q("codim_minus", &p.codim_minus)?,
        v_kind: parse_kind(&p.v_kind)?,
        u_kind: parse_kind(&p.u_kind)?,
        class: parse_class(&p.class)?,
    })
}

fn parse_fan(f: &JsonFan) -> Result<Fan> {
    let walls = f
        .walls
        .iter()
        .map(|w| {
            Ok(WallReport {
                line: parse_line("line", &w.line)?,
                slope: parse_q("slope", &w.slope)?,
                pairs: w.pairs.iter().map(parse_pair).collect::<Result<_>>()?,
                flags: parse_flags(&w.flags)?,
            })
        })
        .collect::<Result<_>>()?;
    let rejected = f
        .rejected
        .iter()
        .flatten()
        .map(|r| Ok((parse_chern("rejected", &r.v)?, parse_reason(&r.reason)?)))
        .collect::<Result<_>>()?;
    Ok(Fan {
        side: parse_side(&f.side)?,
        effective: LastWall {
            line: parse_line("effective", &f.effective.line)?,
            case: parse_case(&f.effective.case)?,
            e_w: parse_index("e_w", &f.effective.e_w)?,
        },
        movable: f.movable.as_ref().map(|m| parse_line("movable", &m.line)).transpose()?,
        nef: parse_line("nef", &f.nef.line)?,
        walls,
        rejected,
    })
}

pub fn from_json(j: &JsonSummary) -> Result<ConeSummary> {
    if j.schema != SCHEMA {
        return Err(JsonError::Schema(j.schema.clone()));
    }
    Ok(ConeSummary {
        w: parse_chern("character", &j.character)?,
        side: parse_side(&j.side)?,
        fans: j.fans.iter().map(parse_fan).collect::<Result<_>>()?,
    })
}

pub fn from_str(s: &str) -> Result<ConeSummary> {
    from_json(&serde_json::from_str(s)?)
}
