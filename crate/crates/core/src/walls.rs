//! Actual walls: TR triangles, the pairwise criterion, bounded enumeration, and the nef and
//! movable boundaries.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, QuadraticScalar, Rational};
use crate::exceptional::{
    chern_of, controlling, controlling_q, e_plus_character, left_line, right_line, standard_triple,
    DyadicIndex,
};
use crate::ktheory::{
    bar_disc, bilinear_disc, euler_form, line_through, mirror, parabola_intersections, span, twist,
    ChernCharacter, PlaneLine,
};
use crate::lepotier::{
    associated_exceptional, curve_height, is_exceptional_multiple, last_wall, not_inside_cone,
    position, ConePosition, LastWall,
};

/// Which side of the vertical wall is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Both,
}

/// Why a member of a destabilizing pair is admissible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    ExceptionalMultiple,
    OnCurve,
    BelowCurve,
    /// Torsion with ch1 > 0.
    Torsion,
}

/// Codimension class of a wall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WallClass {
    Divisorial,
    Flip,
    TotalContraction,
    Other,
}

/// First failing check of [`candidate_ok`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RejectReason {
    NotLattice,
    RankOrSlope,
    NotAboveLastWall,
    /// The wall misses `Δ̄ < 0`, or `v` and `w − v` do not sit on its two components.
    WrongComponent,
    VInsideCone,
    UInsideCone,
    VInTr(DyadicIndex),
    UInTr(DyadicIndex),
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::VInTr(e) => write!(f, "InTR(v,{e})"),
            RejectReason::UInTr(e) => write!(f, "InTR(u,{e})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

/// A destabilizing pair `v + u = w` with its Euler pairings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabilizingPair {
    pub v: ChernCharacter,
    pub u: ChernCharacter,
    pub chi_vu: Rational,
    pub chi_uv: Rational,
    pub codim_plus: Rational,
    pub codim_minus: Rational,
    pub v_kind: PairKind,
    pub u_kind: PairKind,
    pub class: WallClass,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct WallFlags {
    pub actual: bool,
    pub nef: bool,
    pub movable: bool,
    pub last: bool,
}

/// One wall of the fan through `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallReport {
    pub line: PlaneLine,
    pub slope: Rational,
    pub pairs: Vec<DestabilizingPair>,
    pub flags: WallFlags,
}

/// Walls on one side of the vertical wall, ordered from the vertical wall toward the last wall.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub side: Side,
    pub effective: LastWall,
    /// `None` when the movable boundary is undefined (non-primitive `w`).
    pub movable: Option<PlaneLine>,
    /// The first wall, or the last wall when there is none.
    pub nef: PlaneLine,
    pub walls: Vec<WallReport>,
    pub rejected: Vec<(ChernCharacter, RejectReason)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSummary {
    pub w: ChernCharacter,
    pub side: Side,
    /// One fan for `Left` or `Right`, left then right for `Both`.
    pub fans: Vec<Fan>,
}

impl ConeSummary {
    pub fn fan(&self, side: Side) -> Option<&Fan> {
        self.fans.iter().find(|f| f.side == side)
    }
}

fn require_outside(w: &ChernCharacter) -> Result<()> {
    if w.ch0.is_negative() {
        return Err(Error::RankNotPositive);
    }
    if not_inside_cone(w)? {
        Ok(())
    } else {
        Err(Error::InsideCone(w.to_string()))
    }
}

/// Sign of a line form at the projective point of `v`, independent of the sign of ch0.
fn side_at(l: &PlaneLine, v: &ChernCharacter) -> i32 {
    l.side(v) * if v.ch0.is_negative() { -1 } else { 1 }
}

/// Membership of the point of `v` in the triangle bounded by `L_{we}` and the tent lines of `E`.
///
/// Of the two tent edges, the one on the side of `E_w` stays closed: for `E` left of `E_w` the
/// right tent line is excluded, otherwise the left one. Points on `L_{we}` are included.
pub fn tr_contains(w: &ChernCharacter, e_ix: &DyadicIndex, v: &ChernCharacter) -> Result<bool> {
    if v.is_torsion() {
        return Ok(false);
    }
    let e = chern_of(e_ix);
    let plus = e_plus_character(e_ix);
    let l_we = line_through(w, &e).map_err(|_| Error::DegenerateTriangle)?;
    if l_we.contains(&plus) {
        return Err(Error::DegenerateTriangle);
    }
    let (l_left, l_right) = (left_line(e_ix), right_line(e_ix));
    let x_l = l_we.meet(&l_left).filter(|p| !p.ch0.is_zero()).ok_or(Error::DegenerateTriangle)?;
    let x_r = l_we.meet(&l_right).filter(|p| !p.ch0.is_zero()).ok_or(Error::DegenerateTriangle)?;
    let edges = [(&l_we, &plus), (&l_left, &x_r), (&l_right, &x_l)];
    for (edge, opposite) in edges {
        let s = side_at(edge, v);
        if s != 0 && s != side_at(edge, opposite) {
            return Ok(false);
        }
    }
    let excluded = if *e_ix < associated_exceptional(w)? { &l_right } else { &l_left };
    Ok(side_at(excluded, v) != 0)
}

fn kind_of(v: &ChernCharacter) -> Result<Option<PairKind>> {
    if v.is_torsion() {
        return Ok((position(v)? == ConePosition::TorsionPositive).then_some(PairKind::Torsion));
    }
    // A negative-rank character is never an exceptional character; only its projective
    // position counts.
    if is_exceptional_multiple(v).is_some() {
        return Ok(Some(PairKind::ExceptionalMultiple));
    }
    Ok(match position(v)? {
        ConePosition::On => Some(PairKind::OnCurve),
        ConePosition::Below => Some(PairKind::BelowCurve),
        _ => None,
    })
}

/// The controlling exceptionals of the points where the wall through `w` and `v` meets
/// `Δ̄ = 1/2`.
fn tr_exceptionals(line: &PlaneLine) -> Result<Vec<DyadicIndex>> {
    let mut out = Vec::new();
    for p in parabola_intersections(line, &rat(1, 2)) {
        let ix = controlling_q(p.x().expect("finite"))?;
        if !out.contains(&ix) {
            out.push(ix);
        }
    }
    Ok(out)
}

fn in_tr(w: &ChernCharacter, es: &[DyadicIndex], v: &ChernCharacter) -> Result<Option<DyadicIndex>> {
    for e in es {
        match tr_contains(w, e, v) {
            Ok(true) => return Ok(Some(e.clone())),
            Ok(false) | Err(Error::DegenerateTriangle) => {}
            Err(err) => return Err(err),
        }
    }
    Ok(None)
}

/// The pairwise criterion for `L_{wv}` being an actual wall.
pub fn candidate_ok(w: &ChernCharacter, v: &ChernCharacter) -> Result<Verdict> {
    require_outside(w)?;
    let last = last_wall(w)?;
    candidate_ok_with(w, &last, v)
}

fn candidate_ok_with(w: &ChernCharacter, last: &LastWall, v: &ChernCharacter) -> Result<Verdict> {
    use RejectReason::*;
    let reject = |r| Ok(Verdict::Reject(r));
    if !v.is_lattice() {
        return reject(NotLattice);
    }
    if !v.ch0.is_positive() || (!w.is_torsion() && v.mu() >= w.mu()) {
        return reject(RankOrSlope);
    }
    if last.line.above(v)? != 1 {
        return reject(NotAboveLastWall);
    }
    let line = line_through(w, v)?;
    let (xl, xr) = match span(&line, &Rational::zero()) {
        Ok(s) if s.0 != s.1 => s,
        _ => return reject(WrongComponent),
    };
    let u = w - v;
    let xv = QuadraticScalar::from(v.mu().expect("positive rank"));
    if xv < xr || (u.ch0.is_negative() && QuadraticScalar::from(u.mu().expect("nonzero")) > xl) {
        return reject(WrongComponent);
    }
    let Some(v_kind) = kind_of(v)? else { return reject(VInsideCone) };
    let Some(u_kind) = kind_of(&u)? else { return reject(UInsideCone) };
    let es = tr_exceptionals(&line)?;
    if let Some(e) = in_tr(w, &es, v)? {
        return reject(VInTr(e));
    }
    if let Some(e) = in_tr(w, &es, &u)? {
        return reject(UInTr(e));
    }
    debug_assert!(!bilinear_disc(v, &u).is_negative(), "Δ(v, w − v) < 0 for {v}");
    let _ = (v_kind, u_kind);
    Ok(Verdict::Accept)
}

/// Bound `(ch1(w) − x_L·ch0(w))/(x_R − x_L)` on the rank of higher-rank candidates.
pub fn higher_rank_bound(w: &ChernCharacter) -> Result<QuadraticScalar> {
    require_outside(w)?;
    let (xl, xr) = span(&last_wall(w)?.line, &Rational::zero())?;
    let num = xl.scale(&-w.ch0.clone()).add_rational(&w.ch1);
    Ok(num.mul(&xr.sub(&xl).recip().ok_or(Error::NoIntersection)?))
}

/// Largest integer rank strictly below [`higher_rank_bound`].
pub fn max_candidate_rank(w: &ChernCharacter) -> Result<i64> {
    let b = higher_rank_bound(w)?;
    let f = b.floor();
    let f = if QuadraticScalar::from(Rational::from_integer(f.clone())) == b { f - 1 } else { f };
    Ok(f.to_i64().expect("rank bound fits in i64"))
}

fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("fits in i64")
}

fn floor_q(q: &QuadraticScalar) -> i64 {
    q.floor().to_i64().expect("fits in i64")
}

/// Lattice `v = (r, c, D/2)` strictly above the last wall with `Δ̄(v) ≥ 0` that are exceptional
/// multiples or on or below the Le Potier curve.
fn cell(last: &PlaneLine, r: i64, c: i64) -> Vec<ChernCharacter> {
    let x = rat(c, r);
    let y = last.y_at(&x).expect("last wall is not vertical");
    let mut lo = floor_i64(&(int(2 * r) * y)) + 1;
    if (lo - c).rem_euclid(2) != 0 {
        lo += 1;
    }
    let mut hi = floor_i64(&rat(c * c, r));
    if (hi - c).rem_euclid(2) != 0 {
        hi -= 1;
    }
    (lo..=hi)
        .step_by(2)
        .map(|d2| ChernCharacter::from_halves(r, c, d2))
        .filter(|v| {
            is_exceptional_multiple(v).is_some()
                || matches!(position(v), Ok(ConePosition::On | ConePosition::Below))
        })
        .collect()
}

/// Characters `v` on the subobject side of a potential wall, before the `w − v` and TR checks.
///
/// Lower-rank sweep over `1 ≤ r ≤ ch0(w)` with `x_R < c/r < μ(w)`, then the higher-rank sweep
/// up to [`max_candidate_rank`] with `x_R·r < c ≤ ch1(w) + x_L·(r − ch0(w))`.
pub fn enumerate_candidates(w: &ChernCharacter) -> Result<Vec<ChernCharacter>> {
    require_outside(w)?;
    if !w.is_lattice() {
        return Err(Error::NotLattice(w.to_string()));
    }
    let last = last_wall(w)?;
    let (xl, xr) = span(&last.line, &Rational::zero())?;
    let rw = w.ch0.to_integer().to_i64().expect("rank fits in i64");
    let cw = w.ch1.to_integer().to_i64().expect("degree fits in i64");
    let mut cells = Vec::new();
    for r in 1..=rw {
        let c_min = floor_q(&xr.scale(&int(r))) + 1;
        // c/r < cw/rw
        let c_max = -floor_i64(&rat(-cw * r, rw)) - 1;
        cells.extend((c_min..=c_max).map(|c| (r, c)));
    }
    for r in rw + 1..=max_candidate_rank(w)? {
        let c_min = floor_q(&xr.scale(&int(r))) + 1;
        let mut c_max = floor_q(&xl.scale(&int(r - rw)).add_rational(&int(cw)));
        if rw > 0 {
            c_max = c_max.min(-floor_i64(&rat(-cw * r, rw)) - 1);
        }
        cells.extend((c_min..=c_max).map(|c| (r, c)));
    }
    let mut out: Vec<ChernCharacter> =
        cells.par_iter().flat_map_iter(|&(r, c)| cell(&last.line, r, c)).collect();
    out.sort();
    Ok(out)
}

fn class_of(codim_plus: &Rational, codim_minus: &Rational, on_last: bool) -> WallClass {
    if on_last {
        WallClass::TotalContraction
    } else if codim_plus.min(codim_minus) == &Rational::one() {
        WallClass::Divisorial
    } else if *codim_plus >= int(2) && *codim_minus >= int(2) {
        WallClass::Flip
    } else {
        WallClass::Other
    }
}

fn make_pair(v: &ChernCharacter, u: &ChernCharacter, on_last: bool) -> Result<DestabilizingPair> {
    let chi_vu = euler_form(v, u);
    let chi_uv = euler_form(u, v);
    let codim_plus = -chi_vu.clone();
    let codim_minus = -chi_uv.clone();
    let class = class_of(&codim_plus, &codim_minus, on_last);
    let v_kind = kind_of(v)?.unwrap_or(PairKind::BelowCurve);
    let u_kind = kind_of(u)?.unwrap_or(PairKind::BelowCurve);
    Ok(DestabilizingPair { v: v.clone(), u: u.clone(), chi_vu, chi_uv, codim_plus, codim_minus, v_kind, u_kind, class })
}

/// Euler pairings and codimension class of the pair `(v, w − v)`.
pub fn wall_codims(w: &ChernCharacter, v: &ChernCharacter) -> Result<DestabilizingPair> {
    let on_last = line_through(w, v)? == last_wall(w)?.line;
    make_pair(v, &(w - v), on_last)
}

fn sort_walls(w: &ChernCharacter, walls: &mut [WallReport]) {
    if w.is_torsion() {
        walls.sort_by_key(|w| std::cmp::Reverse(w.line.intercept()));
    } else {
        walls.sort_by(|a, b| a.slope.cmp(&b.slope));
    }
}

fn left_fan(w: &ChernCharacter) -> Result<Fan> {
    let last = last_wall(w)?;
    let candidates = enumerate_candidates(w)?;
    let verdicts: Vec<(ChernCharacter, Verdict)> = candidates
        .par_iter()
        .map(|v| candidate_ok_with(w, &last, v).map(|r| (v.clone(), r)))
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<PlaneLine, Vec<DestabilizingPair>> = BTreeMap::new();
    let mut rejected = Vec::new();
    for (v, verdict) in verdicts {
        match verdict {
            Verdict::Accept => {
                let line = line_through(w, &v)?;
                if line == last.line {
                    continue;
                }
                let pair = make_pair(&v, &(w - &v), false)?;
                groups.entry(line).or_default().push(pair);
            }
            Verdict::Reject(reason) => rejected.push((v, reason)),
        }
    }
    let movable = if w.is_primitive() { Some(movable_boundary(w)?.line) } else { None };
    let mut walls: Vec<WallReport> = groups
        .into_iter()
        .map(|(line, mut pairs)| {
            pairs.sort_by(|a, b| a.v.cmp(&b.v));
            let slope = line.slope().expect("walls through w with μ(v) < μ(w) are not vertical");
            let flags = WallFlags { actual: true, movable: movable.as_ref() == Some(&line), ..Default::default() };
            WallReport { line, slope, pairs, flags }
        })
        .collect();
    sort_walls(w, &mut walls);
    if let Some(first) = walls.first_mut() {
        first.flags.nef = true;
    }
    let nef = walls.first().map_or_else(|| last.line.clone(), |x| x.line.clone());
    Ok(Fan { side: Side::Left, effective: last, movable, nef, walls, rejected })
}

fn mirror_fan(fan: Fan) -> Result<Fan> {
    let walls = fan
        .walls
        .into_iter()
        .map(|wr| {
            let line = wr.line.mirror();
            let pairs = wr
                .pairs
                .iter()
                .map(|p| make_pair(&mirror(&p.v), &mirror(&p.u), false))
                .collect::<Result<_>>()?;
            Ok(WallReport { slope: line.slope().expect("not vertical"), line, pairs, flags: wr.flags })
        })
        .collect::<Result<_>>()?;
    Ok(Fan {
        side: Side::Right,
        effective: LastWall {
            line: fan.effective.line.mirror(),
            case: fan.effective.case,
            e_w: fan.effective.e_w.mirror(),
        },
        movable: fan.movable.map(|l| l.mirror()),
        nef: fan.nef.mirror(),
        walls,
        rejected: fan.rejected.into_iter().map(|(v, r)| (mirror(&v), r)).collect(),
    })
}

/// All actual walls of `w` on the requested side, grouped by line.
pub fn enumerate_walls(w: &ChernCharacter, side: Side) -> Result<ConeSummary> {
    require_outside(w)?;
    if side != Side::Left && w.is_torsion() {
        return Err(Error::TorsionRightLast);
    }
    let mut fans = Vec::new();
    if side != Side::Right {
        fans.push(left_fan(w)?);
    }
    if side != Side::Left {
        fans.push(mirror_fan(left_fan(&mirror(w))?)?);
    }
    Ok(ConeSummary { w: w.clone(), side, fans })
}

/// The greatest `c/r < mu` with `1 ≤ r ≤ rmax`, by Stern–Brocot descent.
pub fn farey_predecessor(mu: &Rational, rmax: u64) -> Rational {
    assert!(rmax >= 1, "rmax must be positive");
    let rmax = BigInt::from(rmax);
    let below: BigInt = mu.ceil().to_integer() - 1;
    let (mut ln, mut ld) = (below.clone(), BigInt::one());
    let (mut rn, mut rd) = (below + 1, BigInt::one());
    loop {
        let (mn, md): (BigInt, BigInt) = (&ln + &rn, &ld + &rd);
        if md > rmax {
            return Rational::new(ln, ld);
        }
        if Rational::new(mn.clone(), md.clone()) < *mu {
            (ln, ld) = (mn, md);
        } else {
            (rn, rd) = (mn, md);
        }
    }
}

/// The nef boundary and the character that spans it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefBoundary {
    pub line: PlaneLine,
    /// `None` when there is no actual wall and the nef cone reaches the last wall.
    pub v: Option<ChernCharacter>,
    /// Taken from full enumeration because `Δ̄(w) < 10`.
    pub fallback: bool,
}

/// Highest admissible lattice `v` of slope `c/r` at rank `r`.
fn highest_at(r: &BigInt, c: &BigInt) -> Result<Option<ChernCharacter>> {
    let x = Rational::new(c.clone(), r.clone());
    let rr = Rational::from_integer(r.clone());
    let cc = Rational::from_integer(c.clone());
    let ix = controlling(&x)?;
    let e = chern_of(&ix);
    if e.mu().as_ref() == Some(&x) && (r % e.ch0.to_integer()).is_zero() {
        return Ok(Some(e.scale(&(&rr / &e.ch0))));
    }
    // 2d ≡ c (mod 2), d ≤ r·h(x)
    let top = (int(2) * &rr * curve_height(&x)?).floor();
    let mut d2 = top.to_integer();
    if (&d2 - c) % 2 != BigInt::zero() {
        d2 -= 1;
    }
    Ok(Some(ChernCharacter::new(rr, cc, Rational::new(d2, BigInt::from(2)))))
}

/// The first actual wall left of the vertical wall.
pub fn nef_boundary(w: &ChernCharacter) -> Result<NefBoundary> {
    if !w.ch0.is_positive() {
        return Err(Error::RankNotPositive);
    }
    if !w.is_primitive() {
        return Err(Error::NotPrimitive(w.to_string()));
    }
    require_outside(w)?;
    if bar_disc(w)? >= int(10) {
        let mu = w.mu().expect("positive rank");
        let rmax = w.ch0.to_integer().to_u64().expect("rank fits in u64");
        let m = farey_predecessor(&mu, rmax);
        let (c0, r0) = (m.numer().clone(), m.denom().clone());
        let mut best: Option<ChernCharacter> = None;
        let mut k = BigInt::one();
        while &k * &r0 <= w.ch0.to_integer() {
            if let Some(v) = highest_at(&(&k * &r0), &(&k * &c0))? {
                let higher = best.as_ref().is_none_or(|b| v.xy().unwrap().1 > b.xy().unwrap().1);
                if higher {
                    best = Some(v);
                }
            }
            k += 1;
        }
        let v = best.ok_or(Error::NoWalls)?;
        return Ok(NefBoundary { line: line_through(w, &v)?, v: Some(v), fallback: false });
    }
    let fan = enumerate_walls(w, Side::Left)?.fans.remove(0);
    Ok(match fan.walls.first() {
        Some(first) => NefBoundary { line: first.line.clone(), v: Some(first.pairs[0].v.clone()), fallback: true },
        None => NefBoundary { line: fan.effective.line, v: None, fallback: true },
    })
}

/// Which branch produced the movable boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MovableCase {
    /// `χ(e_γ, w) ≠ 0`: the movable cone equals the effective cone.
    NonOrthogonal,
    /// `n2 < 3·ch0(E_β)`: `P = e_γ − (3ch0(E_β) − n2)·e_α`.
    CaseI,
    /// `n2 ≥ 3·ch0(E_β)`: `P = e_γ`.
    CaseII,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovableBoundary {
    pub line: PlaneLine,
    pub case: MovableCase,
    /// The character spanning the wall in the orthogonal branch.
    pub p: Option<ChernCharacter>,
    pub n1: Option<BigInt>,
    pub n2: Option<BigInt>,
}

/// The boundary of the movable cone.
pub fn movable_boundary(w: &ChernCharacter) -> Result<MovableBoundary> {
    if !w.is_primitive() {
        return Err(Error::NotPrimitive(w.to_string()));
    }
    require_outside(w)?;
    let gamma = associated_exceptional(w)?;
    let e_g = chern_of(&gamma);
    if !euler_form(&e_g, w).is_zero() {
        let line = last_wall(w)?.line;
        return Ok(MovableBoundary { line, case: MovableCase::NonOrthogonal, p: None, n1: None, n2: None });
    }
    let (alpha, beta) = standard_triple(&gamma);
    let (e_a, e_b) = (chern_of(&alpha), chern_of(&beta));
    let f = twist(&e_b, -3);
    // n2·e_α − n1·f = w on (ch0, ch1)
    let det = -(&e_a.ch0 * &f.ch1) + &e_a.ch1 * &f.ch0;
    if det.is_zero() {
        return Err(Error::DecompositionFailed);
    }
    let n2 = (-(&w.ch0 * &f.ch1) + &w.ch1 * &f.ch0) / &det;
    let n1 = (&e_a.ch0 * &w.ch1 - &e_a.ch1 * &w.ch0) / &det;
    let positive_int = |n: &Rational| n.is_integer() && n.is_positive();
    if !positive_int(&n1) || !positive_int(&n2) || &e_a.ch2 * &n2 - &f.ch2 * &n1 != w.ch2 {
        return Err(Error::DecompositionFailed);
    }
    let bound = int(3) * &e_b.ch0;
    let (p, case) = if n2 < bound {
        (&e_g - &e_a.scale(&(&bound - &n2)), MovableCase::CaseI)
    } else {
        (e_g, MovableCase::CaseII)
    };
    Ok(MovableBoundary {
        line: line_through(w, &p)?,
        case,
        p: Some(p),
        n1: Some(n1.to_integer()),
        n2: Some(n2.to_integer()),
    })
}

/// Sign of `(m − μ(w))² − 2Δ̄(w)` style test: the line meets `Δ̄ < 0` in two points.
pub fn meets_negative_discriminant(l: &PlaneLine) -> bool {
    matches!(span(l, &Rational::zero()), Ok((a, b)) if a != b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lepotier::LastWallCase;

    fn ch(r: i64, c: i64, d2: i64) -> ChernCharacter {
        ChernCharacter::from_halves(r, c, d2)
    }

    fn ix(s: &str) -> DyadicIndex {
        s.parse().unwrap()
    }

    fn w() -> ChernCharacter {
        ch(4, 0, -30)
    }

    #[test]
    fn tr_examples() {
        let o = ix("-1");
        assert!(tr_contains(&w(), &o, &ch(4, -3, -5)).unwrap());
        assert!(tr_contains(&w(), &o, &ch(3, -2, -6)).unwrap());
        assert!(!tr_contains(&w(), &o, &ch(4, -1, -5)).unwrap());
        // the printed "(3,−2,3)" is far outside the triangle
        assert!(!tr_contains(&w(), &o, &ch(3, -2, 6)).unwrap());
        // e⁺ of Ω(1) is a vertex on the excluded left edge
        assert!(!tr_contains(&w(), &ix("-1/2"), &ch(4, -2, -4)).unwrap());
    }

    #[test]
    fn criterion_examples() {
        assert_eq!(candidate_ok(&w(), &ch(4, -1, -5)).unwrap(), Verdict::Accept);
        assert_eq!(candidate_ok(&w(), &ch(4, -3, -5)).unwrap(), Verdict::Reject(RejectReason::VInTr(ix("-1"))));
        assert_eq!(candidate_ok(&w(), &ch(5, -6, 0)).unwrap(), Verdict::Accept);
        assert_eq!(candidate_ok(&w(), &ch(4, 1, -5)).unwrap(), Verdict::Reject(RejectReason::RankOrSlope));
        assert_eq!(candidate_ok(&w(), &ch(4, -1, -4)).unwrap(), Verdict::Reject(RejectReason::NotLattice));
        assert!(matches!(candidate_ok(&ch(1, 0, 0), &ch(1, -1, 1)), Err(Error::InsideCone(_))));
    }

    #[test]
    fn rank_bound() {
        let b = higher_rank_bound(&w()).unwrap();
        assert_eq!(b, QuadraticScalar::sqrt(int(24)).add_rational(&int(2)));
        assert_eq!(max_candidate_rank(&w()).unwrap(), 6);
    }

    #[test]
    fn rank_one_candidates() {
        let c: Vec<_> = enumerate_candidates(&w()).unwrap().into_iter().filter(|v| v.ch0 == int(1)).collect();
        assert_eq!(c, vec![ch(1, -1, -1), ch(1, -1, 1)]);
    }

    #[test]
    fn farey() {
        assert_eq!(farey_predecessor(&int(0), 4), rat(-1, 4));
        assert_eq!(farey_predecessor(&rat(1, 2), 3), rat(1, 3));
        assert_eq!(farey_predecessor(&rat(-1, 3), 5), rat(-2, 5));
        assert_eq!(farey_predecessor(&int(3), 1), int(2));
    }

    #[test]
    fn codims() {
        let p = wall_codims(&ch(1, 0, -8), &ch(1, -1, -1)).unwrap();
        assert_eq!(p.chi_vu, int(-1));
        assert_eq!(p.class, WallClass::Divisorial);
        let p = wall_codims(&w(), &ch(4, -1, -5)).unwrap();
        assert_eq!(&p.chi_vu - &p.chi_uv, int(12));
        assert_eq!(p.class, WallClass::Flip);
    }

    #[test]
    fn nef() {
        let n = nef_boundary(&w()).unwrap();
        assert!(n.fallback);
        assert_eq!(n.v, Some(ch(4, -1, -5)));
        let n = nef_boundary(&ch(1, 0, -24)).unwrap();
        assert!(!n.fallback);
        assert_eq!(n.v, Some(ch(1, -1, 1)));
        let n = nef_boundary(&ch(3, -1, -3)).unwrap();
        assert!(n.fallback);
        assert_eq!(n.v, None);
        assert_eq!(n.line, last_wall(&ch(3, -1, -3)).unwrap().line);
        assert!(matches!(nef_boundary(&ch(2, 0, -8)), Err(Error::NotPrimitive(_))));
    }

    #[test]
    fn movable() {
        let m = movable_boundary(&ch(1, 0, -8)).unwrap();
        assert_eq!(m.case, MovableCase::CaseI);
        assert_eq!(m.p, Some(ch(1, -1, -1)));
        assert_eq!(m.line, line_through(&ch(1, 0, -8), &ch(1, -1, -1)).unwrap());
        let m = movable_boundary(&w()).unwrap();
        assert_eq!(m.case, MovableCase::NonOrthogonal);
        assert_eq!(m.line, PlaneLine::from_ints(4, 12, 15).unwrap());
        let m = movable_boundary(&ch(3, -1, -3)).unwrap();
        assert_eq!(m.case, MovableCase::CaseII);
        assert_eq!((m.n1.unwrap(), m.n2.unwrap()), (BigInt::from(2), BigInt::from(5)));
        assert_eq!(m.p, Some(ch(1, 0, 0)));
    }

    #[test]
    fn small_fan() {
        let s = enumerate_walls(&ch(1, 0, -2), Side::Left).unwrap();
        assert!(s.fans[0].walls.is_empty());
        assert_eq!(s.fans[0].effective.case, LastWallCase::OrthogonalCase);
    }
}
