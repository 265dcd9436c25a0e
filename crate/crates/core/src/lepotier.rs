//! The Le Potier curve: positions of characters, Gieseker existence, `E_w` and the last wall.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, sign, QuadraticScalar, Rational};
use crate::exceptional::{chern_of, controlling, controlling_q, e_plus_character, left_line, DyadicIndex};
use crate::ktheory::{bar_disc, euler_form, line_through, mirror, twist, ChernCharacter, PlaneLine};

/// Position of a character relative to the Le Potier curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConePosition {
    Above,
    On,
    Below,
    /// ch0 = 0, ch1 > 0.
    TorsionPositive,
    /// ch0 = 0, ch1 < 0.
    TorsionNegative,
    /// ch0 = ch1 = 0: a multiple of the point class, with the sign of ch2.
    TorsionPoint(i32),
}

impl fmt::Display for ConePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConePosition::TorsionPoint(s) => write!(f, "TorsionPoint({s})"),
            other => write!(f, "{other:?}"),
        }
    }
}

fn from_sign(s: i32) -> ConePosition {
    match s {
        1 => ConePosition::Above,
        0 => ConePosition::On,
        _ => ConePosition::Below,
    }
}

/// Position of `v`, projectivized for ch0 ≠ 0.
pub fn position(v: &ChernCharacter) -> Result<ConePosition> {
    if v.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    if v.is_torsion() {
        return Ok(match sign(&v.ch1) {
            1 => ConePosition::TorsionPositive,
            -1 => ConePosition::TorsionNegative,
            _ => ConePosition::TorsionPoint(sign(&v.ch2)),
        });
    }
    let (x, y) = v.xy().expect("nonzero rank");
    let d = &x * &x / int(2) - &y;
    if d < rat(1, 2) {
        return Ok(ConePosition::Above);
    }
    if d > Rational::one() {
        return Ok(ConePosition::Below);
    }
    let ix = controlling(&x)?;
    let e = chern_of(&ix);
    let mu = e.mu().expect("positive rank");
    let pt = ChernCharacter::point(x.clone(), y.clone());
    Ok(if x < mu {
        from_sign(sign(&euler_form(&e, &pt)))
    } else if x > mu {
        from_sign(sign(&euler_form(&pt, &e)))
    } else {
        from_sign(sign(&(y - e_plus_character(&ix).ch2)))
    })
}

/// Height of the Le Potier curve above the abscissa `x`.
pub fn curve_height(x: &Rational) -> Result<Rational> {
    let ix = controlling(x)?;
    let e = chern_of(&ix);
    let mu = e.mu().expect("positive rank");
    let plus = e_plus_character(&ix);
    // On a tent the curve is the line through e⁺ of slope μ ∓ 3/2.
    let slope = if *x < mu { &mu - rat(3, 2) } else { &mu + rat(3, 2) };
    Ok(plus.ch2 + slope * (x - plus.ch1))
}

/// On or below the curve, or torsion with ch1 > 0.
pub fn not_inside_cone(v: &ChernCharacter) -> Result<bool> {
    Ok(matches!(
        position(v)?,
        ConePosition::On | ConePosition::Below | ConePosition::TorsionPositive
    ))
}

/// `(k, ix)` with `v = k·ṽ(ix)` for a positive integer `k`.
pub fn is_exceptional_multiple(v: &ChernCharacter) -> Option<(u64, DyadicIndex)> {
    if !v.ch0.is_positive() || !v.is_lattice() {
        return None;
    }
    let k = v.divisibility();
    let p = v.scale(&(Rational::one() / Rational::from_integer(k.clone())));
    if euler_form(&p, &p) != Rational::one() {
        return None;
    }
    let ix = controlling(&p.mu()?).ok()?;
    (chern_of(&ix) == p).then(|| (u64::try_from(k).expect("multiplicity fits in u64"), ix))
}

/// A Gieseker-semistable sheaf of character `v` exists.
pub fn admits_gieseker(v: &ChernCharacter) -> Result<bool> {
    if !v.ch0.is_positive() {
        return Err(Error::RankNotPositive);
    }
    if is_exceptional_multiple(v).is_some() {
        return Ok(true);
    }
    Ok(matches!(position(v)?, ConePosition::On | ConePosition::Below))
}

/// `(s, q)` is above the curve and off every segment `l_{ee⁺}`.
pub fn is_geometric_point(s: &Rational, q: &Rational) -> Result<bool> {
    let pt = ChernCharacter::point(s.clone(), q.clone());
    if position(&pt)? != ConePosition::Above {
        return Ok(false);
    }
    let ix = controlling(s)?;
    let e = chern_of(&ix);
    if e.mu().as_ref() != Some(s) {
        return Ok(true);
    }
    let top = &e.ch2 / &e.ch0;
    let bottom = e_plus_character(&ix).ch2;
    Ok(!(bottom <= *q && *q <= top))
}

fn require_outside(w: &ChernCharacter) -> Result<()> {
    if not_inside_cone(w)? {
        Ok(())
    } else {
        Err(Error::InsideCone(w.to_string()))
    }
}

/// Abscissae `(t, t + 3)` of the length-3 chord through `w` on `Δ̄ = 1/2` whose right end lies
/// left of `w`.
pub fn secant_abscissae(w: &ChernCharacter) -> Result<(QuadraticScalar, QuadraticScalar)> {
    let (x, _) = w.xy().ok_or(Error::DivisionByZeroRank)?;
    let radicand = int(8) * bar_disc(w)? + int(5);
    if radicand < int(9) {
        return Err(Error::NoRealSecant);
    }
    let f1 = QuadraticScalar::sqrt(radicand).scale(&rat(-1, 2)).add_rational(&(x + rat(3, 2)));
    Ok((f1.add_rational(&int(-3)), f1))
}

/// The exceptional bundle `E_w` whose region contains `w`.
pub fn associated_exceptional(w: &ChernCharacter) -> Result<DyadicIndex> {
    require_outside(w)?;
    if w.ch0.is_negative() {
        return Err(Error::RankNotPositive);
    }
    if w.is_torsion() {
        return controlling(&(&w.ch2 / &w.ch1 + rat(3, 2)));
    }
    let (_, f1) = secant_abscissae(w)?;
    controlling_q(&f1)
}

/// The mirror image of `E_{mirror(w)}`.
pub fn associated_exceptional_rhs(w: &ChernCharacter) -> Result<DyadicIndex> {
    if w.is_torsion() {
        return Err(Error::TorsionRightLast);
    }
    Ok(associated_exceptional(&mirror(w))?.mirror())
}

/// How the last wall is determined by `χ(e_w, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LastWallCase {
    /// `χ(e_w, w) > 0`: the line through `w` and `e_w`.
    AboveCase,
    /// `χ(e_w, w) < 0`: the line through `w` and `e_w(−3)`.
    BelowCase,
    /// `χ(e_w, w) = 0`: the left tent line of `E_w`.
    OrthogonalCase,
}

/// The effective boundary of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LastWall {
    pub line: PlaneLine,
    pub case: LastWallCase,
    pub e_w: DyadicIndex,
}

pub fn last_wall(w: &ChernCharacter) -> Result<LastWall> {
    let e_w = associated_exceptional(w)?;
    let e = chern_of(&e_w);
    let chi = euler_form(&e, w);
    let (line, case) = if chi.is_positive() {
        (line_through(w, &e)?, LastWallCase::AboveCase)
    } else if chi.is_zero() {
        (left_line(&e_w), LastWallCase::OrthogonalCase)
    } else {
        (line_through(w, &twist(&e, -3))?, LastWallCase::BelowCase)
    };
    Ok(LastWall { line, case, e_w })
}

/// The last wall on the right of the vertical wall, obtained through the dual.
pub fn right_last_wall(w: &ChernCharacter) -> Result<LastWall> {
    if w.is_torsion() {
        return Err(Error::TorsionRightLast);
    }
    let lw = last_wall(&mirror(w))?;
    Ok(LastWall { line: lw.line.mirror(), case: lw.case, e_w: lw.e_w.mirror() })
}
