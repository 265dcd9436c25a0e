//! Numerical K-theory of the projective plane and the `{1, ch1/ch0, ch2/ch0}`-plane.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, is_integer, rat, sign, QuadraticScalar, Rational};

/// A Chern character `(ch0, ch1, ch2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChernCharacter {
    pub ch0: Rational,
    pub ch1: Rational,
    pub ch2: Rational,
}

impl ChernCharacter {
    pub fn new(ch0: Rational, ch1: Rational, ch2: Rational) -> Self {
        ChernCharacter { ch0, ch1, ch2 }
    }

    /// `(r, c, d)` with `d` given as `d2/2`.
    pub fn from_halves(r: i64, c: i64, d2: i64) -> Self {
        Self::new(int(r), int(c), rat(d2, 2))
    }

    pub fn from_ints(r: i64, c: i64, d: i64) -> Self {
        Self::new(int(r), int(c), int(d))
    }

    /// The character `(1, x, y)` of a finite point.
    pub fn point(x: Rational, y: Rational) -> Self {
        Self::new(Rational::one(), x, y)
    }

    pub fn is_zero(&self) -> bool {
        self.ch0.is_zero() && self.ch1.is_zero() && self.ch2.is_zero()
    }

    pub fn is_torsion(&self) -> bool {
        self.ch0.is_zero()
    }

    /// ch0 and ch1 integral and ch2 − ch1/2 integral.
    pub fn is_lattice(&self) -> bool {
        is_integer(&self.ch0)
            && is_integer(&self.ch1)
            && is_integer(&(&self.ch2 - &self.ch1 / int(2)))
    }

    /// Largest `k` with `self / k` still a lattice character.
    pub fn divisibility(&self) -> BigInt {
        let g = self.ch0.numer().gcd(self.ch1.numer());
        let mut k = g.clone();
        while !k.is_zero() {
            if (&g % &k).is_zero() && self.scale(&Rational::new(BigInt::one(), k.clone())).is_lattice() {
                return k;
            }
            k -= 1;
        }
        BigInt::zero()
    }

    pub fn is_primitive(&self) -> bool {
        self.is_lattice() && self.divisibility().is_one()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.ch0 * k, &self.ch1 * k, &self.ch2 * k)
    }

    /// ch1/ch0.
    pub fn mu(&self) -> Option<Rational> {
        (!self.ch0.is_zero()).then(|| &self.ch1 / &self.ch0)
    }

    /// The point `(ch1/ch0, ch2/ch0)`.
    pub fn xy(&self) -> Option<(Rational, Rational)> {
        (!self.ch0.is_zero()).then(|| (&self.ch1 / &self.ch0, &self.ch2 / &self.ch0))
    }

    /// The same projective point with ch0 = 1.
    pub fn normalized(&self) -> Option<Self> {
        self.xy().map(|(x, y)| Self::point(x, y))
    }

    pub fn plane_point(&self) -> PlanePoint {
        match self.xy() {
            Some((x, y)) => PlanePoint::Finite { x: x.into(), y: y.into() },
            None => PlanePoint::Infinite { ch1: self.ch1.clone(), ch2: self.ch2.clone() },
        }
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.ch0, self.ch1, self.ch2)
    }
}

impl Add for &ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, o: &ChernCharacter) -> ChernCharacter {
        ChernCharacter::new(&self.ch0 + &o.ch0, &self.ch1 + &o.ch1, &self.ch2 + &o.ch2)
    }
}

impl Sub for &ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, o: &ChernCharacter) -> ChernCharacter {
        ChernCharacter::new(&self.ch0 - &o.ch0, &self.ch1 - &o.ch1, &self.ch2 - &o.ch2)
    }
}

impl Neg for &ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        ChernCharacter::new(-&self.ch0, -&self.ch1, -&self.ch2)
    }
}

/// χ(v, w) by Hirzebruch–Riemann–Roch.
pub fn euler_form(v: &ChernCharacter, w: &ChernCharacter) -> Rational {
    &v.ch2 * &w.ch0 + &w.ch2 * &v.ch0 - &v.ch1 * &w.ch1
        + rat(3, 2) * (&w.ch1 * &v.ch0 - &w.ch0 * &v.ch1)
        + &v.ch0 * &w.ch0
}

/// ch1²/2 − ch0·ch2.
pub fn disc(v: &ChernCharacter) -> Rational {
    &v.ch1 * &v.ch1 / int(2) - &v.ch0 * &v.ch2
}

/// disc(v)/ch0² = (ch1/ch0)²/2 − ch2/ch0.
pub fn bar_disc(v: &ChernCharacter) -> Result<Rational> {
    if v.ch0.is_zero() {
        return Err(Error::DivisionByZeroRank);
    }
    Ok(disc(v) / (&v.ch0 * &v.ch0))
}

pub fn bilinear_disc(v: &ChernCharacter, u: &ChernCharacter) -> Rational {
    (&v.ch1 * &u.ch1 - &v.ch0 * &u.ch2 - &u.ch0 * &v.ch2) / int(2)
}

/// Tensor by O(k).
pub fn twist(v: &ChernCharacter, k: i64) -> ChernCharacter {
    twist_by(v, &int(k))
}

pub fn twist_by(v: &ChernCharacter, k: &Rational) -> ChernCharacter {
    ChernCharacter::new(
        v.ch0.clone(),
        &v.ch1 + k * &v.ch0,
        &v.ch2 + k * &v.ch1 + k * k * &v.ch0 / int(2),
    )
}

/// `(r, c, d) ↦ (r, −c, d)`.
pub fn mirror(v: &ChernCharacter) -> ChernCharacter {
    ChernCharacter::new(v.ch0.clone(), -&v.ch1, v.ch2.clone())
}

/// A point of the projective plane: finite `[1 : x : y]` or at infinity `[0 : ch1 : ch2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanePoint {
    Finite { x: QuadraticScalar, y: QuadraticScalar },
    Infinite { ch1: Rational, ch2: Rational },
}

impl PlanePoint {
    pub fn rational(x: Rational, y: Rational) -> Self {
        PlanePoint::Finite { x: x.into(), y: y.into() }
    }

    /// The character `(1, x, y)` when both coordinates are rational.
    pub fn to_character(&self) -> Option<ChernCharacter> {
        match self {
            PlanePoint::Finite { x, y } => {
                Some(ChernCharacter::point(x.as_rational()?.clone(), y.as_rational()?.clone()))
            }
            PlanePoint::Infinite { ch1, ch2 } => {
                Some(ChernCharacter::new(Rational::zero(), ch1.clone(), ch2.clone()))
            }
        }
    }

    pub fn x(&self) -> Option<&QuadraticScalar> {
        match self {
            PlanePoint::Finite { x, .. } => Some(x),
            PlanePoint::Infinite { .. } => None,
        }
    }

    pub fn y(&self) -> Option<&QuadraticScalar> {
        match self {
            PlanePoint::Finite { y, .. } => Some(y),
            PlanePoint::Infinite { .. } => None,
        }
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanePoint::Finite { x, y } => write!(f, "({x}, {y})"),
            PlanePoint::Infinite { ch1, ch2 } => write!(f, "[0:{ch1}:{ch2}]"),
        }
    }
}

/// The line `A·ch2 + B·ch1 + C·ch0 = 0`, stored as a primitive integer triple whose first
/// nonzero entry is positive. In plane coordinates this is `A·y + B·x + C = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneLine {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl PlaneLine {
    /// Normalizes a rational coefficient triple; `None` for the zero triple.
    pub fn new(a: &Rational, b: &Rational, c: &Rational) -> Option<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return None;
        }
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let l = Rational::from_integer(l);
        let (a, b, c) = ((a * &l).to_integer(), (b * &l).to_integer(), (c * &l).to_integer());
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
        let lead = if !a.is_zero() { a.sign() } else if !b.is_zero() { b.sign() } else { c.sign() };
        if lead == num_bigint::Sign::Minus {
            a = -a;
            b = -b;
            c = -c;
        }
        Some(PlaneLine { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Option<Self> {
        Self::new(&int(a), &int(b), &int(c))
    }

    /// The line `y = slope·x + intercept`.
    pub fn from_slope(slope: &Rational, intercept: &Rational) -> Self {
        Self::new(&Rational::one(), &-slope, &-intercept).expect("nonzero")
    }

    /// The zero locus of a linear form `v ↦ f(v)`, read off from its values on the basis.
    pub fn from_form<F: Fn(&ChernCharacter) -> Rational>(f: F) -> Option<Self> {
        let a = f(&ChernCharacter::from_ints(0, 0, 1));
        let b = f(&ChernCharacter::from_ints(0, 1, 0));
        let c = f(&ChernCharacter::from_ints(1, 0, 0));
        Self::new(&a, &b, &c)
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn a(&self) -> Rational {
        Rational::from_integer(self.a.clone())
    }

    pub fn b(&self) -> Rational {
        Rational::from_integer(self.b.clone())
    }

    pub fn c(&self) -> Rational {
        Rational::from_integer(self.c.clone())
    }

    pub fn is_vertical(&self) -> bool {
        self.a.is_zero()
    }

    /// `−B/A`, or `None` for a vertical line.
    pub fn slope(&self) -> Option<Rational> {
        (!self.is_vertical()).then(|| -self.b() / self.a())
    }

    /// `−C/A`, the height at x = 0.
    pub fn intercept(&self) -> Option<Rational> {
        (!self.is_vertical()).then(|| -self.c() / self.a())
    }

    pub fn y_at(&self, x: &Rational) -> Option<Rational> {
        (!self.is_vertical()).then(|| -(self.b() * x + self.c()) / self.a())
    }

    pub fn y_at_q(&self, x: &QuadraticScalar) -> Option<QuadraticScalar> {
        (!self.is_vertical())
            .then(|| x.scale(&(-self.b() / self.a())).add_rational(&(-self.c() / self.a())))
    }

    /// `A·ch2 + B·ch1 + C·ch0`.
    pub fn eval(&self, v: &ChernCharacter) -> Rational {
        self.a() * &v.ch2 + self.b() * &v.ch1 + self.c() * &v.ch0
    }

    /// Sign of the form on a character.
    pub fn side(&self, v: &ChernCharacter) -> i32 {
        sign(&self.eval(v))
    }

    pub fn contains(&self, v: &ChernCharacter) -> bool {
        self.eval(v).is_zero()
    }

    /// Sign of `A·y + B·x + C` at a finite point.
    pub fn side_point(&self, p: &PlanePoint) -> i32 {
        match p {
            PlanePoint::Finite { x, y } => y
                .scale(&self.a())
                .checked_add(&x.scale(&self.b()))
                .expect("point coordinates share a radicand")
                .add_rational(&self.c())
                .sign(),
            PlanePoint::Infinite { ch1, ch2 } => sign(&(self.a() * ch2 + self.b() * ch1)),
        }
    }

    /// +1 if the finite point of `v` lies strictly above a non-vertical line, −1 below, 0 on it.
    pub fn above(&self, v: &ChernCharacter) -> Result<i32> {
        if self.is_vertical() {
            return Err(Error::VerticalLine);
        }
        if v.ch0.is_zero() {
            return Err(Error::DivisionByZeroRank);
        }
        Ok(self.side(v) * sign(&v.ch0) * self.a.sign_i32())
    }

    /// Intersection as a homogeneous character, ch0 ≥ 0; ch0 = 0 for parallel lines.
    pub fn meet(&self, other: &PlaneLine) -> Option<ChernCharacter> {
        // coefficient vectors in the order (ch2, ch1, ch0)
        let (a1, b1, c1) = (&self.a, &self.b, &self.c);
        let (a2, b2, c2) = (&other.a, &other.b, &other.c);
        let ch2 = b1 * c2 - c1 * b2;
        let ch1 = c1 * a2 - a1 * c2;
        let ch0 = a1 * b2 - b1 * a2;
        if ch0.is_zero() && ch1.is_zero() && ch2.is_zero() {
            return None;
        }
        let v = ChernCharacter::new(ch0.into(), ch1.into(), ch2.into());
        Some(if v.ch0.is_negative() { -&v } else { v })
    }

    /// The image under `(r, c, d) ↦ (r, −c, d)`.
    pub fn mirror(&self) -> PlaneLine {
        Self::new(&self.a(), &-self.b(), &self.c()).expect("nonzero")
    }
}

trait SignI32 {
    fn sign_i32(&self) -> i32;
}

impl SignI32 for BigInt {
    fn sign_i32(&self) -> i32 {
        match self.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
}

impl fmt::Display for PlaneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// The line through two projectively distinct characters (finite or torsion).
pub fn line_through(p: &ChernCharacter, q: &ChernCharacter) -> Result<PlaneLine> {
    let a = &p.ch1 * &q.ch0 - &p.ch0 * &q.ch1;
    let b = &p.ch0 * &q.ch2 - &p.ch2 * &q.ch0;
    let c = &p.ch2 * &q.ch1 - &p.ch1 * &q.ch2;
    PlaneLine::new(&a, &b, &c).ok_or(Error::IdenticalPoints)
}

/// Abscissae of `L ∩ {Δ̄ = a}` for a non-vertical line, as `(mid, radicand)` with roots
/// `mid ± √radicand`; `None` when the radicand is negative.
fn chord(l: &PlaneLine, a: &Rational) -> Option<(Rational, Rational)> {
    // A(x²/2 − a) + Bx + C = 0  ⇔  x² + 2(B/A)x + 2C/A − 2a = 0
    let p = l.b() / l.a();
    let q = int(2) * l.c() / l.a() - int(2) * a;
    let radicand = &p * &p - q;
    (!radicand.is_negative()).then(|| (-p, radicand))
}

/// Points of `L ∩ {Δ̄ = a}` sorted by abscissa.
pub fn parabola_intersections(l: &PlaneLine, a: &Rational) -> Vec<PlanePoint> {
    let on_parabola = |x: QuadraticScalar| {
        let y = x.mul(&x).scale(&rat(1, 2)).add_rational(&-a);
        PlanePoint::Finite { x, y }
    };
    if l.is_vertical() {
        if l.b.is_zero() {
            return Vec::new();
        }
        return vec![on_parabola(QuadraticScalar::rational(-l.c() / l.b()))];
    }
    match chord(l, a) {
        None => Vec::new(),
        Some((mid, radicand)) if radicand.is_zero() => vec![on_parabola(mid.into())],
        Some((mid, radicand)) => {
            let s = QuadraticScalar::sqrt(radicand);
            vec![on_parabola(s.neg().add_rational(&mid)), on_parabola(s.add_rational(&mid))]
        }
    }
}

/// The two abscissae `(x_L, x_R)` of `L ∩ {Δ̄ = a}`.
pub fn span(l: &PlaneLine, a: &Rational) -> Result<(QuadraticScalar, QuadraticScalar)> {
    if l.is_vertical() {
        return Err(Error::VerticalLine);
    }
    let (mid, radicand) = chord(l, a).ok_or(Error::NoIntersection)?;
    let s = QuadraticScalar::sqrt(radicand);
    Ok((s.neg().add_rational(&mid), s.add_rational(&mid)))
}

/// Midpoint abscissa `−B/A` of every chord of a non-vertical line with a discriminant parabola.
pub fn chord_midpoint(l: &PlaneLine) -> Option<Rational> {
    (!l.is_vertical()).then(|| -l.b() / l.a())
}

/// `|x1 − x2|` over `L ∩ {Δ̄ = 0}`.
pub fn ch1_length(l: &PlaneLine) -> Result<QuadraticScalar> {
    if l.is_vertical() {
        return Ok(QuadraticScalar::zero());
    }
    let (_, radicand) = chord(l, &Rational::zero()).ok_or(Error::NoIntersection)?;
    Ok(QuadraticScalar::sqrt(radicand).scale(&int(2)))
}

/// Kernel coordinates `(s, q)` of the central charge `Z_{s,q}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityPoint {
    pub s: Rational,
    pub q: Rational,
}

impl StabilityPoint {
    pub fn new(s: Rational, q: Rational) -> Self {
        StabilityPoint { s, q }
    }

    pub fn character(&self) -> ChernCharacter {
        ChernCharacter::point(self.s.clone(), self.q.clone())
    }
}

/// `Z_{s,q}(v) = (−ch2 + q·ch0) + i(ch1 − s·ch0)`.
pub fn central_charge(p: &StabilityPoint, v: &ChernCharacter) -> (Rational, Rational) {
    (-&v.ch2 + &p.q * &v.ch0, &v.ch1 - &p.s * &v.ch0)
}

/// Compares the phases of `Z_P(v)` and `Z_P(u)` in `(0, 1]`.
pub fn phase_order(p: &StabilityPoint, v: &ChernCharacter, u: &ChernCharacter) -> Result<Ordering> {
    let zv = central_charge(p, v);
    let zu = central_charge(p, u);
    if [&zv, &zu].iter().any(|(re, im)| re.is_zero() && im.is_zero()) {
        return Err(Error::ZeroCharge);
    }
    for (re, im) in [&zv, &zu] {
        if im.is_negative() || (im.is_zero() && re.is_positive()) {
            return Err(Error::OutsideUpperHalfPlane);
        }
    }
    // Both rays lie in the closed upper half plane minus the positive axis, where the phase
    // increases counterclockwise; the cross product orders them.
    let cross = &zu.0 * &zv.1 - &zu.1 * &zv.0;
    Ok(sign(&cross).cmp(&0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(r: i64, c: i64, d2: i64) -> ChernCharacter {
        ChernCharacter::from_halves(r, c, d2)
    }

    #[test]
    fn euler_form_examples() {
        assert_eq!(euler_form(&ch(2, -3, 3), &ch(4, 0, -30)), int(2));
        assert_eq!(euler_form(&ch(1, 0, 0), &ch(1, 0, 0)), int(1));
        // χ(O, O(−3)) = (−3+1)(−3+2)/2 = 1
        assert_eq!(euler_form(&ch(1, 0, 0), &ch(1, -3, 9)), int(1));
    }

    #[test]
    fn discriminants() {
        assert_eq!(bar_disc(&ch(4, 0, -30)).unwrap(), rat(15, 4));
        assert_eq!(disc(&ch(0, 1, 14)), rat(1, 2));
        assert_eq!(bar_disc(&ch(13, 5, -11)).unwrap(), rat(1, 2) - rat(1, 2 * 169));
        assert_eq!(bar_disc(&ch(0, 1, 0)), Err(Error::DivisionByZeroRank));
        let v = ch(3, -2, 5);
        assert_eq!(bilinear_disc(&v, &v), disc(&v));
    }

    #[test]
    fn twists_and_mirror() {
        assert_eq!(twist(&ch(2, 3, 3), -3), ch(2, -3, 3));
        assert_eq!(twist(&ch(1, 0, 0), 1), ch(1, 1, 1));
        assert_eq!(twist(&ch(3, -1, 7), 0), ch(3, -1, 7));
        assert_eq!(mirror(&ch(4, 0, -30)), ch(4, 0, -30));
        assert_eq!(mirror(&ch(2, -3, 3)), ch(2, 3, 3));
        let (u, v) = (ch(1, 0, 0), ch(1, 1, 1));
        assert_eq!(euler_form(&mirror(&u), &mirror(&v)), euler_form(&v, &u));
        assert_eq!(euler_form(&v, &u), int(0));
        assert_eq!(euler_form(&u, &v), int(3));
    }

    #[test]
    fn lines() {
        let l = line_through(&ch(4, 0, -30), &ch(2, -3, 3)).unwrap();
        assert_eq!(l, PlaneLine::from_ints(4, 12, 15).unwrap());
        let vertical = line_through(&ch(1, 0, 0), &ch(0, 0, 2)).unwrap();
        assert_eq!(vertical, PlaneLine::from_ints(0, 1, 0).unwrap());
        let l = line_through(&ch(1, 0, -8), &ch(1, -1, -1)).unwrap();
        assert_eq!(l, PlaneLine::from_ints(2, 7, 8).unwrap());
        assert_eq!(line_through(&ch(1, 1, 1), &ch(2, 2, 2)), Err(Error::IdenticalPoints));
    }

    #[test]
    fn parabola_examples() {
        let l = PlaneLine::from_ints(4, 12, 15).unwrap();
        let pts = parabola_intersections(&l, &int(0));
        let root = QuadraticScalar::sqrt(rat(3, 2));
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[0].x().unwrap(), &root.neg().add_rational(&int(-3)));
        assert_eq!(pts[1].x().unwrap(), &root.add_rational(&int(-3)));
        let vertical = PlaneLine::from_ints(0, 1, 0).unwrap();
        let pts = parabola_intersections(&vertical, &int(0));
        assert_eq!(pts, vec![PlanePoint::rational(int(0), int(0))]);
    }

    #[test]
    fn lengths() {
        let l = line_through(&ch(1, 0, 0), &ch(1, 1, 1)).unwrap();
        assert_eq!(ch1_length(&l).unwrap(), QuadraticScalar::rational(int(1)));
        assert_eq!(ch1_length(&PlaneLine::from_ints(0, 1, 0).unwrap()).unwrap(), QuadraticScalar::zero());
        let last = PlaneLine::from_ints(4, 12, 15).unwrap();
        assert_eq!(ch1_length(&last).unwrap(), QuadraticScalar::sqrt(rat(3, 2)).scale(&int(2)));
        // a line high above the parabola
        let l = PlaneLine::from_slope(&int(0), &int(-5));
        assert_eq!(ch1_length(&l), Err(Error::NoIntersection));
    }

    #[test]
    fn central_charges() {
        let p = StabilityPoint::new(int(0), int(1));
        assert_eq!(central_charge(&p, &ch(1, 0, 0)), (int(1), int(0)));
        assert_eq!(central_charge(&p, &ch(0, 0, 2)), (int(-1), int(0)));
        let (s, q) = (rat(-2, 3), rat(5, 7));
        let p = StabilityPoint::new(s.clone(), q.clone());
        assert_eq!(central_charge(&p, &ChernCharacter::point(s, q)), (int(0), int(0)));
    }

    #[test]
    fn phases() {
        let p = StabilityPoint::new(int(0), int(1));
        let v = ch(1, 1, 1);
        assert_eq!(phase_order(&p, &v, &v), Ok(Ordering::Equal));
        assert_eq!(phase_order(&p, &ch(0, 0, 2), &ch(1, 1, 1)), Ok(Ordering::Greater));
        // P on the line through Ω and (1,0,−4)
        let p = StabilityPoint::new(int(-2), rat(7, 3));
        assert_eq!(phase_order(&p, &ch(2, -3, 3), &ch(1, 0, -8)), Ok(Ordering::Equal));
        // P at the kernel of (1,0,−4)
        let p = StabilityPoint::new(int(0), int(-4));
        assert_eq!(phase_order(&p, &ch(2, -3, 3), &ch(1, 0, -8)), Err(Error::ZeroCharge));
    }

    #[test]
    fn meets() {
        let l1 = PlaneLine::from_slope(&int(1), &int(0));
        let l2 = PlaneLine::from_slope(&int(-1), &int(2));
        let p = l1.meet(&l2).unwrap();
        assert_eq!(p.xy().unwrap(), (int(1), int(1)));
        let l3 = PlaneLine::from_slope(&int(1), &int(5));
        assert!(l1.meet(&l3).unwrap().is_torsion());
    }

    #[test]
    fn lattice() {
        assert!(ch(4, -1, -5).is_lattice());
        assert!(!ch(4, -1, -4).is_lattice());
        assert!(ch(4, -2, -4).is_primitive());
        assert!(!ch(4, -2, -6).is_primitive());
        assert_eq!(ch(3, -3, 3).divisibility(), BigInt::from(3));
    }
}
