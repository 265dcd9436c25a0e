//! Exceptional bundles indexed by dyadic rationals, their tents, and the tent search.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{compare, int, rat, QuadraticScalar, Rational};
use crate::ktheory::{euler_form, span, ChernCharacter, PlaneLine, PlanePoint};

pub const DEFAULT_MAX_LEVEL: u32 = 64;

static MAX_LEVEL: AtomicU32 = AtomicU32::new(DEFAULT_MAX_LEVEL);

/// Bound on the dyadic level explored by [`controlling`].
pub fn max_level() -> u32 {
    MAX_LEVEL.load(AtomicOrdering::Relaxed)
}

pub fn set_max_level(level: u32) {
    MAX_LEVEL.store(level, AtomicOrdering::Relaxed);
}

/// The reduced dyadic rational `p/2^m` (`m = 0` or `p` odd).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicIndex {
    p: BigInt,
    m: u32,
}

impl DyadicIndex {
    pub fn new(p: impl Into<BigInt>, m: u32) -> Self {
        let mut p = p.into();
        let mut m = m;
        while m > 0 && (&p % 2u32).is_zero() {
            p /= 2u32;
            m -= 1;
        }
        if p.is_zero() {
            m = 0;
        }
        DyadicIndex { p, m }
    }

    pub fn integer(n: i64) -> Self {
        Self::new(n, 0)
    }

    /// `None` unless the denominator is a power of two.
    pub fn from_rational(x: &Rational) -> Option<Self> {
        let d = x.denom();
        let m = d.trailing_zeros().unwrap_or(0);
        (d == &(BigInt::one() << m)).then(|| Self::new(x.numer().clone(), m as u32))
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn level(&self) -> u32 {
        self.m
    }

    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), BigInt::one() << self.m)
    }

    pub fn is_integer(&self) -> bool {
        self.m == 0
    }

    pub fn twist(&self, k: i64) -> Self {
        Self::new(&self.p + (BigInt::from(k) << self.m), self.m)
    }

    /// The index of the dual bundle.
    pub fn mirror(&self) -> Self {
        Self::new(-&self.p, self.m)
    }

    /// Midpoint of two indices.
    pub fn midpoint(&self, other: &Self) -> Self {
        Self::from_rational(&((self.value() + other.value()) / int(2))).expect("dyadic")
    }

    fn offset(&self, k: i64) -> Self {
        Self::new(&self.p + k, self.m)
    }
}

impl PartialOrd for DyadicIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.value().cmp(&other.value())
    }
}

impl fmt::Display for DyadicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl std::str::FromStr for DyadicIndex {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let x = crate::exactnum::parse_rational(s).ok_or_else(|| format!("not a rational: {s}"))?;
        Self::from_rational(&x).ok_or_else(|| format!("not a dyadic rational: {s}"))
    }
}

type Memo<T> = OnceLock<RwLock<HashMap<DyadicIndex, T>>>;

static CHERN_MEMO: Memo<ChernCharacter> = OnceLock::new();
static TENT_MEMO: Memo<(QuadraticScalar, QuadraticScalar)> = OnceLock::new();

fn memo_get<T: Clone>(memo: &Memo<T>, ix: &DyadicIndex) -> Option<T> {
    memo.get_or_init(Default::default).read().expect("memo lock").get(ix).cloned()
}

fn memo_put<T>(memo: &Memo<T>, ix: DyadicIndex, value: T) {
    memo.get_or_init(Default::default).write().expect("memo lock").insert(ix, value);
}

/// The character ṽ(p/2^m) of the exceptional bundle with the given index.
pub fn chern_of(ix: &DyadicIndex) -> ChernCharacter {
    if let Some(v) = memo_get(&CHERN_MEMO, ix) {
        return v;
    }
    let v = if ix.is_integer() {
        let n = Rational::from_integer(ix.p.clone());
        ChernCharacter::new(Rational::one(), n.clone(), &n * &n / int(2))
    } else {
        let r4 = (&ix.p % 4u32 + 4u32) % 4u32;
        let (near, far, rank_of) = if r4 == BigInt::from(3) {
            (ix.offset(-1), ix.offset(-3), ix.offset(1))
        } else {
            (ix.offset(1), ix.offset(3), ix.offset(-1))
        };
        let k = int(3) * chern_of(&rank_of).ch0;
        &chern_of(&near).scale(&k) - &chern_of(&far)
    };
    memo_put(&CHERN_MEMO, ix.clone(), v.clone());
    v
}

/// An exceptional bundle with its cached character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalBundle {
    pub index: DyadicIndex,
    pub chern: ChernCharacter,
}

impl ExceptionalBundle {
    pub fn new(index: DyadicIndex) -> Self {
        let chern = chern_of(&index);
        ExceptionalBundle { index, chern }
    }

    pub fn rank(&self) -> &Rational {
        &self.chern.ch0
    }

    /// `μ = ch1/ch0`, which differs from the index away from integers.
    pub fn slope(&self) -> Rational {
        &self.chern.ch1 / &self.chern.ch0
    }
}

/// The point `e⁺ = (μ, ch2/ch0 − 1/ch0²)`, as a character `(1, x, y)`.
pub fn e_plus_character(ix: &DyadicIndex) -> ChernCharacter {
    let e = chern_of(ix);
    let (x, y) = e.xy().expect("positive rank");
    let r2 = &e.ch0 * &e.ch0;
    ChernCharacter::point(x, y - Rational::one() / r2)
}

pub fn e_plus(ix: &DyadicIndex) -> PlanePoint {
    let v = e_plus_character(ix);
    PlanePoint::rational(v.ch1, v.ch2)
}

/// Zero locus of `χ(E, −)`: the tent line through `e⁺` of slope `μ − 3/2`.
pub fn left_line(ix: &DyadicIndex) -> PlaneLine {
    let e = chern_of(ix);
    PlaneLine::from_form(|v| euler_form(&e, v)).expect("nonzero form")
}

/// Zero locus of `χ(−, E)`: the tent line through `e⁺` of slope `μ + 3/2`.
pub fn right_line(ix: &DyadicIndex) -> PlaneLine {
    let e = chern_of(ix);
    PlaneLine::from_form(|v| euler_form(v, &e)).expect("nonzero form")
}

/// Abscissae `(x_l, x_r)` of `e^l` and `e^r` on `Δ̄ = 1/2`.
pub fn tent_interval(ix: &DyadicIndex) -> (QuadraticScalar, QuadraticScalar) {
    if let Some(t) = memo_get(&TENT_MEMO, ix) {
        return t;
    }
    let half = rat(1, 2);
    // Both roots of each tent line lie on the same side of μ; take the ones nearest to μ.
    let (_, xl) = span(&left_line(ix), &half).expect("tent line meets Δ̄ = 1/2");
    let (xr, _) = span(&right_line(ix), &half).expect("tent line meets Δ̄ = 1/2");
    memo_put(&TENT_MEMO, ix.clone(), (xl.clone(), xr.clone()));
    (xl, xr)
}

/// Where `x` sits relative to the closed tent interval of `ix`.
fn tent_position(x: &QuadraticScalar, ix: &DyadicIndex) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let (xl, xr) = tent_interval(ix);
    if compare(x, &xl) == Less {
        Less
    } else if compare(x, &xr) == Greater {
        Greater
    } else {
        Equal
    }
}

/// The exceptional bundle whose closed tent interval contains `x`.
pub fn controlling(x: &Rational) -> Result<DyadicIndex> {
    controlling_q(&QuadraticScalar::rational(x.clone()))
}

pub fn controlling_q(x: &QuadraticScalar) -> Result<DyadicIndex> {
    controlling_within(x, max_level())
}

/// [`controlling_q`] with an explicit level bound.
pub fn controlling_within(x: &QuadraticScalar, limit: u32) -> Result<DyadicIndex> {
    use std::cmp::Ordering::*;
    if let Some(r) = x.as_rational() {
        if r.is_integer() {
            return Ok(DyadicIndex::new(r.to_integer(), 0));
        }
    }
    let n = x.floor();
    let mut a = DyadicIndex::new(n.clone(), 0);
    let mut b = DyadicIndex::new(n + 1, 0);
    if tent_position(x, &a) == Equal {
        return Ok(a);
    }
    if tent_position(x, &b) == Equal {
        return Ok(b);
    }
    for _ in 0..limit {
        let mid = a.midpoint(&b);
        match tent_position(x, &mid) {
            Equal => return Ok(mid),
            Less => b = mid,
            Greater => a = mid,
        }
    }
    Err(Error::SearchDepthExceeded(limit))
}

/// The pair `(α, β) = ((p−1)/2^m, (p+1)/2^m)` flanking `γ = p/2^m`.
pub fn standard_triple(gamma: &DyadicIndex) -> (DyadicIndex, DyadicIndex) {
    if gamma.is_integer() {
        return (gamma.twist(-1), gamma.twist(1));
    }
    (gamma.offset(-1), gamma.offset(1))
}

/// All reduced dyadics of level at most `max_level` with value in `[lo, hi]`, in increasing order.
pub fn dyadics_in(lo: i64, hi: i64, max_level: u32) -> Vec<DyadicIndex> {
    let scale = 1i64 << max_level;
    (lo * scale..=hi * scale).map(|p| DyadicIndex::new(p, max_level)).collect()
}
