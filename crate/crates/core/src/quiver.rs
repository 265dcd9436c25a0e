//! Numeric data of the quiver attached to a strong exceptional triple.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::exceptional::{chern_of, e_plus_character, DyadicIndex};
use crate::ktheory::{euler_form, ChernCharacter, PlaneLine, StabilityPoint};
use crate::lepotier::is_exceptional_multiple;

/// A strong exceptional triple `(E1, E2, E3)` and its arrow counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleData {
    pub indices: [DyadicIndex; 3],
    pub chern: [ChernCharacter; 3],
    pub hom12: BigInt,
    pub hom23: BigInt,
    pub hom13: BigInt,
}

/// Whether the dimension vector resolves `w` or `−w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DimSign {
    PlusW,
    MinusW,
}

/// `n1·e1 − n2·e2 + n3·e3 = ±w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionVector {
    pub n1: BigInt,
    pub n2: BigInt,
    pub n3: BigInt,
    pub sign: DimSign,
}

/// A King weight, primitive integral with `rho1 > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KingWeight {
    pub rho1: Rational,
    pub rho2: Rational,
    pub rho3: Rational,
}

fn matches_form(a: &BigInt, b: &BigInt, c: &BigInt, m: u32) -> bool {
    let three = BigInt::from(3) << m;
    let one = BigInt::one();
    let odd_or_integral = |p: &BigInt| m == 0 || p.is_odd();
    // {p−1, p, p+1}
    (odd_or_integral(b) && *a == b - &one && *c == b + &one)
        // {p, p+1, p−1+3}
        || (odd_or_integral(a) && *b == a + &one && *c == a - &one + &three)
        // {p+1−3, p−1, p}
        || (odd_or_integral(c) && *b == c - &one && *a == c + &one - &three)
}

/// Recognizes the three standard triple forms and computes the arrow counts.
pub fn triple_data(ix1: &DyadicIndex, ix2: &DyadicIndex, ix3: &DyadicIndex) -> Result<TripleData> {
    let top = ix1.level().max(ix2.level()).max(ix3.level());
    let scaled = |ix: &DyadicIndex, m: u32| -> Option<BigInt> {
        (ix.level() <= m).then(|| ix.p() << (m - ix.level()))
    };
    let known = (0..=top).any(|m| match (scaled(ix1, m), scaled(ix2, m), scaled(ix3, m)) {
        (Some(a), Some(b), Some(c)) => matches_form(&a, &b, &c, m),
        _ => false,
    });
    if !known {
        return Err(Error::NotAKnownTriple);
    }
    let chern = [chern_of(ix1), chern_of(ix2), chern_of(ix3)];
    let hom = |i: usize, j: usize| euler_form(&chern[i], &chern[j]).to_integer();
    Ok(TripleData {
        indices: [ix1.clone(), ix2.clone(), ix3.clone()],
        hom12: hom(0, 1),
        hom23: hom(1, 2),
        hom13: hom(0, 2),
        chern,
    })
}

fn det3(m: [[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn coords(v: &ChernCharacter) -> [Rational; 3] {
    [v.ch0.clone(), v.ch1.clone(), v.ch2.clone()]
}

/// Solves `n1·e1 − n2·e2 + n3·e3 = ±w` with all `n_i ≥ 0`.
pub fn dimension_vector(w: &ChernCharacter, t: &TripleData) -> Result<DimensionVector> {
    let cols = [coords(&t.chern[0]), coords(&-&t.chern[1]), coords(&t.chern[2])];
    let rhs = coords(w);
    let matrix = |replace: Option<usize>| {
        let mut m: [[Rational; 3]; 3] = Default::default();
        for (j, col) in cols.iter().enumerate() {
            let col = if replace == Some(j) { &rhs } else { col };
            for i in 0..3 {
                m[i][j] = col[i].clone();
            }
        }
        m
    };
    let d = det3(matrix(None));
    assert!(!d.is_zero(), "an exceptional triple is a basis");
    let n: Vec<Rational> = (0..3).map(|j| det3(matrix(Some(j))) / &d).collect();
    let (n, sign) = if n.iter().all(|x| !x.is_negative()) {
        (n, DimSign::PlusW)
    } else if n.iter().all(|x| !x.is_positive()) {
        (n.into_iter().map(|x| -x).collect(), DimSign::MinusW)
    } else {
        return Err(Error::NoNonnegativeSolution);
    };
    debug_assert!(n.iter().all(|x| x.is_integer()), "triple is a lattice basis");
    let [n1, n2, n3]: [BigInt; 3] = [n[0].to_integer(), n[1].to_integer(), n[2].to_integer()];
    Ok(DimensionVector { n1, n2, n3, sign })
}

/// `ρ = (f(e1), −f(e2), f(e3))` for the linear form `f` of `L`, made primitive with `ρ1 > 0`.
pub fn king_weight(l: &PlaneLine, t: &TripleData) -> Result<KingWeight> {
    let f: Vec<Rational> = t.chern.iter().map(|e| l.eval(e)).collect();
    if f[0].is_zero() {
        return Err(Error::ZeroOnE1);
    }
    let rho = [f[0].clone(), -f[1].clone(), f[2].clone()];
    let l = rho.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    let ints: Vec<BigInt> = rho.iter().map(|r| (r * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, r| g.gcd(r));
    let g = if ints[0].is_negative() { -g } else { g };
    let [r1, r2, r3] = [0, 1, 2].map(|i| Rational::new(ints[i].clone(), g.clone()));
    Ok(KingWeight { rho1: r1, rho2: r2, rho3: r3 })
}

impl KingWeight {
    /// `ρ · n`.
    pub fn pair(&self, n: &DimensionVector) -> Rational {
        &self.rho1 * Rational::from_integer(n.n1.clone())
            + &self.rho2 * Rational::from_integer(n.n2.clone())
            + &self.rho3 * Rational::from_integer(n.n3.clone())
    }
}

/// Expected dimension `1 − χ(w, w)` of the moduli space; `0` for an exceptional character.
pub fn moduli_dim(w: &ChernCharacter) -> BigInt {
    if matches!(is_exceptional_multiple(w), Some((1, _))) {
        return BigInt::zero();
    }
    (int(1) - euler_form(w, w)).to_integer()
}

/// Dimension `n1·n2·h − n1² − n2² + 1` of the Kronecker moduli space.
pub fn kronecker_dim(h: i64, n1: i64, n2: i64) -> i64 {
    n1 * n2 * h - n1 * n1 - n2 * n2 + 1
}

type Pt = (Rational, Rational);

fn cross(o: &Pt, a: &Pt, b: &Pt) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn on_segment(p: &Pt, a: &Pt, b: &Pt) -> bool {
    cross(a, b, p).is_zero()
        && a.0.clone().min(b.0.clone()) <= p.0
        && p.0 <= a.0.clone().max(b.0.clone())
        && a.1.clone().min(b.1.clone()) <= p.1
        && p.1 <= a.1.clone().max(b.1.clone())
}

/// Open pentagon `e1, e1⁺, e2, e3⁺, e3`.
pub fn mz_contains(t: &TripleData, p: &StabilityPoint) -> bool {
    let point = |v: &ChernCharacter| v.xy().expect("positive rank");
    let poly: Vec<Pt> = vec![
        point(&t.chern[0]),
        point(&e_plus_character(&t.indices[0])),
        point(&t.chern[1]),
        point(&e_plus_character(&t.indices[2])),
        point(&t.chern[2]),
    ];
    let q: Pt = (p.s.clone(), p.q.clone());
    let n = poly.len();
    if (0..n).any(|i| on_segment(&q, &poly[i], &poly[(i + 1) % n])) {
        return false;
    }
    // even-odd rule with a rightward ray; half-open edges handle vertices
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        if (a.1 > q.1) != (b.1 > q.1) {
            let s = cross(a, b, &q);
            let upward = b.1 > a.1;
            if (s.is_positive() && upward) || (s.is_negative() && !upward) {
                inside = !inside;
            }
        }
    }
    inside
}
