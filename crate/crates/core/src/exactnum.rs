//! Exact scalars: big rationals and numbers of the form `a + b√D`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Very large numerators and denominators: scale both down first.
        let n = r.numer().bits() as i64;
        let d = r.denom().bits() as i64;
        let shift = (n.max(d) - 1000).max(0) as u64;
        let nn = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let dd = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        nn / dd
    })
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// The real number `a + b·√d` with rational `a`, `b` and `d ≥ 0`.
///
/// The radicand is kept as an integer with small square factors pulled out; values that are
/// rational are stored with `b = d = 0`. Order and equality are decided exactly.
#[derive(Clone, Debug)]
pub struct QuadraticScalar {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadraticScalar {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        assert!(!d.is_negative(), "negative radicand");
        if b.is_zero() || d.is_zero() {
            return Self::rational(a);
        }
        // √(n/m) = √(n·m)/m
        let mut b = b / Rational::from_integer(d.denom().clone());
        let mut n = d.numer() * d.denom();
        for p in SMALL_PRIMES {
            let p = BigInt::from(p);
            let pp = &p * &p;
            while (&n % &pp).is_zero() {
                n /= &pp;
                b *= Rational::from_integer(p.clone());
            }
        }
        let root = n.sqrt();
        if &root * &root == n {
            return Self::rational(a + b * Rational::from_integer(root));
        }
        QuadraticScalar { a, b, d: Rational::from_integer(n) }
    }

    pub fn rational(a: Rational) -> Self {
        QuadraticScalar { a, b: Rational::zero(), d: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn sqrt(d: Rational) -> Self {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn sign(&self) -> i32 {
        sign_parts(&self.a, &self.b, &self.d)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * rational_to_f64(&self.d).sqrt()
    }

    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.as_rational() {
            return r.floor().to_integer();
        }
        let mut n = BigInt::from(self.to_f64().floor() as i64);
        while compare(self, &Self::rational(Rational::from_integer(n.clone()))) == Ordering::Less {
            n -= 1;
        }
        while compare(self, &Self::rational(Rational::from_integer(&n + 1))) != Ordering::Less {
            n += 1;
        }
        n
    }

    fn compatible(&self, other: &Self) -> bool {
        self.is_rational() || other.is_rational() || self.d == other.d
    }

    fn common_radicand(&self, other: &Self) -> Rational {
        if self.is_rational() {
            other.d.clone()
        } else {
            self.d.clone()
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        self.compatible(other).then(|| {
            Self::new(&self.a + &other.a, &self.b + &other.b, self.common_radicand(other))
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        self.compatible(other).then(|| {
            let d = self.common_radicand(other);
            let a = &self.a * &other.a + &self.b * &other.b * &d;
            let b = &self.a * &other.b + &self.b * &other.a;
            Self::new(a, b, d)
        })
    }

    /// Sum of two values over the same radicand. Panics otherwise.
    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("incompatible radicands")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("incompatible radicands")
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("incompatible radicands")
    }

    /// `1/x` via the conjugate; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        (!norm.is_zero()).then(|| Self::new(&self.a / &norm, -&self.b / &norm, self.d.clone()))
    }

    pub fn neg(&self) -> Self {
        QuadraticScalar { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.a * k, &self.b * k, self.d.clone())
    }

    pub fn add_rational(&self, k: &Rational) -> Self {
        QuadraticScalar { a: &self.a + k, b: self.b.clone(), d: self.d.clone() }
    }
}

impl From<Rational> for QuadraticScalar {
    fn from(a: Rational) -> Self {
        Self::rational(a)
    }
}

impl From<&Rational> for QuadraticScalar {
    fn from(a: &Rational) -> Self {
        Self::rational(a.clone())
    }
}

fn sign_parts(a: &Rational, b: &Rational, d: &Rational) -> i32 {
    let sb = if d.is_zero() { 0 } else { sign(b) };
    let sa = sign(a);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    match (a * a).cmp(&(b * b * d)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

pub fn sign_of(x: &QuadraticScalar) -> i32 {
    x.sign()
}

/// Exact order of two values that may carry different radicands.
pub fn compare(x: &QuadraticScalar, y: &QuadraticScalar) -> Ordering {
    if let Some(diff) = x.checked_sub(y) {
        return diff.sign().cmp(&0);
    }
    // sign of α + β√d1 + γ√d2
    let alpha = &x.a - &y.a;
    let beta = &x.b;
    let gamma = -&y.b;
    let s1 = sign_parts(&alpha, beta, &x.d);
    let s2 = sign(&gamma);
    let s = if s1 == 0 {
        s2
    } else if s2 == 0 || s1 == s2 {
        s1
    } else {
        // |α + β√d1|² against γ²·d2
        let a = &alpha * &alpha + beta * beta * &x.d - &gamma * &gamma * &y.d;
        let b = Rational::from_integer(BigInt::from(2)) * &alpha * beta;
        match sign_parts(&a, &b, &x.d) {
            t if t > 0 => s1,
            t if t < 0 => s2,
            _ => 0,
        }
    };
    s.cmp(&0)
}

impl PartialEq for QuadraticScalar {
    fn eq(&self, other: &Self) -> bool {
        compare(self, other) == Ordering::Equal
    }
}

impl Eq for QuadraticScalar {}

impl PartialOrd for QuadraticScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl fmt::Display for QuadraticScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let surd = if self.b.is_one() {
            format!("√{}", self.d)
        } else if (-&self.b).is_one() {
            format!("-√{}", self.d)
        } else {
            format!("{}√{}", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{surd}")
        } else if self.b.is_negative() {
            write!(f, "{} - {}", self.a, surd.trim_start_matches('-'))
        } else {
            write!(f, "{} + {}", self.a, surd)
        }
    }
}
