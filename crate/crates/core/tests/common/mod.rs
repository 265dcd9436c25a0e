//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the library's search or geometry code: exceptional characters come
//! from the slope recursion `ε((2p+1)/2^{m+1}) = ε(p/2^m).ε((p+1)/2^m)`, tents from their
//! closed-form endpoints, and quadratic comparisons from integer square roots.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `(r, ch1, ch2)` as exact rationals.
pub type Ch = (Q, Q, Q);

pub fn ch(r: i64, c: i64, d2: i64) -> Ch {
    (qi(r), qi(c), q(d2, 2))
}

pub fn chi(v: &Ch, w: &Ch) -> Q {
    // Hirzebruch–Riemann–Roch with td(P²) = 1 + 3/2 H + H²
    let (r1, c1, d1) = v;
    let (r2, c2, d2) = w;
    let dual_times = (r1 * r2, r1 * c2 - c1 * r2, r1 * d2 + d1 * r2 - c1 * c2);
    &dual_times.2 + q(3, 2) * &dual_times.1 + &dual_times.0
}

fn delta_of_rank(r: &Q) -> Q {
    (Q::one() - Q::one() / (r * r)) / qi(2)
}

/// Slope ε(p/2^m) of the exceptional bundle with that index.
pub fn epsilon(p: i64, m: u32) -> Q {
    static MEMO: Mutex<Option<HashMap<(i64, u32), Q>>> = Mutex::new(None);
    let (mut p, mut m) = (p, m);
    while m > 0 && p % 2 == 0 {
        p /= 2;
        m -= 1;
    }
    if m == 0 {
        return qi(p);
    }
    if let Some(v) = MEMO.lock().unwrap().get_or_insert_with(HashMap::new).get(&(p, m)) {
        return v.clone();
    }
    let a = epsilon((p - 1) / 2, m - 1);
    let b = epsilon((p + 1) / 2, m - 1);
    let ra = Q::from_integer(a.denom().clone());
    let rb = Q::from_integer(b.denom().clone());
    let v = (&a + &b) / qi(2) + (delta_of_rank(&rb) - delta_of_rank(&ra)) / (qi(3) + &a - &b);
    MEMO.lock().unwrap().get_or_insert_with(HashMap::new).insert((p, m), v.clone());
    v
}

/// Character of the exceptional bundle with slope `mu`: rank is the denominator.
pub fn exceptional_ch(p: i64, m: u32) -> Ch {
    let mu = epsilon(p, m);
    let r = Q::from_integer(mu.denom().clone());
    let d = &mu * &mu / qi(2) - delta_of_rank(&r);
    (r.clone(), &r * &mu, &r * d)
}

pub fn point(v: &Ch) -> (Q, Q) {
    (&v.1 / &v.0, &v.2 / &v.0)
}

pub fn bar_delta(v: &Ch) -> Q {
    let (x, y) = point(v);
    &x * &x / qi(2) - y
}

/// `x ≥ xl` and `x ≤ xr` with `xl = μ − 3/2 + √(9/4 − 1/r²)`, `xr = μ + 3/2 − √(9/4 − 1/r²)`.
pub fn in_tent(x: &Q, e: &Ch) -> bool {
    let mu = &e.1 / &e.0;
    let s2 = q(9, 4) - Q::one() / (&e.0 * &e.0);
    let left = x - &mu + q(3, 2);
    let right = &mu + q(3, 2) - x;
    let ge_root = |t: &Q| !t.is_negative() && t * t >= s2;
    ge_root(&left) && ge_root(&right)
}

/// Scans dyadic levels `0..=max_level` near `x` and returns the first `(p, m)` whose tent
/// contains `x`.
pub fn tent_scan(x: &Q, max_level: u32) -> Option<(i64, u32)> {
    let fl = x.floor().to_integer();
    let fl: i64 = fl.try_into().unwrap();
    for m in 0..=max_level {
        let scale = 1i64 << m;
        for p in (fl - 1) * scale..=(fl + 2) * scale {
            if m > 0 && p % 2 == 0 {
                continue;
            }
            if in_tent(x, &exceptional_ch(p, m)) {
                return Some((p, m));
            }
        }
    }
    None
}

/// Height of the Le Potier curve at `x` from the tent that contains it.
pub fn curve_height(x: &Q, max_level: u32) -> Q {
    let (p, m) = tent_scan(x, max_level).expect("tent within the scanned levels");
    let e = exceptional_ch(p, m);
    let mu = &e.1 / &e.0;
    let y_plus = &e.2 / &e.0 - Q::one() / (&e.0 * &e.0);
    let slope = if *x <= mu { &mu - q(3, 2) } else { &mu + q(3, 2) };
    y_plus + slope * (x - mu)
}

/// Sign of `y − h(x)`: +1 above, 0 on, −1 below.
pub fn position_sign(v: &Ch) -> i32 {
    let (x, y) = point(v);
    let d = y - curve_height(&x, 10);
    if d.is_positive() {
        1
    } else if d.is_zero() {
        0
    } else {
        -1
    }
}

/// Exact comparison of `a1 + b1√d1` and `a2 + b2√d2` by nested integer square roots.
pub fn compare_quadratic(x: (&Q, &Q, &Q), y: (&Q, &Q, &Q)) -> std::cmp::Ordering {
    let mut bits = 200u32;
    loop {
        let (lx, hx) = enclose(x, bits);
        let (ly, hy) = enclose(y, bits);
        if hx < ly {
            return std::cmp::Ordering::Less;
        }
        if hy < lx {
            return std::cmp::Ordering::Greater;
        }
        if exactly_equal(x, y) {
            return std::cmp::Ordering::Equal;
        }
        bits *= 2;
        assert!(bits < 1 << 14, "no separation");
    }
}

fn exactly_equal(x: (&Q, &Q, &Q), y: (&Q, &Q, &Q)) -> bool {
    // a1 − a2 = b2√d2 − b1√d1; squaring twice is exact for the equality test
    let s = |b: &Q, d: &Q| (b * b * d, b.is_negative());
    let (t1, n1) = s(x.1, x.2);
    let (t2, n2) = s(y.1, y.2);
    let da = x.0 - y.0;
    if da.is_zero() {
        return t1 == t2 && (t1.is_zero() || n1 == n2);
    }
    // (da)² = t1 + t2 − 2·b1b2√(d1d2)
    let cross = x.1 * y.1;
    let rest = &da * &da - &t1 - &t2;
    let lhs = rest.clone() * rest;
    let rhs = qi(4) * &cross * &cross * x.2 * y.2;
    if lhs != rhs {
        return false;
    }
    // confirm the sign by a coarse float check of the unsquared identity
    let f = |q: &Q| num_traits::ToPrimitive::to_f64(q).unwrap();
    let vx = f(x.0) + f(x.1) * f(x.2).sqrt();
    let vy = f(y.0) + f(y.1) * f(y.2).sqrt();
    (vx - vy).abs() < 1e-9 * (1.0 + vx.abs())
}

/// Integer bounds `[lo, hi]` on `(a + b√d)·2^bits`.
fn enclose(x: (&Q, &Q, &Q), bits: u32) -> (BigInt, BigInt) {
    let scale = BigInt::one() << bits;
    let (a, b, d) = x;
    let a_lo = (a * Q::from_integer(scale.clone())).floor().to_integer();
    let a_hi = &a_lo + 1;
    if b.is_zero() || d.is_zero() {
        return (a_lo, a_hi);
    }
    // b√d·2^bits = sign(b)·√(b²d·4^bits)
    let t = b * b * d * Q::from_integer(&scale * &scale);
    let t_lo = t.floor().to_integer();
    let r_lo = t_lo.sqrt();
    let r_hi = &r_lo + 2;
    if b.is_negative() {
        (a_lo - r_hi, a_hi - r_lo)
    } else {
        (a_lo + r_lo, a_hi + r_hi)
    }
}

/// Point-in-triangle with sign tests on the three edges of the triangle through `w`, `e`, and
/// the tent lines of `e`, using the same one-sided closure as the library documents.
/// Returns `None` when the triangle is degenerate.
pub fn tr_oracle(w: &Ch, e: &Ch, e_is_left_of_ew: bool, v: &Ch) -> Option<bool> {
    let (xw, yw) = point(w);
    let (xe, ye) = point(e);
    let mu = xe.clone();
    let yp = &ye - Q::one() / (&e.0 * &e.0);
    if xw == xe {
        return None;
    }
    let m_we = (&ye - &yw) / (&xe - &xw);
    // lines as y = m x + k
    let k_we = &ye - &m_we * &xe;
    let (m_l, m_r) = (&mu - q(3, 2), &mu + q(3, 2));
    let k_l = &yp - &m_l * &mu;
    let k_r = &yp - &m_r * &mu;
    let meet = |m1: &Q, k1: &Q, m2: &Q, k2: &Q| -> Option<(Q, Q)> {
        if m1 == m2 {
            return None;
        }
        let x = (k2 - k1) / (m1 - m2);
        let y = m1 * &x + k1;
        Some((x, y))
    };
    let xl = meet(&m_we, &k_we, &m_l, &k_l)?;
    let xr = meet(&m_we, &k_we, &m_r, &k_r)?;
    let plus = (mu.clone(), yp.clone());
    let side = |m: &Q, k: &Q, p: &(Q, Q)| {
        let s = &p.1 - m * &p.0 - k;
        if s.is_positive() {
            1
        } else if s.is_zero() {
            0
        } else {
            -1
        }
    };
    if side(&m_we, &k_we, &plus) == 0 {
        return None;
    }
    let p = point(v);
    let edges = [(&m_we, &k_we, &plus), (&m_l, &k_l, &xr), (&m_r, &k_r, &xl)];
    for (m, k, opp) in edges {
        let s = side(m, k, &p);
        if s != 0 && s != side(m, k, opp) {
            return Some(false);
        }
    }
    let on_excluded = if e_is_left_of_ew { side(&m_r, &k_r, &p) == 0 } else { side(&m_l, &k_l, &p) == 0 };
    Some(!on_excluded)
}

/// Greatest `c/r < mu` with `r ≤ rmax`, by checking every denominator.
pub fn farey_brute(mu: &Q, rmax: i64) -> Q {
    (1..=rmax)
        .map(|r| {
            let c = (mu * qi(r)).ceil().to_integer() - 1;
            Q::new(c, r.into())
        })
        .max()
        .unwrap()
}
