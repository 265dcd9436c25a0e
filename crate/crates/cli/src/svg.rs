//! Deterministic SVG drawing of a wall fan in the `(ch1/ch0, ch2/ch0)` plane.

use std::fmt::Write as _;

use p2walls::exactnum::rational_to_f64;
use p2walls::exceptional::{dyadics_in, e_plus, tent_interval};
use p2walls::ktheory::span;
use p2walls::walls::{ConeSummary, Fan, Side};
use p2walls::{PlaneLine, Rational};

const SIZE: f64 = 800.0;
const SAMPLES: usize = 256;
const TENT_LEVEL: u32 = 4;

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

struct View {
    x_lo: f64,
    x_hi: f64,
    y_lo: f64,
    y_hi: f64,
}

impl View {
    fn px(&self, x: f64) -> f64 {
        (x - self.x_lo) / (self.x_hi - self.x_lo) * SIZE
    }

    fn py(&self, y: f64) -> f64 {
        (self.y_hi - y) / (self.y_hi - self.y_lo) * SIZE
    }

    fn point(&self, x: f64, y: f64) -> String {
        format!("{},{}", num(self.px(x)), num(self.py(y)))
    }
}

fn coeffs(l: &PlaneLine) -> (f64, f64, f64) {
    (rational_to_f64(&l.a()), rational_to_f64(&l.b()), rational_to_f64(&l.c()))
}

/// `y` on the line `A·y + B·x + C = 0`.
fn y_on(l: &PlaneLine, x: f64) -> Option<f64> {
    let (a, b, c) = coeffs(l);
    (a != 0.0).then(|| -(b * x + c) / a)
}

fn chord(l: &PlaneLine) -> Option<(f64, f64)> {
    span(l, &Rational::from_integer(0.into())).ok().map(|(a, b)| (a.to_f64(), b.to_f64()))
}

fn view(s: &ConeSummary) -> View {
    let w_xy = s.w.xy().map(|(x, y)| (rational_to_f64(&x), rational_to_f64(&y)));
    let mut x_lo = w_xy.map_or(f64::INFINITY, |p| p.0);
    let mut x_hi = x_lo;
    for f in &s.fans {
        if let Some((a, b)) = chord(&f.effective.line) {
            match f.side {
                Side::Right => x_hi = if x_hi.is_finite() { x_hi.max(b) } else { b },
                _ => {
                    x_lo = x_lo.min(a);
                    if !x_hi.is_finite() {
                        x_hi = b;
                    }
                }
            }
        }
    }
    if !x_lo.is_finite() || !x_hi.is_finite() {
        (x_lo, x_hi) = (-1.0, 1.0);
    }
    let (x_lo, x_hi) = (x_lo - 1.0, x_hi + 1.0);
    let y_w = w_xy.map_or(-0.5, |p| p.1);
    View {
        x_lo,
        x_hi,
        y_lo: y_w.min(-0.5) - 1.0,
        y_hi: x_lo.powi(2).max(x_hi.powi(2)) / 2.0 + 1.0,
    }
}

fn parabola(v: &View, level: f64) -> String {
    (0..SAMPLES)
        .map(|i| {
            let x = v.x_lo + (v.x_hi - v.x_lo) * i as f64 / (SAMPLES - 1) as f64;
            v.point(x, x * x / 2.0 - level)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn tents(out: &mut String, v: &View) {
    let lo = v.x_lo.floor() as i64 - 1;
    let hi = v.x_hi.ceil() as i64 + 1;
    for ix in dyadics_in(lo, hi, TENT_LEVEL) {
        let (xl, xr) = tent_interval(&ix);
        let (xl, xr) = (xl.to_f64(), xr.to_f64());
        if xr < v.x_lo || xl > v.x_hi {
            continue;
        }
        let top = e_plus(&ix);
        let (Some(tx), Some(ty)) = (top.x(), top.y()) else { continue };
        let foot = |x: f64| v.point(x, x * x / 2.0 - 0.5);
        let _ = writeln!(
            out,
            r#"<polyline points="{} {} {}"/>"#,
            foot(xl),
            v.point(tx.to_f64(), ty.to_f64()),
            foot(xr)
        );
    }
}

/// The drawn part of a wall: from `w` to the window edge on the fan's side.
fn ray(v: &View, s: &ConeSummary, side: Side, l: &PlaneLine) -> Option<(f64, f64, f64, f64)> {
    let edge = if side == Side::Right { v.x_hi } else { v.x_lo };
    let (x0, y0) = match s.w.xy() {
        Some((x, y)) => (rational_to_f64(&x), rational_to_f64(&y)),
        None => {
            let other = if side == Side::Right { v.x_lo } else { v.x_hi };
            (other, y_on(l, other)?)
        }
    };
    let y1 = y_on(l, edge)?;
    let bound = if y1 > v.y_hi { v.y_hi } else if y1 < v.y_lo { v.y_lo } else { y1 };
    if bound == y1 {
        return Some((x0, y0, edge, y1));
    }
    // leave through the top or bottom edge instead
    let (a, b, c) = coeffs(l);
    Some((x0, y0, -(a * bound + c) / b, bound))
}

fn wall_line(out: &mut String, v: &View, seg: (f64, f64, f64, f64), attrs: &str) {
    let _ = writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" {attrs}/>"#,
        num(v.px(seg.0)),
        num(v.py(seg.1)),
        num(v.px(seg.2)),
        num(v.py(seg.3))
    );
}

fn label(out: &mut String, v: &View, seg: (f64, f64, f64, f64), side: Side, text: &str) {
    // on the side edges the text runs inward; on the top or bottom edge it runs outward
    let on_side_edge = seg.2 == v.x_lo || seg.2 == v.x_hi;
    let inward = (side == Side::Right) == on_side_edge;
    let x = v.px(seg.2) + if inward { -4.0 } else { 4.0 };
    let y = v.py(seg.3).clamp(12.0, SIZE - 4.0);
    let x = x.clamp(4.0, SIZE - 4.0);
    let anchor = if inward { "end" } else { "start" };
    let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="{anchor}">{text}</text>"#, num(x), num(y));
}

fn fan(walls: &mut String, labels: &mut String, v: &View, s: &ConeSummary, f: &Fan) {
    let tag = if f.side == Side::Right { "right" } else { "left" };
    for wall in &f.walls {
        let color = if wall.flags.nef { "#ff7f0e" } else { "#d62728" };
        if let Some(seg) = ray(v, s, f.side, &wall.line) {
            wall_line(walls, v, seg, &format!(r#"stroke="{color}""#));
        }
    }
    if let Some(seg) = ray(v, s, f.side, &f.effective.line) {
        wall_line(walls, v, seg, r##"stroke="#2ca02c" stroke-width="2""##);
        label(labels, v, seg, f.side, &format!("{tag} effective {}", f.effective.line));
    }
    if let Some(m) = &f.movable {
        if let Some(seg) = ray(v, s, f.side, m) {
            wall_line(walls, v, seg, r##"stroke="#9467bd" stroke-dasharray="6 4""##);
            let mut seg = seg;
            seg.3 += (v.y_hi - v.y_lo) * 0.03;
            label(labels, v, seg, f.side, &format!("{tag} movable {m}"));
        }
    }
    if let Some(seg) = ray(v, s, f.side, &f.nef) {
        let mut seg = seg;
        seg.3 -= (v.y_hi - v.y_lo) * 0.03;
        label(labels, v, seg, f.side, &format!("{tag} nef {}", f.nef));
    }
}

pub fn render(s: &ConeSummary) -> String {
    let v = view(s);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n",
    );
    out.push_str("<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n");
    out.push_str("<g id=\"discriminant\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\">\n");
    let _ = writeln!(out, r#"<polyline id="delta-0" points="{}"/>"#, parabola(&v, 0.0));
    let _ = writeln!(out, r#"<polyline id="delta-half" points="{}" stroke-dasharray="4 3"/>"#, parabola(&v, 0.5));
    out.push_str("</g>\n");
    out.push_str("<g id=\"le-potier\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\">\n");
    tents(&mut out, &v);
    out.push_str("</g>\n");
    let (mut walls, mut labels) = (String::new(), String::new());
    for f in &s.fans {
        fan(&mut walls, &mut labels, &v, s, f);
    }
    out.push_str("<g id=\"walls\" stroke-width=\"1\">\n");
    out.push_str(&walls);
    out.push_str("</g>\n");
    out.push_str("<g id=\"labels\" font-family=\"monospace\" font-size=\"12\" fill=\"black\">\n");
    out.push_str(&labels);
    out.push_str("</g>\n");
    if let Some((x, y)) = s.w.xy() {
        let _ = writeln!(
            out,
            r#"<circle id="w" cx="{}" cy="{}" r="4" fill="black"/>"#,
            num(v.px(rational_to_f64(&x))),
            num(v.py(rational_to_f64(&y)))
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="12">w = {}</text>"#,
            num(v.px(rational_to_f64(&x)) + 6.0),
            num(v.py(rational_to_f64(&y)) + 14.0),
            s.w
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Normalizes line endings and trailing whitespace before golden comparison.
pub fn canonicalize(s: &str) -> String {
    let mut out: String = s.replace("\r\n", "\n").lines().map(|l| l.trim_end().to_owned() + "\n").collect();
    if out.is_empty() {
        out.push('\n');
    }
    out
}
