//! Plain-text reports.

use std::fmt::Write as _;

use p2walls::walls::{ConeSummary, Side};

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
        Side::Both => "both",
    }
}

pub fn walls_report(s: &ConeSummary, include_rejected: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "w = {}", s.w);
    for f in &s.fans {
        let side = side_name(f.side);
        let _ = writeln!(out, "[{side}]");
        let _ = writeln!(out, "effective: {} ({:?}, E_w = {})", f.effective.line, f.effective.case, f.effective.e_w);
        match &f.movable {
            Some(m) => {
                let _ = writeln!(out, "movable: {m}");
            }
            None => {
                let _ = writeln!(out, "movable: undefined for non-primitive w");
            }
        }
        let _ = writeln!(out, "walls: {}", f.walls.len());
        for (i, w) in f.walls.iter().enumerate() {
            let mut tags = Vec::new();
            if w.flags.nef {
                tags.push("nef");
            }
            if w.flags.movable {
                tags.push("movable");
            }
            let tags = if tags.is_empty() { String::new() } else { format!(" [{}]", tags.join(", ")) };
            let _ = writeln!(out, "  {:>3}. {} slope {}{tags}", i + 1, w.line, w.slope);
            for p in &w.pairs {
                let _ = writeln!(
                    out,
                    "       v = {} u = {} chi(v,u) = {} chi(u,v) = {} {:?}",
                    p.v, p.u, p.chi_vu, p.chi_uv, p.class
                );
            }
        }
        if include_rejected {
            let _ = writeln!(out, "rejected: {}", f.rejected.len());
            for (v, r) in &f.rejected {
                let _ = writeln!(out, "       {v} {r}");
            }
        }
        match f.walls.first() {
            Some(first) => {
                let _ = writeln!(out, "nef ({side}): {} spanned by {}", f.nef, first.pairs[0].v);
            }
            None => {
                let _ = writeln!(out, "nef ({side}): {} (no actual wall)", f.nef);
            }
        }
    }
    out
}
