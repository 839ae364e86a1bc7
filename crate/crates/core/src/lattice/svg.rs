//! Plain SVG 1.1 renderings of tilings and path families.

use std::fmt::Write;

use super::{DominoTiling, LatticePath, LatticeVertex};

const UNIT: i32 = 24;
const FILL: [&str; 4] = ["#d94f4f", "#4f7fd9", "#e6c84f", "#5fb36b"];

fn header(n: usize) -> (String, i32) {
    let half = (n as i32 + 1) * UNIT;
    let size = 2 * half;
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    (s, half)
}

fn point(half: i32, x2: i32, y2: i32) -> String {
    // coordinates arrive doubled so half-units stay integral
    format!("{},{}", half + x2 * UNIT / 2, half - y2 * UNIT / 2)
}

/// One rectangle per domino, colored by orientation and the position of its
/// black square.
pub fn tiling_svg(t: &DominoTiling) -> String {
    let n = t.order();
    let (mut s, half) = header(n);
    for d in t.dominoes() {
        let (a0, b0) = (d.first.0.min(d.second.0), d.first.1.min(d.second.1));
        let (w, h) = if d.is_horizontal() { (2, 1) } else { (1, 2) };
        let black_first = t.region().is_black(a0, b0);
        let color = FILL[(d.is_horizontal() as usize) * 2 + black_first as usize];
        writeln!(
            s,
            r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="{color}" stroke="black" stroke-width="1"/>"#,
            half + a0 * UNIT,
            half - (b0 + h) * UNIT,
            w * UNIT,
            h * UNIT
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// One polyline per path, through the left-edge midpoints of the visited
/// black squares.
pub fn family_svg(n: usize, paths: &[LatticePath]) -> String {
    let (mut s, half) = header(n);
    let mid = |v: &LatticeVertex| point(half, 2 * v.a, 2 * v.b + 1);
    for p in paths {
        let pts: Vec<String> = p.vertices.iter().map(mid).collect();
        writeln!(
            s,
            r#"  <polyline points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            pts.join(" ")
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}
