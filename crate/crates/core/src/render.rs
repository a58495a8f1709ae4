//! Text and SVG renderings.

use std::fmt::Write;

use crate::deform::DiffMatrix;
use crate::kk::YoungDiagram;
use crate::resarith::{LatticePoint, SingularityParams};

const CELL: i64 = 32;
const MARGIN: i64 = 24;

/// The orange lattice on a gray grid, with the Young diagram's boxes
/// numbered by `gamma` of their bottom-left corner.  `extent` is the number
/// of unit squares drawn along each axis.
pub fn young_svg(p: &SingularityParams, d: &YoungDiagram, extent: u32) -> String {
    let e = extent as i64;
    let size = 2 * MARGIN + e * CELL;
    // y grows upwards in the picture
    let px = |x: i64| MARGIN + x * CELL;
    let py = |y: i64| MARGIN + (e - y) * CELL;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(s, r#"<rect width="{size}" height="{size}" fill="white"/>"#);
    let _ = writeln!(s, r##"<g stroke="#d0d0d0" stroke-width="1">"##);
    for k in 0..=e {
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(k), py(0), px(k), py(e));
        let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, px(0), py(k), px(e), py(k));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g fill="#cfe3ff" stroke="#3060a0" stroke-width="1.5" font-family="sans-serif" font-size="13">"##
    );
    for x in 0..e.min(d.column_heights.len() as i64) {
        for y in 0..e.min(d.column_heights[x as usize] as i64) {
            let label = d.labels[x as usize][y as usize];
            let _ = writeln!(
                s,
                r#"<rect x="{}" y="{}" width="{CELL}" height="{CELL}"/><text x="{}" y="{}" fill="black" stroke="none" text-anchor="middle">{label}</text>"#,
                px(x),
                py(y + 1),
                px(x) + CELL / 2,
                py(y) - CELL / 2 + 5
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g fill="#808080">"##);
    for x in 0..=e {
        for y in 0..=e {
            if !p.is_orange(LatticePoint::new(x, y)) {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="2"/>"#, px(x), py(y));
            }
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g fill="#f28c28" stroke="#a05000">"##);
    for x in 0..=e {
        for y in 0..=e {
            if p.is_orange(LatticePoint::new(x, y)) {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="6"/>"#, px(x), py(y));
            }
        }
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

/// The upper triangle of `D`, one entry per line.
pub fn diff_text(d: &DiffMatrix) -> String {
    let mut s = String::new();
    for (i, j, x) in d.upper_entries() {
        let _ = writeln!(s, "m_{i},{j} = {x}");
    }
    if s.is_empty() {
        s.push_str("D = 0\n");
    }
    s
}

/// The full skew matrix with aligned columns.
pub fn diff_grid(d: &DiffMatrix) -> String {
    let cells: Vec<Vec<String>> = d.m.iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect();
    let n = cells.len();
    let widths: Vec<usize> = (0..n).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1)).collect();
    let mut s = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().enumerate().map(|(j, c)| format!("{c:>w$}", w = widths[j])).collect();
        let _ = writeln!(s, "[ {} ]", line.join("  "));
    }
    s
}

/// Renders a Gauss word as `w_{r-1} w_{r-2} ...`.
pub fn gauss_text(word: &[u32]) -> String {
    word.iter().map(|k| format!("w_{k}")).collect::<Vec<_>>().join(" ")
}
