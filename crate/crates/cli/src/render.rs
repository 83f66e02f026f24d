//! Text and SVG pictures of path tuples and tableaux.

use std::fmt::Write;

use snakepath::{Algebra, Letter, Offset, Path, Tableau};

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];
const UNIT: f64 = 16.0;
const MARGIN: f64 = 24.0;
const EPS: f64 = 0.35;

fn label(ix: usize) -> char {
    char::from_digit((ix % 36) as u32, 36).unwrap_or('?')
}

fn y_value(y: Offset) -> f64 {
    y.int as f64 + EPS * y.eps as f64
}

fn level_range(paths: &[Path]) -> Option<(i32, i32)> {
    let ys = paths.iter().flat_map(|p| p.points.iter().map(|q| q.y.int));
    let lo = ys.clone().min()?;
    Some((lo, ys.max()?))
}

/// One character per lattice unit, levels growing downwards. Vertices carry
/// the 1-based index of their path, `*` where paths meet.
pub fn paths_ascii(alg: &Algebra, paths: &[Path]) -> String {
    let width = (4 * alg.rank() - 1) as usize;
    let Some((lo, hi)) = level_range(paths) else { return String::new() };
    let mut grid = vec![vec![' '; width]; (hi - lo + 1) as usize];
    let spin = (2 * alg.rank() - 1) as usize;
    for row in grid.iter_mut() {
        row[spin] = ':';
    }
    let put = |x: i32, y: i32, c: char, grid: &mut Vec<Vec<char>>| {
        let cell = &mut grid[(y - lo) as usize][x as usize];
        *cell = match *cell {
            ' ' | ':' => c,
            old if old == c => c,
            _ => '*',
        };
    };
    for (ix, p) in paths.iter().enumerate() {
        for w in p.points.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b.x - a.x == 2 {
                let c = if b.y.int > a.y.int { '\\' } else { '/' };
                put(a.x + 1, (a.y.int + b.y.int) / 2, c, &mut grid);
            }
        }
        for q in &p.points {
            put(q.x, q.y.int, label(ix + 1), &mut grid);
        }
    }
    let mut out = String::new();
    for (r, row) in grid.iter().enumerate() {
        let line: String = row.iter().collect();
        let _ = writeln!(out, "{:>4} |{}", lo + r as i32, line.trim_end());
    }
    out
}

pub fn paths_svg(alg: &Algebra, paths: &[Path]) -> String {
    let cols = (4 * alg.rank() - 2) as f64;
    let (lo, hi) = level_range(paths).unwrap_or((0, 0));
    let w = cols * UNIT + 2.0 * MARGIN;
    let h = (hi - lo) as f64 * UNIT + 2.0 * MARGIN;
    let px = |x: i32| MARGIN + x as f64 * UNIT;
    let py = |y: Offset| MARGIN + (y_value(y) - lo as f64) * UNIT;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    if !paths.is_empty() {
        let sx = px(2 * alg.rank() as i32 - 1);
        let _ = writeln!(
            out,
            r##"  <line x1="{sx:.1}" y1="{:.1}" x2="{sx:.1}" y2="{:.1}" stroke="#999" stroke-dasharray="4 3"/>"##,
            MARGIN / 2.0,
            h - MARGIN / 2.0
        );
    }
    for (ix, p) in paths.iter().enumerate() {
        let colour = PALETTE[ix % PALETTE.len()];
        let pts: Vec<String> = p.points.iter().map(|q| format!("{:.1},{:.1}", px(q.x), py(q.y))).collect();
        let _ = writeln!(
            out,
            r#"  <polyline points="{}" fill="none" stroke="{colour}" stroke-width="2"/>"#,
            pts.join(" ")
        );
        for q in &p.points {
            let _ = writeln!(
                out,
                r#"  <circle cx="{:.1}" cy="{:.1}" r="2.5" fill="{colour}"/>"#,
                px(q.x),
                py(q.y)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn letter_text(l: Letter) -> String {
    match l {
        Letter::Bar(i) => format!("{i}\u{305}"),
        other => other.token(),
    }
}

pub fn tableau_svg(t: &Tableau) -> String {
    let d = t.shape();
    let box_size = 28.0;
    let top = d.columns().iter().map(|c| c.0).min().unwrap_or(0);
    let bottom = d.columns().iter().map(|c| c.1).max().unwrap_or(-1);
    let w = d.num_columns() as f64 * box_size + 2.0 * MARGIN;
    let h = (bottom - top + 1).max(0) as f64 * box_size + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    for j in 1..=d.num_columns() {
        let (t0, b0) = d.column(j);
        for row in t0..=b0 {
            let x = MARGIN + (j - 1) as f64 * box_size;
            let y = MARGIN + (row - top) as f64 * box_size;
            let _ = writeln!(
                out,
                r#"  <rect x="{x:.1}" y="{y:.1}" width="{box_size:.1}" height="{box_size:.1}" fill="none" stroke="black"/>"#
            );
            let _ = writeln!(
                out,
                r#"  <text x="{:.1}" y="{:.1}" font-family="serif" font-size="15" text-anchor="middle">{}</text>"#,
                x + box_size / 2.0,
                y + box_size * 0.68,
                letter_text(t.letter(row, j))
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
