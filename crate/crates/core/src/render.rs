//! Text and SVG drawings of a labeled table.
//!
//! Three views, all derived from the splitting alone:
//! - values: the filled-in table, row labels down the left, column labels on top;
//! - path: each cell shows the direction to the cell holding the next value,
//!   the last value is marked `●`;
//! - blocks: the values view cut along the innermost block boundaries.

use std::fmt::Write as _;

use crate::geometry::block_radices;
use crate::splitting::Splitting;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum View {
    Values,
    Path,
    Blocks,
}

fn width(s: &Splitting) -> usize {
    let max = s
        .cells()
        .saturating_sub(1)
        .max(s.a.iter().copied().max().unwrap_or(0))
        .max(s.b.iter().copied().max().unwrap_or(0));
    max.to_string().len()
}

/// Row and column of every value, indexed by value. Assumes a valid
/// splitting.
fn positions(s: &Splitting) -> Vec<(usize, usize)> {
    let mut pos = vec![(0, 0); s.cells()];
    for i in 0..s.rows {
        for j in 0..s.cols {
            if let Some(slot) = pos.get_mut(s.cell(i, j)) {
                *slot = (i, j);
            }
        }
    }
    pos
}

fn arrow(from: (usize, usize), to: (usize, usize)) -> char {
    use std::cmp::Ordering::*;
    match (to.0.cmp(&from.0), to.1.cmp(&from.1)) {
        (Equal, Greater) => '→',
        (Equal, Less) => '←',
        (Greater, Equal) => '↓',
        (Less, Equal) => '↑',
        (Greater, Greater) => '↘',
        (Greater, Less) => '↙',
        (Less, Greater) => '↗',
        (Less, Less) => '↖',
        (Equal, Equal) => '●',
    }
}

fn grid(s: &Splitting, cell: impl Fn(usize, usize) -> String) -> Vec<Vec<String>> {
    let mut rows = vec![std::iter::once("+".to_string())
        .chain(s.b.iter().map(|b| b.to_string()))
        .collect::<Vec<_>>()];
    for i in 0..s.rows {
        rows.push(
            std::iter::once(s.a[i].to_string())
                .chain((0..s.cols).map(|j| cell(i, j)))
                .collect(),
        );
    }
    rows
}

fn pad(cell: &str, w: usize) -> String {
    let len = cell.chars().count();
    format!("{}{}", " ".repeat(w.saturating_sub(len)), cell)
}

fn plain(rows: &[Vec<String>], w: usize) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(|c| pad(c, w)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn render_values(s: &Splitting) -> String {
    plain(&grid(s, |i, j| s.cell(i, j).to_string()), width(s))
}

pub fn render_path(s: &Splitting) -> String {
    let pos = positions(s);
    let m = s.cells();
    let g = grid(s, |i, j| {
        let v = s.cell(i, j);
        if v + 1 >= m {
            '●'.to_string()
        } else {
            arrow((i, j), pos[v + 1]).to_string()
        }
    });
    plain(&g, width(s))
}

/// Innermost block sizes `(rows per block, cols per block)`; the whole table
/// when a side has a single radix position or the splitting has no scheme.
pub fn block_shape(s: &Splitting) -> (usize, usize) {
    match block_radices(s) {
        Some((fa, fb)) => (
            if fa.len() > 1 { fa[0] } else { s.rows },
            if fb.len() > 1 { fb[0] } else { s.cols },
        ),
        None => (s.rows, s.cols),
    }
}

pub fn render_blocks(s: &Splitting) -> String {
    let w = width(s);
    let (block_rows, block_cols) = block_shape(s);
    let g = grid(s, |i, j| s.cell(i, j).to_string());
    let mut out = String::new();
    for (r, row) in g.iter().enumerate() {
        let mut line = pad(&row[0], w);
        for (j, cell) in row.iter().enumerate().skip(1) {
            let cut = j > 1 && (j - 1) % block_cols == 0;
            line.push_str(if cut { " | " } else { " " });
            line.push_str(&pad(cell, w));
        }
        // Data row r is table row r - 1; a cut goes under header and blocks.
        let cut_below = r == 0 || (r < s.rows && r % block_rows == 0);
        out.push_str(&line);
        out.push('\n');
        if cut_below {
            let rule: String = line
                .chars()
                .map(|c| if c == '|' { '+' } else { '-' })
                .collect();
            out.push_str(&rule);
            out.push('\n');
        }
    }
    out
}

pub fn render(s: &Splitting, view: View) -> String {
    match view {
        View::Values => render_values(s),
        View::Path => render_path(s),
        View::Blocks => render_blocks(s),
    }
}

/// A standalone SVG of one view.
pub fn render_svg(s: &Splitting, view: View) -> String {
    const CELL: usize = 32;
    let width_px = (s.cols + 1) * CELL;
    let height_px = (s.rows + 1) * CELL;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" viewBox="0 0 {width_px} {height_px}" font-family="monospace" font-size="12">"#
    );
    let center = |i: usize, j: usize| ((j + 1) * CELL + CELL / 2, (i + 1) * CELL + CELL / 2);
    let text = |svg: &mut String, x: usize, y: usize, t: &str, weight: &str| {
        let _ = writeln!(
            svg,
            r#"<text x="{x}" y="{}" text-anchor="middle" font-weight="{weight}">{t}</text>"#,
            y + 4
        );
    };
    text(&mut svg, CELL / 2, CELL / 2, "+", "bold");
    for (j, b) in s.b.iter().enumerate() {
        text(&mut svg, (j + 1) * CELL + CELL / 2, CELL / 2, &b.to_string(), "bold");
    }
    for (i, a) in s.a.iter().enumerate() {
        text(&mut svg, CELL / 2, (i + 1) * CELL + CELL / 2, &a.to_string(), "bold");
    }
    for i in 0..=s.rows {
        let y = (i + 1) * CELL;
        let _ = writeln!(
            svg,
            r##"<line x1="{CELL}" y1="{y}" x2="{width_px}" y2="{y}" stroke="#bbb"/>"##
        );
    }
    for j in 0..=s.cols {
        let x = (j + 1) * CELL;
        let _ = writeln!(
            svg,
            r##"<line x1="{x}" y1="{CELL}" x2="{x}" y2="{height_px}" stroke="#bbb"/>"##
        );
    }
    match view {
        View::Values | View::Blocks => {
            for i in 0..s.rows {
                for j in 0..s.cols {
                    let (x, y) = center(i, j);
                    text(&mut svg, x, y, &s.cell(i, j).to_string(), "normal");
                }
            }
        }
        View::Path => {
            let points: Vec<String> = positions(s)
                .into_iter()
                .map(|(i, j)| {
                    let (x, y) = center(i, j);
                    format!("{x},{y}")
                })
                .collect();
            let _ = writeln!(
                svg,
                r##"<polyline points="{}" fill="none" stroke="#c33" stroke-width="1.5"/>"##,
                points.join(" ")
            );
        }
    }
    if view == View::Blocks {
        let (br, bc) = block_shape(s);
        for i in (br..s.rows).step_by(br) {
            let y = (i + 1) * CELL;
            let _ = writeln!(
                svg,
                r##"<line x1="{CELL}" y1="{y}" x2="{width_px}" y2="{y}" stroke="#000" stroke-width="3"/>"##
            );
        }
        for j in (bc..s.cols).step_by(bc) {
            let x = (j + 1) * CELL;
            let _ = writeln!(
                svg,
                r##"<line x1="{x}" y1="{CELL}" x2="{x}" y2="{height_px}" stroke="#000" stroke-width="3"/>"##
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}
