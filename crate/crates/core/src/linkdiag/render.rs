//! Text and SVG pictures of half grids, grids and fronts.
//!
//! Horizontal strands are drawn unbroken; vertical strands are cut where they
//! pass under. Output depends only on the diagram.

use std::fmt::Write;

use crate::halfgrid::{GridDiagram, HalfGrid, Mark};

use super::{corner, crossing_positions, Corner};

struct Glyphs {
    h: char,
    v: char,
    x: char,
    o: char,
    both: char,
}

const UNICODE: Glyphs = Glyphs { h: '─', v: '│', x: 'X', o: 'O', both: '⊗' };
const ASCII: Glyphs = Glyphs { h: '-', v: '|', x: 'X', o: 'O', both: '*' };

struct Canvas {
    cells: Vec<Vec<char>>,
}

impl Canvas {
    fn new(w: usize, h: usize) -> Self {
        Canvas { cells: vec![vec![' '; w]; h] }
    }

    fn set(&mut self, x: usize, y: usize, ch: char) {
        self.cells[y][x] = ch;
    }

    fn finish(self) -> String {
        let mut out = String::new();
        for row in self.cells {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Marks as `(column, row, mark)`; `rows` is the picture height in grid rows.
#[allow(clippy::too_many_arguments)]
fn draw(
    marks: &[(usize, usize, Mark)],
    row_pairs: &[(usize, usize)],
    col_spans: &[(usize, usize)],
    cols: usize,
    rows: usize,
    extra_bottom: usize,
    oriented: bool,
    glyphs: &Glyphs,
) -> String {
    let px = |c: usize| 4 * (c - 1);
    let py = |r: usize| 2 * (rows - r);
    let mut cv = Canvas::new(4 * (cols - 1) + 1, 2 * (rows - 1) + 1 + extra_bottom);
    for (c, &(lo, hi)) in col_spans.iter().enumerate() {
        let bottom = if lo == 0 { 2 * (rows - 1) + extra_bottom } else { py(lo) };
        for y in py(hi)..=bottom {
            cv.set(px(c + 1), y, glyphs.v);
        }
    }
    for (r, &(a, b)) in row_pairs.iter().enumerate() {
        for x in px(a.min(b))..=px(a.max(b)) {
            cv.set(x, py(r + 1), glyphs.h);
        }
    }
    for &(c, r, m) in marks {
        let ch = match (oriented, m) {
            (false, _) => glyphs.both,
            (true, Mark::X) => glyphs.x,
            (true, Mark::O) => glyphs.o,
        };
        cv.set(px(c), py(r), ch);
    }
    cv.finish()
}

pub fn grid_text(g: &GridDiagram, ascii_only: bool) -> String {
    let m = g.size();
    let rows: Vec<(usize, usize)> = g.x_cols().iter().copied().zip(g.o_cols().iter().copied()).collect();
    let spans: Vec<(usize, usize)> = (1..=m)
        .map(|c| {
            let [(a, _), (b, _)] = g.column(c);
            (a, b)
        })
        .collect();
    draw(&g.marks(), &rows, &spans, m, m, 0, g.is_oriented(), if ascii_only { &ASCII } else { &UNICODE })
}

/// The half grid with every mark joined to the bottom edge.
pub fn half_grid_text(h: &HalfGrid, ascii_only: bool) -> String {
    let n = h.n();
    let rows: Vec<(usize, usize)> = h.x_cols().iter().copied().zip(h.o_cols().iter().copied()).collect();
    let marks: Vec<(usize, usize, Mark)> = (1..=2 * n)
        .map(|c| {
            let (r, m) = h.column_mark(c);
            (c, r, m)
        })
        .collect();
    let spans: Vec<(usize, usize)> = marks.iter().map(|&(_, r, _)| (0, r)).collect();
    draw(&marks, &rows, &spans, 2 * n, n, 2, true, if ascii_only { &ASCII } else { &UNICODE })
}

const CELL: f64 = 40.0;
const MARGIN: f64 = 30.0;
const GAP: f64 = 7.0;

struct Svg {
    body: String,
    width: f64,
    height: f64,
}

impl Svg {
    fn new(cols: usize, rows: f64) -> Self {
        Svg {
            body: String::new(),
            width: 2.0 * MARGIN + CELL * (cols as f64 - 1.0),
            height: 2.0 * MARGIN + CELL * (rows - 1.0),
        }
    }

    fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64) {
        let _ = writeln!(
            self.body,
            r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2"/>"#
        );
    }

    fn mark(&mut self, x: f64, y: f64, oriented: bool, m: Mark) {
        let r = 9.0;
        let cross = |s: &mut Svg| {
            let d = r * 0.7;
            let _ = writeln!(
                s.body,
                r#"  <path d="M{} {} L{} {} M{} {} L{} {}" stroke="black" stroke-width="2"/>"#,
                x - d, y - d, x + d, y + d, x - d, y + d, x + d, y - d
            );
        };
        let circle = |s: &mut Svg| {
            let _ = writeln!(
                s.body,
                r#"  <circle cx="{x}" cy="{y}" r="{r}" fill="white" stroke="black" stroke-width="2"/>"#
            );
        };
        match (oriented, m) {
            (false, _) => {
                circle(self);
                cross(self);
            }
            (true, Mark::O) => circle(self),
            (true, Mark::X) => {
                let _ = writeln!(self.body, r#"  <rect x="{}" y="{}" width="{}" height="{}" fill="white"/>"#, x - r, y - r, 2.0 * r, 2.0 * r);
                cross(self);
            }
        }
    }

    fn finish(self, transform: Option<String>) -> String {
        let mut out = String::new();
        let (w, h) = if transform.is_some() {
            let s = self.width.max(self.height) * std::f64::consts::SQRT_2;
            (s, s)
        } else {
            (self.width, self.height)
        };
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
        );
        match transform {
            Some(t) => {
                let _ = writeln!(out, r#"<g transform="{t}">"#);
                out.push_str(&self.body);
                out.push_str("</g>\n");
            }
            None => out.push_str(&self.body),
        }
        out.push_str("</svg>\n");
        out
    }
}

fn grid_svg_body(g: &GridDiagram) -> Svg {
    let m = g.size();
    let px = |c: usize| MARGIN + CELL * (c as f64 - 1.0);
    let py = |r: usize| MARGIN + CELL * ((m - r) as f64);
    let mut svg = Svg::new(m, m as f64);
    let under = crossing_positions(g);
    for c in 1..=m {
        let [(lo, _), (hi, _)] = g.column(c);
        let mut y0 = py(hi);
        let mut cuts: Vec<usize> = under.iter().filter(|p| p.1 == c).map(|p| p.0).collect();
        cuts.sort_unstable_by(|a, b| b.cmp(a));
        for r in cuts {
            svg.line(px(c), y0, px(c), py(r) - GAP);
            y0 = py(r) + GAP;
        }
        svg.line(px(c), y0, px(c), py(lo));
    }
    for r in 1..=m {
        let (x, o) = (g.x_cols()[r - 1], g.o_cols()[r - 1]);
        svg.line(px(x.min(o)), py(r), px(x.max(o)), py(r));
    }
    for (c, r, mk) in g.marks() {
        svg.mark(px(c), py(r), g.is_oriented(), mk);
    }
    svg
}

pub fn grid_svg(g: &GridDiagram) -> String {
    grid_svg_body(g).finish(None)
}

pub fn half_grid_svg(h: &HalfGrid) -> String {
    let n = h.n();
    let px = |c: usize| MARGIN + CELL * (c as f64 - 1.0);
    let py = |r: usize| MARGIN + CELL * ((n - r) as f64);
    let bottom = py(1) + CELL * 0.75;
    let mut svg = Svg::new(2 * n, n as f64 + 0.75);
    for c in 1..=2 * n {
        let (r, _) = h.column_mark(c);
        let mut y0 = py(r);
        for below in (1..r).rev() {
            let (x, o) = (h.x_cols()[below - 1], h.o_cols()[below - 1]);
            if x.min(o) < c && c < x.max(o) {
                svg.line(px(c), y0, px(c), py(below) - GAP);
                y0 = py(below) + GAP;
            }
        }
        svg.line(px(c), y0, px(c), bottom);
    }
    for r in 1..=n {
        let (x, o) = (h.x_cols()[r - 1], h.o_cols()[r - 1]);
        svg.line(px(x.min(o)), py(r), px(x.max(o)), py(r));
    }
    for c in 1..=2 * n {
        let (r, m) = h.column_mark(c);
        svg.mark(px(c), py(r), true, m);
    }
    svg.finish(None)
}

/// The grid turned 45 degrees clockwise, with each cusp circled.
pub fn front_svg(g: &GridDiagram) -> String {
    let g = g.orient();
    let m = g.size();
    let mut svg = grid_svg_body(&g);
    let px = |c: usize| MARGIN + CELL * (c as f64 - 1.0);
    let py = |r: usize| MARGIN + CELL * ((m - r) as f64);
    for r in 1..=m {
        let (x, o) = (g.x_cols()[r - 1], g.o_cols()[r - 1]);
        for (c, partner) in [(x, o), (o, x)] {
            let [(ra, _), (rb, _)] = g.column(c);
            let other = if ra == r { rb } else { ra };
            if matches!(corner(partner > c, other > r), Corner::NE | Corner::SW) {
                let _ = writeln!(
                    svg.body,
                    r#"  <circle cx="{}" cy="{}" r="14" fill="none" stroke="red" stroke-width="1.5"/>"#,
                    px(c),
                    py(r)
                );
            }
        }
    }
    let side = svg.width.max(svg.height) * std::f64::consts::SQRT_2;
    let (cx, cy) = (svg.width / 2.0, svg.height / 2.0);
    let t = format!("translate({} {}) rotate(45 {cx} {cy})", side / 2.0 - cx, side / 2.0 - cy);
    svg.finish(Some(t))
}
