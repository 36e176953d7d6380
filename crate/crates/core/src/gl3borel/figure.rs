//! Figure model for a window of Borel types, with CSV and SVG emitters.
//!
//! Output is byte-deterministic: points are visited row by row from the
//! largest `d3` down, and all SVG coordinates are integers.

use std::fmt::Write as _;

use serde::Serialize;

use super::{classify, hirschowitz_ceiling, BorelPoint, Ceiling, Triple, Window};
use crate::error::Result;
use crate::strata::CurveContext;

pub const SPACING: i64 = 24;
pub const MARGIN: i64 = 48;
pub const DOT_RADIUS: i64 = 5;
const LEVEL_STROKE: &str = "#7f7f7f";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dot {
    pub d1: i64,
    pub d3: i64,
    pub point: BorelPoint,
}

/// The line `d3 - d1 = c`, clipped to the window when it meets it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelLine {
    pub c: i64,
    pub segment: Option<[(i64, i64); 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Figure {
    pub genus: i64,
    pub delta: i64,
    pub window: Window,
    pub ceiling: Ceiling,
    pub x_axis: &'static str,
    pub y_axis: &'static str,
    pub dots: Vec<Dot>,
    pub level_lines: Vec<LevelLine>,
}

fn clip(c: i64, w: &Window) -> Option<[(i64, i64); 2]> {
    let lo = w.d1_min.max(w.d3_min - c);
    let hi = w.d1_max.min(w.d3_max - c);
    (lo <= hi).then_some([(lo, lo + c), (hi, hi + c)])
}

pub fn figure_data(delta: i64, ctx: CurveContext, window: &Window) -> Result<Figure> {
    let dots = window
        .points()
        .map(|(d1, d3)| {
            let d = [d1, delta - d1 - d3, d3];
            classify(&d, delta, ctx).map(|point| Dot { d1, d3, point })
        })
        .collect::<Result<Vec<_>>>()?;
    let ceiling = hirschowitz_ceiling(delta, ctx);
    let level_lines = (1..=ceiling.value / 2)
        .map(|c| LevelLine {
            c,
            segment: clip(c, window),
        })
        .collect();
    Ok(Figure {
        genus: ctx.genus(),
        delta,
        window: *window,
        ceiling,
        x_axis: "d1",
        y_axis: "d3",
        dots,
        level_lines,
    })
}

fn triple(t: &Triple) -> String {
    format!("{};{};{}", t[0], t[1], t[2])
}

fn opt(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Figure {
    pub const CSV_HEADER: &'static str = "d1,d2,d3,s_bound,color,dim_upper,dim_exact,stratum_s,parent1,parent2";

    /// One row per lattice point; parents are written `d1;d2;d3`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for dot in &self.dots {
            let p = &dot.point;
            let (p1, p2) = match &p.closure_parents {
                Some([a, b]) => (triple(a), triple(b)),
                None => (String::new(), String::new()),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                p.d[0],
                p.d[1],
                p.d[2],
                p.s_bound,
                p.color,
                opt(p.dim_upper),
                opt(p.dim_exact),
                p.stratum_s.map(|s| s.to_string()).unwrap_or_default(),
                p1,
                p2
            );
        }
        out
    }

    fn x(&self, d1: i64) -> i64 {
        MARGIN + (d1 - self.window.d1_min) * SPACING
    }

    fn y(&self, d3: i64) -> i64 {
        MARGIN + (self.window.d3_max - d3) * SPACING
    }

    pub fn to_svg(&self) -> String {
        let w = &self.window;
        let width = 2 * MARGIN + (w.d1_max - w.d1_min) * SPACING;
        let height = 2 * MARGIN + (w.d3_max - w.d3_min) * SPACING;
        let (left, right) = (self.x(w.d1_min), self.x(w.d1_max));
        let (top, bottom) = (self.y(w.d3_max), self.y(w.d3_min));
        let mut out = String::new();
        let _ = writeln!(
            out,
            r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
        );
        let _ = writeln!(
            out,
            r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##
        );
        if (w.d1_min..=w.d1_max).contains(&0) {
            let x = self.x(0);
            let _ = writeln!(
                out,
                r##"<line x1="{x}" y1="{top}" x2="{x}" y2="{bottom}" stroke="#000000" stroke-width="1"/>"##
            );
        }
        if (w.d3_min..=w.d3_max).contains(&0) {
            let y = self.y(0);
            let _ = writeln!(
                out,
                r##"<line x1="{left}" y1="{y}" x2="{right}" y2="{y}" stroke="#000000" stroke-width="1"/>"##
            );
        }
        let _ = writeln!(
            out,
            r##"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"##,
            (left + right) / 2,
            height - MARGIN / 3,
            self.x_axis
        );
        let _ = writeln!(
            out,
            r##"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"##,
            MARGIN / 3,
            (top + bottom) / 2,
            self.y_axis
        );
        for line in &self.level_lines {
            if let Some([(a1, a3), (b1, b3)]) = line.segment {
                let _ = writeln!(
                    out,
                    r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{LEVEL_STROKE}" stroke-width="1" stroke-dasharray="4 3" data-c="{}"/>"##,
                    self.x(a1),
                    self.y(a3),
                    self.x(b1),
                    self.y(b3),
                    line.c
                );
            }
        }
        for dot in &self.dots {
            let p = &dot.point;
            let _ = writeln!(
                out,
                r##"<circle cx="{}" cy="{}" r="{DOT_RADIUS}" fill="{}"><title>({},{},{}) {}</title></circle>"##,
                self.x(dot.d1),
                self.y(dot.d3),
                p.color.hex(),
                p.d[0],
                p.d[1],
                p.d[2],
                p.color
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
