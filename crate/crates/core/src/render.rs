//! SVG drawings of instances and solutions.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::geom::{LatticePoint, Rational};

const STROKES: [&str; 2] = ["#1f77b4", "#d62728"];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    pub points: Vec<(f64, f64)>,
    /// Drawn as closed outlines; degenerate hulls become a dot or a segment.
    pub hulls: Vec<Vec<(f64, f64)>>,
    pub grid: bool,
}

pub fn lattice_xy(points: &[LatticePoint]) -> Vec<(f64, f64)> {
    points.iter().map(|p| (p.x as f64, p.y as f64)).collect()
}

pub fn rational_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

impl Scene {
    pub fn new(points: Vec<(f64, f64)>) -> Self {
        Self {
            points,
            ..Self::default()
        }
    }

    pub fn with_hull(mut self, hull: Vec<(f64, f64)>) -> Self {
        self.hulls.push(hull);
        self
    }

    pub fn with_grid(mut self, grid: bool) -> Self {
        self.grid = grid;
        self
    }

    /// Bounding box of everything drawn, padded by 5% (at least half a unit).
    fn viewport(&self) -> (f64, f64, f64, f64) {
        let all = self.points.iter().chain(self.hulls.iter().flatten());
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in all {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            return (-1.0, -1.0, 2.0, 2.0);
        }
        let pad = (0.05 * (x1 - x0).max(y1 - y0)).max(0.5);
        (x0 - pad, y0 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad)
    }

    pub fn to_svg(&self) -> String {
        let (x, y, w, h) = self.viewport();
        let unit = w.max(h) / 100.0;
        let mut s = String::new();
        // flip y so the plot reads like ordinary axes
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="{}">"#,
            fmt(x),
            fmt(-(y + h)),
            fmt(w),
            fmt(h),
            fmt(600.0 * h / w)
        )
        .unwrap();
        writeln!(s, r#"<g transform="scale(1,-1)">"#).unwrap();
        if self.grid {
            let thin = fmt(unit * 0.15);
            let mut gx = x.ceil();
            while gx <= x + w {
                writeln!(
                    s,
                    r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#ddd" stroke-width="{3}"/>"##,
                    fmt(gx),
                    fmt(y),
                    fmt(y + h),
                    thin
                )
                .unwrap();
                gx += 1.0;
            }
            let mut gy = y.ceil();
            while gy <= y + h {
                writeln!(
                    s,
                    r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#ddd" stroke-width="{3}"/>"##,
                    fmt(gy),
                    fmt(x),
                    fmt(x + w),
                    thin
                )
                .unwrap();
                gy += 1.0;
            }
        }
        for (k, hull) in self.hulls.iter().enumerate() {
            let color = STROKES[k % STROKES.len()];
            let pts: Vec<String> = hull.iter().map(|&(a, b)| format!("{},{}", fmt(a), fmt(b))).collect();
            writeln!(
                s,
                r#"<polygon points="{}" fill="{}" fill-opacity="0.15" stroke="{}" stroke-width="{}" stroke-linejoin="round"/>"#,
                pts.join(" "),
                color,
                color,
                fmt(unit * 0.6)
            )
            .unwrap();
        }
        for &(a, b) in &self.points {
            writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
                fmt(a),
                fmt(b),
                fmt(unit)
            )
            .unwrap();
        }
        s.push_str("</g>\n</svg>\n");
        s
    }
}
