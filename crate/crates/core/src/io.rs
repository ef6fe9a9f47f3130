//! Text formats: point files and polygon files.
//!
//! A point file has one `x y` pair per line. A polygon file starts with a
//! `POLYGON` line followed by vertex lines, then optional `HOLE` blocks. In
//! both, `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{LatticePoint, PolygonWithHoles, Rational, RationalPoint};
use crate::range::PointSet;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn two_fields(line: usize, text: &str) -> Result<(&str, &str)> {
    let mut it = text.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(parse_err(line, format!("expected two coordinates, got {text:?}"))),
    }
}

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (line, content) in content_lines(text) {
        let (a, b) = two_fields(line, content)?;
        let coord = |s: &str| {
            s.parse::<i64>()
                .map_err(|_| parse_err(line, format!("not an integer: {s:?}")))
        };
        let p = LatticePoint::new(coord(a)?, coord(b)?);
        if !p.in_bounds() {
            return Err(parse_err(
                line,
                Error::CoordinateOutOfBounds { x: p.x, y: p.y }.to_string(),
            ));
        }
        if let Some(first) = seen.insert(p, line) {
            return Err(parse_err(
                line,
                format!("{} (first on line {first})", Error::DuplicatePoint { x: p.x, y: p.y }),
            ));
        }
        points.push(p);
    }
    PointSet::new(points)
}

/// One point per line, in the set's order.
pub fn format_points(set: &PointSet) -> String {
    let mut out = String::new();
    for p in set.iter() {
        writeln!(out, "{} {}", p.x, p.y).unwrap();
    }
    out
}

/// An integer or `p/q`.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("not a rational: {s:?}");
    match s.split_once('/') {
        None => num_bigint::BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n = num_bigint::BigInt::from_str(n).map_err(|_| bad())?;
            let d = num_bigint::BigInt::from_str(d).map_err(|_| bad())?;
            if d == 0.into() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub fn parse_polygon(text: &str) -> Result<PolygonWithHoles> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, l)) if l.eq_ignore_ascii_case("POLYGON") => {}
        Some((line, l)) => return Err(parse_err(line, format!("expected POLYGON, got {l:?}"))),
        None => return Err(parse_err(1, "empty polygon file")),
    }
    let mut rings: Vec<Vec<RationalPoint>> = vec![Vec::new()];
    for (line, content) in lines {
        if content.eq_ignore_ascii_case("HOLE") {
            rings.push(Vec::new());
            continue;
        }
        let (a, b) = two_fields(line, content)?;
        let x = parse_rational(a).map_err(|m| parse_err(line, m))?;
        let y = parse_rational(b).map_err(|m| parse_err(line, m))?;
        rings.last_mut().unwrap().push(RationalPoint::new(x, y));
    }
    let outer = rings.remove(0);
    PolygonWithHoles::new(outer, rings)
}
