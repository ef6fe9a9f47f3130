//! Exact planar primitives over integers and rationals.
//!
//! Lattice predicates use `i128` cross products, which cannot overflow for
//! coordinates within [`COORD_BOUND`]. Anything involving a rational point
//! goes through [`Rational`], with an `i128` path for orientation tests when
//! the denominators are small.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest admissible absolute lattice coordinate.
pub const COORD_BOUND: i64 = 1 << 30;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn in_bounds(self) -> bool {
        self.x.abs() <= COORD_BOUND && self.y.abs() <= COORD_BOUND
    }

    pub fn to_rational(self) -> RationalPoint {
        RationalPoint::new(rat(self.x), rat(self.y))
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point with exact rational coordinates, always kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    /// Returns the lattice point if both coordinates are integers.
    pub fn to_lattice(&self) -> Option<LatticePoint> {
        if !self.x.is_integer() || !self.y.is_integer() {
            return None;
        }
        let x = i64::try_from(self.x.to_integer()).ok()?;
        let y = i64::try_from(self.y.to_integer()).ok()?;
        Some(LatticePoint::new(x, y))
    }
}

impl From<LatticePoint> for RationalPoint {
    fn from(p: LatticePoint) -> Self {
        p.to_rational()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Twice the Euclidean area, kept exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Area2(pub Rational);

impl Area2 {
    pub fn zero() -> Self {
        Area2(Rational::zero())
    }

    pub fn from_int(v: i128) -> Self {
        Area2(Rational::from_integer(BigInt::from(v)))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Plain area as a float, for display only.
    pub fn area_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN) / 2.0
    }
}

impl fmt::Display for Area2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn of_i128(v: i128) -> Self {
        match v.signum() {
            1 => Orientation::CounterClockwise,
            -1 => Orientation::Clockwise,
            _ => Orientation::Collinear,
        }
    }

    fn of_rational(v: &Rational) -> Self {
        if v.is_positive() {
            Orientation::CounterClockwise
        } else if v.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

/// `(b - a) x (c - a)` for lattice points.
#[inline]
pub fn cross(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i128 {
    let (bx, by) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
    let (cx, cy) = ((c.x - a.x) as i128, (c.y - a.y) as i128);
    bx * cy - by * cx
}

#[inline]
pub fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Orientation {
    Orientation::of_i128(cross(a, b, c))
}

pub fn cross_rational(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Sign of `(b - a) x (c - a)`; counterclockwise is positive.
pub fn orientation(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Orientation {
    match cross_scaled_i128(a, b, c) {
        Some(v) => Orientation::of_i128(v),
        None => Orientation::of_rational(&cross_rational(a, b, c)),
    }
}

/// The cross product times a positive common denominator, when everything
/// fits in `i128`.
fn cross_scaled_i128(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Option<i128> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    const LIMIT: i128 = 1 << 60;
    let coords = [&a.x, &a.y, &b.x, &b.y, &c.x, &c.y];
    let mut l: i128 = 1;
    for r in coords {
        l = l.lcm(&r.denom().to_i128()?);
        if l > LIMIT {
            return None;
        }
    }
    let mut v = [0i128; 6];
    for (k, r) in coords.iter().enumerate() {
        v[k] = r.numer().to_i128()?.checked_mul(l / r.denom().to_i128()?)?;
        if v[k].abs() > LIMIT {
            return None;
        }
    }
    let (bx, by, cx, cy) = (v[2] - v[0], v[3] - v[1], v[4] - v[0], v[5] - v[1]);
    bx.checked_mul(cy)?.checked_sub(by.checked_mul(cx)?)
}

/// Shoelace formula, absolute value.
pub fn twice_area(poly: &[RationalPoint]) -> Result<Area2> {
    if poly.len() < 3 {
        return Err(Error::DegeneratePolygon);
    }
    let mut acc = Rational::zero();
    for (i, p) in poly.iter().enumerate() {
        let q = &poly[(i + 1) % poly.len()];
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    Ok(Area2(acc.abs()))
}

/// Shoelace formula over lattice vertices; unsigned.
pub fn twice_area_lattice(poly: &[LatticePoint]) -> i128 {
    if poly.len() < 3 {
        return 0;
    }
    let mut acc: i128 = 0;
    for (i, p) in poly.iter().enumerate() {
        let q = poly[(i + 1) % poly.len()];
        acc += p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128;
    }
    acc.abs()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Crossing {
    /// The open segments cross at exactly one point.
    Proper(RationalPoint),
    Disjoint,
    /// Collinear overlap, or contact only at an endpoint.
    Degenerate,
}

fn on_closed_segment(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> bool {
    cross(a, b, p) == 0 && p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

pub fn segment_intersection(s1: (LatticePoint, LatticePoint), s2: (LatticePoint, LatticePoint)) -> Crossing {
    let (a, b) = s1;
    let (c, d) = s2;
    let o1 = cross(a, b, c).signum();
    let o2 = cross(a, b, d).signum();
    let o3 = cross(c, d, a).signum();
    let o4 = cross(c, d, b).signum();
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        if o1 != o2 && o3 != o4 {
            // a + t (b - a), t = ((c - a) x (d - c)) / ((b - a) x (d - c))
            let dcx = (d.x - c.x) as i128;
            let dcy = (d.y - c.y) as i128;
            let num = (c.x - a.x) as i128 * dcy - (c.y - a.y) as i128 * dcx;
            let den = (b.x - a.x) as i128 * dcy - (b.y - a.y) as i128 * dcx;
            let t = Rational::new(BigInt::from(num), BigInt::from(den));
            let x = rat(a.x) + &t * rat(b.x - a.x);
            let y = rat(a.y) + &t * rat(b.y - a.y);
            return Crossing::Proper(RationalPoint::new(x, y));
        }
        return Crossing::Disjoint;
    }
    if on_closed_segment(a, b, c)
        || on_closed_segment(a, b, d)
        || on_closed_segment(c, d, a)
        || on_closed_segment(c, d, b)
    {
        Crossing::Degenerate
    } else {
        Crossing::Disjoint
    }
}

/// A strictly convex polygon, counterclockwise, starting at its
/// lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexPolygon {
    vertices: Vec<RationalPoint>,
}

impl ConvexPolygon {
    /// Validates strict convexity and orientation, then rotates to canonical form.
    pub fn new(mut vertices: Vec<RationalPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::DegeneratePolygon);
        }
        for i in 0..n {
            let o = orientation(&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if o != Orientation::CounterClockwise {
                return Err(Error::NotConvex);
            }
        }
        let start = (0..n).min_by(|&i, &j| vertices[i].cmp(&vertices[j])).unwrap();
        vertices.rotate_left(start);
        Ok(Self { vertices })
    }

    pub fn from_lattice(vertices: &[LatticePoint]) -> Result<Self> {
        Self::new(vertices.iter().map(|p| p.to_rational()).collect())
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn twice_area(&self) -> Area2 {
        twice_area(&self.vertices).expect("polygon has at least 3 vertices")
    }
}

/// Convex hull of a lattice set, including the degenerate shapes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hull {
    Empty,
    Point(LatticePoint),
    Segment(LatticePoint, LatticePoint),
    /// Strictly convex, counterclockwise, lexicographic minimum first.
    Polygon(Vec<LatticePoint>),
}

impl fmt::Display for Hull {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", vs.join(" "))
    }
}

impl Hull {
    pub fn vertices(&self) -> Vec<LatticePoint> {
        match self {
            Hull::Empty => vec![],
            Hull::Point(p) => vec![*p],
            Hull::Segment(a, b) => vec![*a, *b],
            Hull::Polygon(v) => v.clone(),
        }
    }

    pub fn twice_area(&self) -> i128 {
        match self {
            Hull::Polygon(v) => twice_area_lattice(v),
            _ => 0,
        }
    }

    pub fn to_polygon(&self) -> Option<ConvexPolygon> {
        match self {
            Hull::Polygon(v) => Some(ConvexPolygon {
                vertices: v.iter().map(|p| p.to_rational()).collect(),
            }),
            _ => None,
        }
    }

    /// Closed membership test.
    pub fn contains(&self, p: LatticePoint) -> bool {
        match self {
            Hull::Empty => false,
            Hull::Point(q) => *q == p,
            Hull::Segment(a, b) => on_closed_segment(*a, *b, p),
            Hull::Polygon(v) => {
                let n = v.len();
                (0..n).all(|i| cross(v[i], v[(i + 1) % n], p) >= 0)
            }
        }
    }

    /// Bounding box as `(min, max)` corners.
    pub fn bbox(&self) -> Option<(LatticePoint, LatticePoint)> {
        let vs = self.vertices();
        let first = *vs.first()?;
        let mut lo = first;
        let mut hi = first;
        for p in vs {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        Some((lo, hi))
    }
}

/// Andrew's monotone chain; collinear points are dropped.
pub fn convex_hull(pts: &[LatticePoint]) -> Hull {
    let mut p = pts.to_vec();
    p.sort_unstable();
    p.dedup();
    match p.len() {
        0 => return Hull::Empty,
        1 => return Hull::Point(p[0]),
        _ => {}
    }
    let mut lower: Vec<LatticePoint> = Vec::with_capacity(p.len());
    for &q in &p {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], q) <= 0 {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<LatticePoint> = Vec::with_capacity(p.len());
    for &q in p.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 0 {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() <= 2 {
        // all collinear: extremes are the first and last sorted points
        return Hull::Segment(p[0], p[p.len() - 1]);
    }
    Hull::Polygon(lower)
}

/// Twice the area of `P ∩ Q` (Sutherland–Hodgman, exact).
pub fn convex_clip_area(p: &ConvexPolygon, q: &ConvexPolygon) -> Area2 {
    let clipped = clip_convex(p.vertices(), q.vertices());
    if clipped.len() < 3 {
        return Area2::zero();
    }
    twice_area(&clipped).unwrap_or_else(|_| Area2::zero())
}

/// Clips `subject` against the counterclockwise convex `clip` polygon.
pub fn clip_convex(subject: &[RationalPoint], clip: &[RationalPoint]) -> Vec<RationalPoint> {
    let mut out: Vec<RationalPoint> = subject.to_vec();
    let m = clip.len();
    for i in 0..m {
        if out.is_empty() {
            break;
        }
        let a = &clip[i];
        let b = &clip[(i + 1) % m];
        let input = std::mem::take(&mut out);
        let k = input.len();
        for j in 0..k {
            let cur = &input[j];
            let prev = &input[(j + k - 1) % k];
            let sc = cross_rational(a, b, cur);
            let sp = cross_rational(a, b, prev);
            let cur_in = !sc.is_negative();
            let prev_in = !sp.is_negative();
            if cur_in {
                if !prev_in {
                    out.push(line_point(prev, cur, &sp, &sc));
                }
                out.push(cur.clone());
            } else if prev_in {
                out.push(line_point(prev, cur, &sp, &sc));
            }
        }
        out.dedup();
        if out.len() > 1 && out.first() == out.last() {
            out.pop();
        }
    }
    out
}

// Point on segment pq where the signed distance (sp at p, sq at q) vanishes.
fn line_point(p: &RationalPoint, q: &RationalPoint, sp: &Rational, sq: &Rational) -> RationalPoint {
    let t = sp / (sp - sq);
    RationalPoint::new(&p.x + &t * (&q.x - &p.x), &p.y + &t * (&q.y - &p.y))
}

/// Twice the area of the intersection of two hulls; zero unless both have area.
pub fn hull_intersection_area2(a: &Hull, b: &Hull) -> Area2 {
    match (a.to_polygon(), b.to_polygon()) {
        (Some(p), Some(q)) => convex_clip_area(&p, &q),
        _ => Area2::zero(),
    }
}

/// Twice the area of the union of two hulls.
pub fn hull_union_area2(a: &Hull, b: &Hull) -> Area2 {
    let inter = hull_intersection_area2(a, b);
    Area2(Rational::from_integer(BigInt::from(a.twice_area() + b.twice_area())) - inter.0)
}

/// A simple polygon, possibly with simple holes strictly inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonWithHoles {
    pub outer: Vec<RationalPoint>,
    pub holes: Vec<Vec<RationalPoint>>,
}

fn ring_edges(ring: &[RationalPoint]) -> impl Iterator<Item = (&RationalPoint, &RationalPoint)> {
    let n = ring.len();
    (0..n).map(move |i| (&ring[i], &ring[(i + 1) % n]))
}

fn on_segment_rational(a: &RationalPoint, b: &RationalPoint, p: &RationalPoint) -> bool {
    cross_rational(a, b, p).is_zero()
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

fn closed_segments_meet(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint, d: &RationalPoint) -> bool {
    let o1 = orientation(a, b, c).sign();
    let o2 = orientation(a, b, d).sign();
    let o3 = orientation(c, d, a).sign();
    let o4 = orientation(c, d, b).sign();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment_rational(a, b, c)
        || on_segment_rational(a, b, d)
        || on_segment_rational(c, d, a)
        || on_segment_rational(c, d, b)
}

fn ring_on_boundary(ring: &[RationalPoint], q: &RationalPoint) -> bool {
    ring_edges(ring).any(|(a, b)| on_segment_rational(a, b, q))
}

// Nonzero winding, boundary excluded.
fn ring_strictly_inside(ring: &[RationalPoint], q: &RationalPoint) -> bool {
    if ring_on_boundary(ring, q) {
        return false;
    }
    let mut winding = 0i32;
    for (a, b) in ring_edges(ring) {
        if a.y <= q.y {
            if b.y > q.y && orientation(a, b, q) == Orientation::CounterClockwise {
                winding += 1;
            }
        } else if b.y <= q.y && orientation(a, b, q) == Orientation::Clockwise {
            winding -= 1;
        }
    }
    winding != 0
}

fn ring_is_simple(ring: &[RationalPoint]) -> bool {
    let n = ring.len();
    if n < 3 {
        return false;
    }
    if twice_area(ring).map(|a| a.0.is_zero()).unwrap_or(true) {
        return false;
    }
    for i in 0..n {
        let (a, b) = (&ring[i], &ring[(i + 1) % n]);
        if a == b {
            return false;
        }
        for j in (i + 1)..n {
            let (c, d) = (&ring[j], &ring[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // shared vertex only: the far endpoint must not lie on the other edge
                let (shared_far_1, other_a, other_b) = if j == i + 1 { (a, c, d) } else { (b, c, d) };
                let far_2 = if j == i + 1 { d } else { c };
                if on_segment_rational(other_a, other_b, shared_far_1) || on_segment_rational(a, b, far_2) {
                    return false;
                }
            } else if closed_segments_meet(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

impl PolygonWithHoles {
    /// Builds and validates: simple rings, holes strictly inside, pairwise disjoint.
    pub fn new(outer: Vec<RationalPoint>, holes: Vec<Vec<RationalPoint>>) -> Result<Self> {
        if !ring_is_simple(&outer) {
            return Err(Error::InvalidPolygon("outer boundary is not simple".into()));
        }
        for (h, hole) in holes.iter().enumerate() {
            if !ring_is_simple(hole) {
                return Err(Error::InvalidPolygon(format!("hole {} is not simple", h + 1)));
            }
            let crosses_outer =
                ring_edges(hole).any(|(a, b)| ring_edges(&outer).any(|(c, d)| closed_segments_meet(a, b, c, d)));
            if crosses_outer || !hole.iter().all(|v| ring_strictly_inside(&outer, v)) {
                return Err(Error::InvalidPolygon(format!(
                    "hole {} is not strictly inside the outer boundary",
                    h + 1
                )));
            }
            for (g, other) in holes.iter().enumerate().take(h) {
                let meet =
                    ring_edges(hole).any(|(a, b)| ring_edges(other).any(|(c, d)| closed_segments_meet(a, b, c, d)));
                if meet || ring_strictly_inside(other, &hole[0]) || ring_strictly_inside(hole, &other[0]) {
                    return Err(Error::InvalidPolygon(format!("holes {} and {} overlap", g + 1, h + 1)));
                }
            }
        }
        Ok(Self { outer, holes })
    }

    pub fn from_lattice(outer: &[LatticePoint]) -> Result<Self> {
        Self::new(outer.iter().map(|p| p.to_rational()).collect(), vec![])
    }

    /// Closed region minus open holes.
    pub fn contains(&self, q: &RationalPoint) -> bool {
        let in_outer = ring_on_boundary(&self.outer, q) || ring_strictly_inside(&self.outer, q);
        in_outer && !self.holes.iter().any(|h| ring_strictly_inside(h, q))
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = (&RationalPoint, &RationalPoint)> {
        ring_edges(&self.outer).chain(self.holes.iter().flat_map(|h| ring_edges(h)))
    }

    /// Exact L∞ distance from `q` to the boundary (outer and hole rings).
    pub fn linf_boundary_distance(&self, q: &RationalPoint) -> Rational {
        self.boundary_edges()
            .map(|(a, b)| linf_to_segment(q, a, b))
            .min()
            .expect("polygon has edges")
    }

    /// `(inside, L∞ distance to the boundary)`.
    pub fn query(&self, q: &RationalPoint) -> (bool, Rational) {
        (self.contains(q), self.linf_boundary_distance(q))
    }

    pub fn twice_area(&self) -> Area2 {
        let outer = twice_area(&self.outer).expect("validated").0;
        let holes: Rational = self.holes.iter().map(|h| twice_area(h).expect("validated").0).sum();
        Area2(outer - holes)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &RationalPoint> {
        self.outer.iter().chain(self.holes.iter().flatten())
    }

    /// Squared diameter, realised by a pair of vertices.
    pub fn diameter_squared(&self) -> Rational {
        let vs: Vec<&RationalPoint> = self.outer.iter().collect();
        let mut best = Rational::zero();
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                let dx = &vs[i].x - &vs[j].x;
                let dy = &vs[i].y - &vs[j].y;
                let d = &dx * &dx + &dy * &dy;
                if d > best {
                    best = d;
                }
            }
        }
        best
    }
}

/// Free-function form of [`PolygonWithHoles::query`].
pub fn polygon_query(p: &PolygonWithHoles, q: &RationalPoint) -> (bool, Rational) {
    p.query(q)
}

/// min over t in [0,1] of max(|f(t)|, |g(t)|) with f, g the coordinate
/// offsets; the optimum sits at an endpoint or where |f| = |g|.
pub fn linf_to_segment(q: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> Rational {
    let fx = &q.x - &a.x;
    let fy = &q.y - &a.y;
    let ux = &b.x - &a.x;
    let uy = &b.y - &a.y;
    let eval = |t: &Rational| -> Rational {
        let dx = (&fx - t * &ux).abs();
        let dy = (&fy - t * &uy).abs();
        dx.max(dy)
    };
    let zero = Rational::zero();
    let one = Rational::from_integer(BigInt::from(1));
    let mut best = eval(&zero).min(eval(&one));
    for (num, den) in [(&fx - &fy, &ux - &uy), (&fx + &fy, &ux + &uy)] {
        if !den.is_zero() {
            let t = num / den;
            if t > zero && t < one {
                best = best.min(eval(&t));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn rp(x: i64, y: i64) -> RationalPoint {
        lp(x, y).to_rational()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&rp(0, 0), &rp(1, 0), &rp(0, 1)).sign(), 1);
        assert_eq!(orientation(&rp(0, 0), &rp(2, 2), &rp(3, 3)).sign(), 0);
        assert_eq!(orientation(&rp(0, 0), &rp(0, 1), &rp(1, 0)).sign(), -1);
    }

    #[test]
    fn twice_area_examples() {
        let sq = [rp(0, 0), rp(1, 0), rp(1, 1), rp(0, 1)];
        assert_eq!(twice_area(&sq).unwrap(), Area2::from_int(2));
        assert_eq!(twice_area(&[rp(0, 0), rp(3, 0), rp(0, 3)]).unwrap(), Area2::from_int(9));
        assert_eq!(twice_area(&[rp(0, 0), rp(1, 1), rp(2, 2)]).unwrap(), Area2::zero());
        assert!(matches!(
            twice_area(&[rp(0, 0), rp(1, 1)]),
            Err(Error::DegeneratePolygon)
        ));
    }

    #[test]
    fn segment_intersection_examples() {
        assert_eq!(
            segment_intersection((lp(0, 0), lp(2, 2)), (lp(0, 2), lp(2, 0))),
            Crossing::Proper(rp(1, 1))
        );
        assert_eq!(
            segment_intersection((lp(0, 0), lp(3, 1)), (lp(1, 1), lp(1, -1))),
            Crossing::Proper(RationalPoint::new(rat(1), rat_frac(1, 3)))
        );
        assert_eq!(
            segment_intersection((lp(0, 0), lp(1, 0)), (lp(2, 0), lp(3, 0))),
            Crossing::Disjoint
        );
        assert_eq!(
            segment_intersection((lp(0, 0), lp(2, 0)), (lp(1, 0), lp(3, 0))),
            Crossing::Degenerate
        );
        assert_eq!(
            segment_intersection((lp(0, 0), lp(2, 0)), (lp(2, 0), lp(3, 5))),
            Crossing::Degenerate
        );
    }

    #[test]
    fn hull_examples() {
        let h = convex_hull(&[lp(0, 0), lp(2, 0), lp(2, 2), lp(0, 2), lp(1, 1)]);
        assert_eq!(h, Hull::Polygon(vec![lp(0, 0), lp(2, 0), lp(2, 2), lp(0, 2)]));
        assert_eq!(
            convex_hull(&[lp(0, 0), lp(1, 1), lp(2, 2)]),
            Hull::Segment(lp(0, 0), lp(2, 2))
        );
        assert_eq!(convex_hull(&[lp(5, 5)]), Hull::Point(lp(5, 5)));
        assert_eq!(convex_hull(&[]), Hull::Empty);
        assert_eq!(convex_hull(&[lp(1, 0), lp(0, 0), lp(2, 0), lp(1, 0)]).twice_area(), 0);
    }

    #[test]
    fn clip_examples() {
        let sq = |x0: i64, y0: i64, s: i64| {
            ConvexPolygon::from_lattice(&[lp(x0, y0), lp(x0 + s, y0), lp(x0 + s, y0 + s), lp(x0, y0 + s)]).unwrap()
        };
        assert_eq!(convex_clip_area(&sq(0, 0, 2), &sq(1, 1, 2)), Area2::from_int(2));
        assert_eq!(convex_clip_area(&sq(0, 0, 2), &sq(0, 0, 2)), Area2::from_int(8));
        assert_eq!(convex_clip_area(&sq(0, 0, 1), &sq(5, 5, 1)), Area2::zero());
        // touching along an edge has zero area
        assert_eq!(convex_clip_area(&sq(0, 0, 1), &sq(1, 0, 1)), Area2::zero());
    }

    #[test]
    fn convex_polygon_rejects_clockwise_and_collinear() {
        assert!(ConvexPolygon::from_lattice(&[lp(0, 0), lp(0, 1), lp(1, 0)]).is_err());
        assert!(ConvexPolygon::from_lattice(&[lp(0, 0), lp(1, 0), lp(2, 0), lp(1, 1)]).is_err());
        let p = ConvexPolygon::from_lattice(&[lp(1, 1), lp(0, 1), lp(0, 0), lp(1, 0)]).unwrap();
        assert_eq!(p.vertices()[0], rp(0, 0));
    }

    #[test]
    fn polygon_query_examples() {
        let sq = PolygonWithHoles::from_lattice(&[lp(0, 0), lp(10, 0), lp(10, 10), lp(0, 10)]).unwrap();
        assert_eq!(sq.query(&rp(5, 5)), (true, rat(5)));
        assert_eq!(sq.query(&rp(2, 5)), (true, rat(2)));
        assert_eq!(sq.query(&rp(-1, 5)), (false, rat(1)));
        assert_eq!(sq.query(&rp(10, 3)), (true, rat(0)));
    }

    #[test]
    fn linf_distance_to_diagonal_edge() {
        // edge from (0,0) to (4,4); point (4,0): closest in L∞ is (2,2) at distance 2
        let d = linf_to_segment(&rp(4, 0), &rp(0, 0), &rp(4, 4));
        assert_eq!(d, rat(2));
    }

    #[test]
    fn polygon_with_hole() {
        let outer = [lp(0, 0), lp(10, 0), lp(10, 10), lp(0, 10)]
            .map(|p| p.to_rational())
            .to_vec();
        let hole = [lp(4, 4), lp(6, 4), lp(6, 6), lp(4, 6)]
            .map(|p| p.to_rational())
            .to_vec();
        let p = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        assert!(!p.query(&rp(5, 5)).0);
        assert_eq!(p.query(&rp(4, 5)), (true, rat(0)));
        assert_eq!(p.query(&rp(2, 5)), (true, rat(2)));
        assert_eq!(p.twice_area(), Area2::from_int(192));
    }

    #[test]
    fn bow_tie_is_rejected() {
        let r = PolygonWithHoles::from_lattice(&[lp(0, 0), lp(2, 2), lp(2, 0), lp(0, 2)]);
        assert!(matches!(r, Err(Error::InvalidPolygon(_))));
    }

    #[test]
    fn hole_outside_is_rejected() {
        let outer = [lp(0, 0), lp(4, 0), lp(4, 4), lp(0, 4)]
            .map(|p| p.to_rational())
            .to_vec();
        let hole = [lp(5, 5), lp(6, 5), lp(6, 6)].map(|p| p.to_rational()).to_vec();
        assert!(PolygonWithHoles::new(outer, vec![hole]).is_err());
    }
}
