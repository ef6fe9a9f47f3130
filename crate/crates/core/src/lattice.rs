//! Counting lattice points on segments, triangles and convex hulls.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::geom::{cross, twice_area_lattice, Hull, LatticePoint, RationalPoint};

/// A lattice triangle, stored counterclockwise unless degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub a: LatticePoint,
    pub b: LatticePoint,
    pub c: LatticePoint,
}

impl Triangle {
    /// Counterclockwise, starting from the lexicographically smallest vertex.
    pub fn new(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Self {
        let mut v = if cross(a, b, c) < 0 { [a, c, b] } else { [a, b, c] };
        let start = (0..3).min_by_key(|&i| v[i]).unwrap();
        v.rotate_left(start);
        Self {
            a: v[0],
            b: v[1],
            c: v[2],
        }
    }

    pub fn is_degenerate(&self) -> bool {
        cross(self.a, self.b, self.c) == 0
    }

    pub fn twice_area(&self) -> i128 {
        cross(self.a, self.b, self.c).abs()
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        [self.a, self.b, self.c]
    }
}

/// A triangle with one rational apex and two lattice vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexTriangle {
    pub apex: RationalPoint,
    pub p: LatticePoint,
    pub q: LatticePoint,
}

impl ApexTriangle {
    pub fn new(apex: RationalPoint, p: LatticePoint, q: LatticePoint) -> Self {
        let t = Self { apex, p, q };
        if t.orientation_sign() < 0 {
            Self {
                apex: t.apex,
                p: t.q,
                q: t.p,
            }
        } else {
            t
        }
    }

    fn orientation_sign(&self) -> i32 {
        crate::geom::orientation(&self.apex, &self.p.to_rational(), &self.q.to_rational()).sign()
    }

    pub fn is_degenerate(&self) -> bool {
        self.orientation_sign() == 0
    }

    /// Closed membership of a lattice point.
    pub fn contains(&self, s: LatticePoint) -> bool {
        let a = &self.apex;
        let p = self.p.to_rational();
        let q = self.q.to_rational();
        let s = s.to_rational();
        let o = [
            crate::geom::orientation(a, &p, &s).sign(),
            crate::geom::orientation(&p, &q, &s).sign(),
            crate::geom::orientation(&q, a, &s).sign(),
        ];
        if self.is_degenerate() {
            // s must be collinear and inside the bounding box of the three points
            if o.iter().any(|&x| x != 0) {
                return false;
            }
            let xs = [&a.x, &p.x, &q.x];
            let ys = [&a.y, &p.y, &q.y];
            let within = |v: &num_rational::BigRational, c: [&num_rational::BigRational; 3]| {
                c.iter().any(|w| *w <= v) && c.iter().any(|w| *w >= v)
            };
            return within(&s.x, xs) && within(&s.y, ys);
        }
        o.iter().all(|&x| x >= 0)
    }
}

fn gcd_steps(a: LatticePoint, b: LatticePoint) -> u64 {
    ((b.x - a.x).unsigned_abs()).gcd(&(b.y - a.y).unsigned_abs())
}

/// Lattice points on the closed segment `ab`.
pub fn lattice_on_segment(a: LatticePoint, b: LatticePoint) -> u64 {
    gcd_steps(a, b) + 1
}

/// Pick's formula with the degenerate case counted as a segment.
pub fn count_lattice_triangle(t: &Triangle) -> u64 {
    let [a, b, c] = t.vertices();
    let twice = t.twice_area();
    let (gab, gbc, gca) = (gcd_steps(a, b), gcd_steps(b, c), gcd_steps(c, a));
    if twice == 0 {
        return gab.max(gbc).max(gca) + 1;
    }
    pick_count(twice, gab + gbc + gca)
}

/// Lattice points of a closed lattice polygon from twice its area and its
/// boundary point count.
pub fn pick_count(twice_area: i128, boundary: u64) -> u64 {
    ((twice_area + boundary as i128 + 2) / 2) as u64
}

/// Closed lattice point count of a (possibly degenerate) hull.
pub fn count_hull(h: &Hull) -> u64 {
    match h {
        Hull::Empty => 0,
        Hull::Point(_) => 1,
        Hull::Segment(a, b) => lattice_on_segment(*a, *b),
        Hull::Polygon(v) => {
            let n = v.len();
            let boundary: u64 = (0..n).map(|i| gcd_steps(v[i], v[(i + 1) % n])).sum();
            pick_count(twice_area_lattice(v), boundary)
        }
    }
}

/// Counts lattice points of the closed triangle with one rational apex by a
/// row scan: each integer row meets the triangle in a closed interval.
pub fn count_apex_triangle(t: &ApexTriangle) -> u64 {
    if let Some(apex) = t.apex.to_lattice() {
        return count_lattice_triangle(&Triangle::new(apex, t.p, t.q));
    }
    // scale everything by the common denominator so edges have integer data
    let den = t.apex.x.denom().lcm(t.apex.y.denom());
    let scale = |v: &num_rational::BigRational| -> BigInt { v.numer() * (&den / v.denom()) };
    let ax = scale(&t.apex.x);
    let ay = scale(&t.apex.y);
    let verts = [
        (ax, ay),
        (BigInt::from(t.p.x) * &den, BigInt::from(t.p.y) * &den),
        (BigInt::from(t.q.x) * &den, BigInt::from(t.q.y) * &den),
    ];
    let ymin = verts.iter().map(|v| &v.1).min().unwrap().div_ceil(&den);
    let ymax = verts.iter().map(|v| &v.1).max().unwrap().div_floor(&den);
    let mut total: u64 = 0;
    let mut y = ymin;
    while y <= ymax {
        let row = &y * &den;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        let mut push = |num: BigInt, d: BigInt| {
            // x = num / d with d > 0
            let c = num.div_ceil(&d);
            let f = num.div_floor(&d);
            if lo.as_ref().is_none_or(|l| c < *l) {
                lo = Some(c);
            }
            if hi.as_ref().is_none_or(|h| f > *h) {
                hi = Some(f);
            }
        };
        for i in 0..3 {
            let (px, py) = &verts[i];
            let (qx, qy) = &verts[(i + 1) % 3];
            if py == qy {
                if *py == row {
                    push(px.clone(), den.clone());
                    push(qx.clone(), den.clone());
                }
                continue;
            }
            let (low, high) = if py < qy { (py, qy) } else { (qy, py) };
            if row < *low || row > *high {
                continue;
            }
            // x*den = px + (row - py) (qx - px) / (qy - py)
            let dy = qy - py;
            let mut num = px * &dy + (&row - py) * (qx - px);
            let mut d = &den * &dy;
            if d.is_negative() {
                num = -num;
                d = -d;
            }
            push(num, d);
        }
        if let (Some(l), Some(h)) = (lo, hi) {
            if h >= l {
                total += (h - l + BigInt::one()).to_u64().expect("row count fits u64");
            }
        }
        y += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, rat_frac, LatticePoint as P, RationalPoint};

    fn p(x: i64, y: i64) -> P {
        P::new(x, y)
    }

    #[test]
    fn segment_counts() {
        assert_eq!(lattice_on_segment(p(0, 0), p(4, 6)), 3);
        assert_eq!(lattice_on_segment(p(0, 0), p(5, 3)), 2);
        assert_eq!(lattice_on_segment(p(2, 2), p(2, 2)), 1);
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(count_lattice_triangle(&Triangle::new(p(0, 0), p(1, 0), p(0, 1))), 3);
        assert_eq!(count_lattice_triangle(&Triangle::new(p(0, 0), p(3, 0), p(0, 3))), 10);
        assert_eq!(count_lattice_triangle(&Triangle::new(p(0, 0), p(2, 0), p(1, 1))), 4);
        // degenerate: covering segment (0,0)-(4,0)
        assert_eq!(count_lattice_triangle(&Triangle::new(p(0, 0), p(4, 0), p(2, 0))), 5);
    }

    #[test]
    fn apex_counts() {
        let t = ApexTriangle::new(RationalPoint::new(rat(2), rat_frac(3, 2)), p(0, 0), p(4, 0));
        assert_eq!(count_apex_triangle(&t), 6);
        let t = ApexTriangle::new(RationalPoint::new(rat(1), rat(1)), p(0, 0), p(2, 0));
        assert_eq!(count_apex_triangle(&t), 4);
        assert_eq!(
            count_apex_triangle(&t),
            count_lattice_triangle(&Triangle::new(p(1, 1), p(0, 0), p(2, 0)))
        );
        let t = ApexTriangle::new(RationalPoint::new(rat_frac(1, 2), rat_frac(1, 2)), p(0, 0), p(1, 0));
        assert_eq!(count_apex_triangle(&t), 2);
    }

    #[test]
    fn degenerate_apex_counts_segment() {
        // apex (1/2, 1/2) between (0,0) and (1,1)
        let t = ApexTriangle::new(RationalPoint::new(rat_frac(1, 2), rat_frac(1, 2)), p(0, 0), p(1, 1));
        assert!(t.is_degenerate());
        assert_eq!(count_apex_triangle(&t), 2);
        assert!(t.contains(p(0, 0)) && t.contains(p(1, 1)) && !t.contains(p(1, 0)));
    }

    #[test]
    fn hull_counts() {
        let sq = crate::geom::convex_hull(&[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]);
        assert_eq!(count_hull(&sq), 9);
        assert_eq!(count_hull(&Hull::Segment(p(0, 0), p(4, 6))), 3);
        let r = crate::geom::convex_hull(&[p(0, 0), p(3, 0), p(3, 1), p(0, 1)]);
        assert_eq!(count_hull(&r), 8);
        assert_eq!(count_hull(&Hull::Empty), 0);
    }
}
