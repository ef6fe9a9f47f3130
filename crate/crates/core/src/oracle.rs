//! Brute-force references for cross-checking the solvers.
//!
//! Nothing here goes through the counting, range or DP code: membership is
//! decided by orientation tests and lattice points are enumerated directly.

use crate::error::{Error, Result};
use crate::geom::{
    convex_hull, hull_intersection_area2, orientation, Area2, Hull, LatticePoint, Rational, RationalPoint,
};
use crate::lattice::{ApexTriangle, Triangle};
use crate::range::PointSet;
use crate::solution::{Objective, PairKind, PairSolution, Solution};

pub const PEEL_LIMIT: usize = 16;
pub const PEEL2_LIMIT: usize = 12;
pub const COUNT_CELL_LIMIT: u128 = 1_000_000;

fn closed_triangle_contains(v: [&RationalPoint; 3], s: &RationalPoint) -> bool {
    let o = [
        orientation(v[0], v[1], s).sign(),
        orientation(v[1], v[2], s).sign(),
        orientation(v[2], v[0], s).sign(),
    ];
    if orientation(v[0], v[1], v[2]).sign() == 0 {
        if o.iter().any(|&x| x != 0) {
            return false;
        }
        let inside = |get: fn(&RationalPoint) -> &Rational| {
            v.iter().any(|p| get(p) <= get(s)) && v.iter().any(|p| get(p) >= get(s))
        };
        return inside(|p| &p.x) && inside(|p| &p.y);
    }
    o.iter().all(|&x| x >= 0) || o.iter().all(|&x| x <= 0)
}

fn enumerate_count(v: [RationalPoint; 3]) -> Result<u64> {
    let floor = |r: &Rational| r.floor().to_integer();
    let ceil = |r: &Rational| r.ceil().to_integer();
    let xs = v.iter().map(|p| &p.x);
    let ys = v.iter().map(|p| &p.y);
    let x0 = ceil(xs.clone().min().unwrap());
    let x1 = floor(xs.max().unwrap());
    let y0 = ceil(ys.clone().min().unwrap());
    let y1 = floor(ys.max().unwrap());
    let to_i64 = |b: num_bigint::BigInt| {
        i64::try_from(b).map_err(|_| Error::SizeGuard {
            size: usize::MAX,
            limit: 0,
        })
    };
    let (x0, x1, y0, y1) = (to_i64(x0)?, to_i64(x1)?, to_i64(y0)?, to_i64(y1)?);
    let cells = (x1 - x0 + 1).max(0) as u128 * (y1 - y0 + 1).max(0) as u128;
    if cells > COUNT_CELL_LIMIT {
        return Err(Error::SizeGuard {
            size: cells.min(usize::MAX as u128) as usize,
            limit: COUNT_CELL_LIMIT as usize,
        });
    }
    let refs = [&v[0], &v[1], &v[2]];
    let mut n = 0;
    for x in x0..=x1 {
        for y in y0..=y1 {
            if closed_triangle_contains(refs, &LatticePoint::new(x, y).to_rational()) {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Bounding-box enumeration for a lattice triangle.
pub fn oracle_count(t: &Triangle) -> Result<u64> {
    enumerate_count(t.vertices().map(|p| p.to_rational()))
}

/// Bounding-box enumeration for a triangle with a rational apex.
pub fn oracle_count_apex(t: &ApexTriangle) -> Result<u64> {
    enumerate_count([t.apex.clone(), t.p.to_rational(), t.q.to_rational()])
}

/// Digital convexity by enumerating every lattice point of the hull's box.
pub fn brute_digital_convex(points: &[LatticePoint]) -> bool {
    let hull = convex_hull(points);
    let Some((lo, hi)) = hull.bbox() else { return true };
    let mut inside = 0usize;
    for x in lo.x..=hi.x {
        for y in lo.y..=hi.y {
            let q = LatticePoint::new(x, y);
            if hull.contains(q) {
                if !points.contains(&q) {
                    return false;
                }
                inside += 1;
            }
        }
    }
    let mut k = points.to_vec();
    k.sort_unstable();
    k.dedup();
    inside == k.len()
}

/// Every nonempty digital convex subset of `S`.
pub fn digital_convex_family(set: &PointSet, limit: usize) -> Result<Vec<Solution>> {
    let n = set.len();
    if n > limit {
        return Err(Error::SizeGuard { size: n, limit });
    }
    let pts = set.points();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let subset: Vec<LatticePoint> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]).collect();
        if brute_digital_convex(&subset) {
            out.push(Solution::from_points(subset));
        }
    }
    Ok(out)
}

/// Exhaustive maximum over all subsets, with the standard tie-break.
pub fn oracle_peel(set: &PointSet, objective: Objective) -> Result<Solution> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    let family = digital_convex_family(set, PEEL_LIMIT)?;
    Ok(family
        .into_iter()
        .reduce(|a, b| a.better_of(b, objective))
        .expect("singletons are digital convex"))
}

/// Exhaustive optimal island: subsets of `S` whose hull avoids every
/// forbidden point.
pub fn oracle_island(set: &PointSet, forbidden: &PointSet, objective: Objective) -> Result<Solution> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = set.len();
    if n > PEEL_LIMIT {
        return Err(Error::SizeGuard {
            size: n,
            limit: PEEL_LIMIT,
        });
    }
    let pts = set.points();
    let mut best: Option<Solution> = None;
    for mask in 1u32..(1u32 << n) {
        let subset: Vec<LatticePoint> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| pts[i]).collect();
        let hull = convex_hull(&subset);
        if forbidden.iter().any(|f| hull.contains(f)) {
            continue;
        }
        let cand = Solution::from_points(subset);
        best = Some(match best {
            None => cand,
            Some(b) => b.better_of(cand, objective),
        });
    }
    Ok(best.expect("singletons avoid forbidden points"))
}

/// Exhaustive maximum union area over pairs of digital convex subsets.
pub fn oracle_peel2(set: &PointSet) -> Result<PairSolution> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut family = digital_convex_family(set, PEEL2_LIMIT)?;
    // hulls only matter for the area; keep one subset per distinct hull
    family.sort_by(|a, b| {
        b.twice_area_i128()
            .cmp(&a.twice_area_i128())
            .then(b.count.cmp(&a.count))
            .then(a.points.cmp(&b.points))
    });
    let mut seen = std::collections::HashSet::new();
    family.retain(|s| seen.insert(s.hull.clone()));

    let mut best: Option<PairSolution> = None;
    for i in 0..family.len() {
        for j in i..family.len() {
            let (a, b) = (&family[i], &family[j]);
            let bound = Area2::from_int(a.twice_area_i128() + b.twice_area_i128());
            if let Some(cur) = &best {
                if bound < cur.union_area2 {
                    continue;
                }
            }
            let inter = hull_intersection_area2(&a.hull, &b.hull);
            let kind = if i == j {
                PairKind::Single
            } else if inter.0 == Rational::from_integer(0.into()) && !hulls_overlap(&a.hull, &b.hull) {
                PairKind::Disjoint
            } else {
                PairKind::Intersecting
            };
            let cand = if i == j {
                PairSolution::single(a.clone())
            } else {
                PairSolution::new(a.clone(), b.clone(), kind)
            };
            best = Some(match best {
                None => cand,
                Some(cur) => cur.better_of(cand),
            });
        }
    }
    Ok(best.expect("family is nonempty"))
}

fn hulls_overlap(a: &Hull, b: &Hull) -> bool {
    a.vertices().iter().any(|&p| b.contains(p)) || b.vertices().iter().any(|&p| a.contains(p))
}
