//! Triangle validity and enumeration of valid triangles.
//!
//! In digital mode a closed triangle is valid when every lattice point in it
//! belongs to `S`: its range count over `S` must equal its Pick count. In
//! island mode it is valid when it avoids an explicit forbidden set.

use crate::error::{Error, Result};
use crate::geom::{cross, LatticePoint};
use crate::lattice::{count_apex_triangle, pick_count, ApexTriangle, Triangle};
use crate::range::{query_apex, PointSet, RangeCounter};
use crate::solution::{Objective, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Digital,
    Island,
}

#[derive(Debug, Clone)]
pub struct ValidityContext {
    set: PointSet,
    forbidden: Option<PointSet>,
    /// Counts points of `set`. Island mode indexes the union of both sets.
    counter: RangeCounter,
    /// Island mode only: counts forbidden points over the same union.
    forbid_counter: Option<RangeCounter>,
    /// `set` index -> counter index.
    slot: Vec<usize>,
    /// Digital mode: gcd of coordinate differences per pair, row-major.
    steps: Vec<u32>,
}

impl ValidityContext {
    pub fn digital(set: PointSet) -> Self {
        let n = set.len();
        let pts = set.points();
        let mut steps = vec![0u32; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let g = crate::lattice::lattice_on_segment(pts[i], pts[j]) - 1;
                let g = u32::try_from(g).unwrap_or(u32::MAX);
                steps[i * n + j] = g;
                steps[j * n + i] = g;
            }
        }
        let counter = RangeCounter::build(&set);
        Self {
            slot: (0..n).collect(),
            set,
            forbidden: None,
            counter,
            forbid_counter: None,
            steps,
        }
    }

    pub fn island(positive: PointSet, forbidden: PointSet) -> Self {
        let mut union: Vec<LatticePoint> = positive.points().to_vec();
        union.extend(forbidden.iter().filter(|p| !positive.contains(*p)));
        let pos_w: Vec<u32> = union.iter().map(|p| u32::from(positive.contains(*p))).collect();
        let neg_w: Vec<u32> = union.iter().map(|p| u32::from(forbidden.contains(*p))).collect();
        let counter = RangeCounter::build_weighted(&union, &pos_w);
        let forbid_counter = Some(RangeCounter::build_weighted(&union, &neg_w));
        Self {
            slot: (0..positive.len()).collect(),
            set: positive,
            forbidden: Some(forbidden),
            counter,
            forbid_counter,
            steps: vec![],
        }
    }

    /// Same mode and forbidden set, restricted to a subset of the points.
    pub fn restricted(&self, subset: PointSet) -> Self {
        match &self.forbidden {
            None => Self::digital(subset),
            Some(f) => Self::island(subset, f.clone()),
        }
    }

    pub fn mode(&self) -> Mode {
        if self.forbidden.is_some() {
            Mode::Island
        } else {
            Mode::Digital
        }
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    pub fn forbidden(&self) -> Option<&PointSet> {
        self.forbidden.as_ref()
    }

    pub fn point(&self, i: usize) -> LatticePoint {
        self.set.points()[i]
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    fn steps(&self, i: usize, j: usize) -> u64 {
        self.steps[i * self.set.len() + j] as u64
    }

    /// `|closed triangle ∩ S|` for a non-degenerate triangle of set indices.
    pub fn triangle_count(&self, i: usize, j: usize, k: usize) -> u64 {
        self.counter
            .query_indices(self.slot[i], self.slot[j], self.slot[k])
            .expect("non-degenerate triangle")
    }

    /// `|closed segment ∩ S|` for set indices.
    pub fn segment_count(&self, i: usize, j: usize) -> u64 {
        self.counter.query_segment_indices(self.slot[i], self.slot[j])
    }

    /// Validity of a non-degenerate triangle given by set indices.
    pub fn triangle_valid(&self, i: usize, j: usize, k: usize) -> bool {
        match &self.forbid_counter {
            None => {
                let (a, b, c) = (self.point(i), self.point(j), self.point(k));
                let twice = cross(a, b, c).abs();
                let boundary = self.steps(i, j) + self.steps(j, k) + self.steps(k, i);
                self.triangle_count(i, j, k) == pick_count(twice, boundary)
            }
            Some(fc) => {
                fc.query_indices(self.slot[i], self.slot[j], self.slot[k])
                    .expect("non-degenerate")
                    == 0
            }
        }
    }

    /// Validity of the closed segment between two set points.
    pub fn segment_valid(&self, i: usize, j: usize) -> bool {
        match &self.forbid_counter {
            None => self.segment_count(i, j) == self.steps(i, j) + 1,
            Some(fc) => fc.query_segment_indices(self.slot[i], self.slot[j]) == 0,
        }
    }

    fn index(&self, p: LatticePoint) -> Result<usize> {
        self.set.index_of(p).ok_or_else(|| Error::UnknownPoint(p.to_string()))
    }

    /// Validity of a lattice triangle with vertices in `S`; collinear
    /// triangles are judged as their covering segment.
    pub fn is_valid_lattice(&self, t: &Triangle) -> Result<bool> {
        let (i, j, k) = (self.index(t.a)?, self.index(t.b)?, self.index(t.c)?);
        if !t.is_degenerate() {
            return Ok(self.triangle_valid(i, j, k));
        }
        let pairs = [(i, j), (j, k), (k, i)];
        let (a, b) = pairs
            .into_iter()
            .max_by_key(|&(a, b)| {
                let (p, q) = (self.point(a), self.point(b));
                (p.x - q.x).abs().max((p.y - q.y).abs())
            })
            .unwrap();
        Ok(self.segment_valid(a, b))
    }

    /// Validity of a triangle with a rational apex.
    pub fn is_valid_apex(&self, t: &ApexTriangle) -> bool {
        match &self.forbidden {
            None => query_apex(&self.set, t) == count_apex_triangle(t),
            Some(f) => query_apex(f, t) == 0,
        }
    }

    /// All non-degenerate valid triangles, counterclockwise, each triple once.
    pub fn enumerate_valid(&self) -> Vec<Triangle> {
        let n = self.set.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let (a, b, c) = (self.point(i), self.point(j), self.point(k));
                    if cross(a, b, c) != 0 && self.triangle_valid(i, j, k) {
                        out.push(Triangle::new(a, b, c));
                    }
                }
            }
        }
        out
    }

    /// Best zero-area solution: a single point or a valid segment.
    pub fn best_collinear(&self, objective: Objective) -> Solution {
        let n = self.set.len();
        let mut best: Option<Solution> = None;
        let consider = |best: &mut Option<Solution>, cand: Solution| {
            *best = Some(match best.take() {
                None => cand,
                Some(b) => b.better_of(cand, objective),
            });
        };
        for i in 0..n {
            consider(&mut best, Solution::from_points(vec![self.point(i)]));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !self.segment_valid(i, j) {
                    continue;
                }
                let (a, b) = (self.point(i), self.point(j));
                let count = self.segment_count(i, j) as usize;
                // cheap pre-check before materialising the points
                if let Some(cur) = &best {
                    if count < cur.count {
                        continue;
                    }
                }
                let pts: Vec<LatticePoint> = self
                    .set
                    .iter()
                    .filter(|&s| {
                        cross(a, b, s) == 0
                            && s.x >= a.x.min(b.x)
                            && s.x <= a.x.max(b.x)
                            && s.y >= a.y.min(b.y)
                            && s.y <= a.y.max(b.y)
                    })
                    .collect();
                consider(&mut best, Solution::from_points(pts));
            }
        }
        best.unwrap_or_else(Solution::empty)
    }

    /// `K = S ∩ hull` for a hull spanned by set points.
    pub fn materialize(&self, hull_vertices: &[LatticePoint]) -> Solution {
        let hull = crate::geom::convex_hull(hull_vertices);
        let pts: Vec<LatticePoint> = match hull.bbox() {
            None => vec![],
            Some((lo, hi)) => self
                .set
                .iter()
                .filter(|&s| s.x >= lo.x && s.x <= hi.x && s.y >= lo.y && s.y <= hi.y && hull.contains(s))
                .collect(),
        };
        Solution::from_points(pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, rat_frac, RationalPoint};

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn grid_minus(w: i64, h: i64, missing: &[LatticePoint]) -> PointSet {
        PointSet::new(
            (0..w)
                .flat_map(|x| (0..h).map(move |y| p(x, y)))
                .filter(|q| !missing.contains(q))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn lattice_validity_examples() {
        let ctx = ValidityContext::digital(grid_minus(3, 3, &[p(1, 1)]));
        assert!(ctx.is_valid_lattice(&Triangle::new(p(0, 0), p(2, 0), p(2, 1))).unwrap());
        assert!(!ctx.is_valid_lattice(&Triangle::new(p(0, 0), p(2, 0), p(2, 2))).unwrap());
        let island = ValidityContext::island(grid_minus(3, 3, &[]), PointSet::new(vec![p(1, 1)]).unwrap());
        assert!(!island
            .is_valid_lattice(&Triangle::new(p(0, 0), p(2, 0), p(0, 2)))
            .unwrap());
        assert!(island
            .is_valid_lattice(&Triangle::new(p(0, 0), p(2, 0), p(2, 1)))
            .unwrap());
    }

    #[test]
    fn unknown_vertex_is_an_error() {
        let ctx = ValidityContext::digital(grid_minus(2, 2, &[]));
        assert!(ctx.is_valid_lattice(&Triangle::new(p(0, 0), p(1, 0), p(5, 5))).is_err());
    }

    #[test]
    fn apex_validity_examples() {
        let half = RationalPoint::new(rat_frac(1, 2), rat_frac(1, 2));
        let sq = ValidityContext::digital(grid_minus(2, 2, &[]));
        assert!(sq.is_valid_apex(&ApexTriangle::new(half.clone(), p(0, 0), p(1, 0))));
        let sq_minus = ValidityContext::digital(grid_minus(2, 2, &[p(1, 0)]));
        assert!(sq_minus.is_valid_apex(&ApexTriangle::new(half.clone(), p(0, 0), p(1, 1))));
        let g = ValidityContext::digital(grid_minus(3, 3, &[p(1, 1)]));
        assert!(g.is_valid_apex(&ApexTriangle::new(half.clone(), p(0, 0), p(2, 0))));
        assert!(!g.is_valid_apex(&ApexTriangle::new(half, p(0, 2), p(2, 0))));
        let island = ValidityContext::island(grid_minus(3, 3, &[]), PointSet::new(vec![p(1, 1)]).unwrap());
        assert!(!island.is_valid_apex(&ApexTriangle::new(
            RationalPoint::new(rat(1), rat_frac(1, 3)),
            p(0, 2),
            p(2, 2)
        )));
    }

    #[test]
    fn enumerate_examples() {
        let sq = ValidityContext::digital(grid_minus(2, 2, &[]));
        assert_eq!(sq.enumerate_valid().len(), 4);
        let s = PointSet::new(vec![p(0, 0), p(1, 0), p(0, 1), p(2, 2)]).unwrap();
        let v = ValidityContext::digital(s).enumerate_valid();
        assert_eq!(v, vec![Triangle::new(p(0, 0), p(1, 0), p(0, 1))]);
        let line = PointSet::new((0..5).map(|x| p(x, 0)).collect()).unwrap();
        assert!(ValidityContext::digital(line).enumerate_valid().is_empty());
    }

    #[test]
    fn collinear_fallbacks() {
        let s = PointSet::new(vec![p(0, 0), p(1, 0), p(2, 0), p(5, 5)]).unwrap();
        let b = ValidityContext::digital(s).best_collinear(Objective::Count);
        assert_eq!(b.points, vec![p(0, 0), p(1, 0), p(2, 0)]);
        let s = PointSet::new(vec![p(0, 0), p(2, 0)]).unwrap();
        let b = ValidityContext::digital(s).best_collinear(Objective::Area);
        assert_eq!(b.count, 1);
        assert_eq!(b.points, vec![p(0, 0)]);
        let s = PointSet::new(vec![p(3, 3)]).unwrap();
        assert_eq!(
            ValidityContext::digital(s).best_collinear(Objective::Area).points,
            vec![p(3, 3)]
        );
        let empty = PointSet::new(vec![]).unwrap();
        assert_eq!(
            ValidityContext::digital(empty).best_collinear(Objective::Area),
            Solution::empty()
        );
    }
}
