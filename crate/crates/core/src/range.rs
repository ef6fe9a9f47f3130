//! Point sets and triangle range counting.
//!
//! [`RangeCounter`] answers "how many (weighted) points of the set lie in the
//! closed triangle `abc`" for `a, b, c` in the set, in constant time after an
//! `O(n² log n)` build. For every pair `p < q` in lexicographic order it
//! stores the weight strictly below the line `pq` among points strictly
//! between them, and the weight on the open segment `pq`. Lexicographic order
//! behaves like `x` under an infinitesimal shear, so a triangle splits into
//! the slab under its top chain minus the slab under its bottom chain.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{cross, LatticePoint};
use crate::lattice::ApexTriangle;

/// A deduplicated set of lattice points with an index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<LatticePoint>,
    index: HashMap<LatticePoint, usize>,
}

impl PointSet {
    /// Rejects duplicates and coordinates outside the bound.
    pub fn new(points: Vec<LatticePoint>) -> Result<Self> {
        let mut index = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if !p.in_bounds() {
                return Err(Error::CoordinateOutOfBounds { x: p.x, y: p.y });
            }
            if index.insert(*p, i).is_some() {
                return Err(Error::DuplicatePoint { x: p.x, y: p.y });
            }
        }
        Ok(Self { points, index })
    }

    /// Silently drops duplicates, keeping first occurrences.
    pub fn dedup(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let pts: Vec<LatticePoint> = points.into_iter().filter(|p| seen.insert(*p)).collect();
        Self::new(pts)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.index.contains_key(&p)
    }

    pub fn index_of(&self, p: LatticePoint) -> Option<usize> {
        self.index.get(&p).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        self.points.iter().copied()
    }

    /// Points sorted lexicographically.
    pub fn sorted(&self) -> Vec<LatticePoint> {
        let mut v = self.points.clone();
        v.sort_unstable();
        v
    }

    /// Subset of points satisfying `keep`, in original order.
    pub fn filter(&self, mut keep: impl FnMut(LatticePoint) -> bool) -> PointSet {
        let pts: Vec<LatticePoint> = self.points.iter().copied().filter(|p| keep(*p)).collect();
        Self::new(pts).expect("subset of a valid set")
    }
}

struct Fenwick {
    tree: Vec<i64>,
}

impl Fenwick {
    fn new(n: usize) -> Self {
        Self { tree: vec![0; n + 1] }
    }

    fn add(&mut self, i: usize, w: i64) {
        let mut i = i + 1;
        while i < self.tree.len() {
            self.tree[i] += w;
            i += i & i.wrapping_neg();
        }
    }

    // sum over [0, i)
    fn prefix(&self, i: usize) -> i64 {
        let mut i = i;
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i &= i - 1;
        }
        s
    }
}

/// Immutable triangle range counting structure over a weighted point set.
#[derive(Debug, Clone)]
pub struct RangeCounter {
    points: Vec<LatticePoint>,
    weights: Vec<i64>,
    rank: Vec<usize>,
    n: usize,
    below: Vec<i64>,
    on: Vec<i64>,
}

impl RangeCounter {
    /// Every point has weight one.
    pub fn build(set: &PointSet) -> Self {
        Self::build_weighted(set.points(), &vec![1; set.len()])
    }

    pub fn build_weighted(points: &[LatticePoint], weights: &[u32]) -> Self {
        assert_eq!(points.len(), weights.len());
        let n = points.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by_key(|&i| points[i]);
        let mut rank = vec![0; n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let weights: Vec<i64> = weights.iter().map(|&w| w as i64).collect();
        let mut below = vec![0i64; n * n];
        let mut on = vec![0i64; n * n];

        for (r, &pi) in order.iter().enumerate() {
            let p = points[pi];
            let mut later: Vec<usize> = order[r + 1..].to_vec();
            // all of `later` lies in the half-plane lexicographically after p,
            // so the cross product orders directions totally
            later.sort_by(|&u, &v| {
                let c = cross(p, points[u], points[v]);
                0.cmp(&c).then(rank[u].cmp(&rank[v]))
            });
            let mut fw = Fenwick::new(n);
            let mut g = 0;
            while g < later.len() {
                let mut h = g + 1;
                while h < later.len() && cross(p, points[later[g]], points[later[h]]) == 0 {
                    h += 1;
                }
                let mut run = 0i64;
                for &q in &later[g..h] {
                    let key = r * n + rank[q];
                    below[key] = fw.prefix(rank[q]);
                    on[key] = run;
                    run += weights[q];
                }
                for &q in &later[g..h] {
                    fw.add(rank[q], weights[q]);
                }
                g = h;
            }
        }
        Self {
            points: points.to_vec(),
            weights,
            rank,
            n,
            below,
            on,
        }
    }

    fn b(&self, i: usize, j: usize) -> i64 {
        self.below[self.rank[i] * self.n + self.rank[j]]
    }

    fn l(&self, i: usize, j: usize) -> i64 {
        self.on[self.rank[i] * self.n + self.rank[j]]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Weighted count in the closed triangle with vertices at indices `a, b, c`.
    pub fn query_indices(&self, a: usize, b: usize, c: usize) -> Result<u64> {
        let mut v = [a, b, c];
        v.sort_unstable_by_key(|&i| self.rank[i]);
        let [a, b, c] = v;
        let o = cross(self.points[a], self.points[c], self.points[b]);
        if o == 0 {
            return Err(Error::DegenerateQuery);
        }
        let inner = if o < 0 {
            self.b(a, c) + self.l(a, c) - self.b(a, b) - self.b(b, c) - self.weights[b]
        } else {
            self.b(a, b) + self.l(a, b) + self.b(b, c) + self.l(b, c) - self.b(a, c)
        };
        Ok((inner + self.weights[a] + self.weights[b] + self.weights[c]) as u64)
    }

    /// Weighted count on the closed segment between two indexed points.
    pub fn query_segment_indices(&self, a: usize, b: usize) -> u64 {
        if a == b {
            return self.weights[a] as u64;
        }
        let (lo, hi) = if self.rank[a] < self.rank[b] { (a, b) } else { (b, a) };
        (self.l(lo, hi) + self.weights[a] + self.weights[b]) as u64
    }
}

/// Counts `|closed abc ∩ S|` for `a, b, c ∈ S`.
pub fn query_lattice(
    set: &PointSet,
    rc: &RangeCounter,
    a: LatticePoint,
    b: LatticePoint,
    c: LatticePoint,
) -> Result<u64> {
    let idx = |p: LatticePoint| set.index_of(p).ok_or_else(|| Error::UnknownPoint(p.to_string()));
    rc.query_indices(idx(a)?, idx(b)?, idx(c)?)
}

/// Counts `|closed t ∩ S|` by a direct scan.
pub fn query_apex(set: &PointSet, t: &ApexTriangle) -> u64 {
    set.iter().filter(|&s| t.contains(s)).count() as u64
}

/// Reference scan for a closed lattice triangle.
pub fn naive_triangle_count(set: &PointSet, a: LatticePoint, b: LatticePoint, c: LatticePoint) -> u64 {
    let o = cross(a, b, c).signum();
    set.iter()
        .filter(|&s| {
            if o == 0 {
                return false;
            }
            let d = [cross(a, b, s) * o, cross(b, c, s) * o, cross(c, a, s) * o];
            d.iter().all(|&x| x >= 0)
        })
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, rat_frac, RationalPoint};

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn unit_square() -> PointSet {
        PointSet::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap()
    }

    fn grid(w: i64, h: i64) -> PointSet {
        PointSet::new((0..w).flat_map(|x| (0..h).map(move |y| p(x, y))).collect()).unwrap()
    }

    #[test]
    fn point_set_rejects_duplicates_and_bounds() {
        assert!(matches!(
            PointSet::new(vec![p(0, 0), p(0, 0)]),
            Err(Error::DuplicatePoint { x: 0, y: 0 })
        ));
        assert!(matches!(
            PointSet::new(vec![p(1 << 31, 0)]),
            Err(Error::CoordinateOutOfBounds { .. })
        ));
    }

    #[test]
    fn unit_square_queries() {
        let s = unit_square();
        let rc = RangeCounter::build(&s);
        assert_eq!(query_lattice(&s, &rc, p(0, 0), p(1, 0), p(0, 1)).unwrap(), 3);
        assert_eq!(query_lattice(&s, &rc, p(0, 0), p(1, 0), p(1, 1)).unwrap(), 3);
        assert_eq!(query_lattice(&s, &rc, p(1, 1), p(0, 1), p(1, 0)).unwrap(), 3);
    }

    #[test]
    fn grid_query_is_boundary_inclusive() {
        let s = grid(3, 3);
        let rc = RangeCounter::build(&s);
        assert_eq!(query_lattice(&s, &rc, p(0, 0), p(2, 0), p(0, 2)).unwrap(), 6);
        assert_eq!(query_lattice(&s, &rc, p(0, 0), p(2, 0), p(2, 2)).unwrap(), 6);
        assert_eq!(query_lattice(&s, &rc, p(0, 0), p(2, 1), p(1, 2)).unwrap(), 4);
    }

    #[test]
    fn collinear_query_is_rejected() {
        let s = grid(3, 3);
        let rc = RangeCounter::build(&s);
        assert_eq!(
            query_lattice(&s, &rc, p(0, 0), p(1, 1), p(2, 2)),
            Err(Error::DegenerateQuery)
        );
    }

    #[test]
    fn segment_queries() {
        let s = grid(3, 3);
        let rc = RangeCounter::build(&s);
        let i = |q| s.index_of(q).unwrap();
        assert_eq!(rc.query_segment_indices(i(p(0, 0)), i(p(2, 2))), 3);
        assert_eq!(rc.query_segment_indices(i(p(0, 2)), i(p(0, 0))), 3);
        assert_eq!(rc.query_segment_indices(i(p(0, 0)), i(p(2, 1))), 2);
    }

    #[test]
    fn single_point_set() {
        let s = PointSet::new(vec![p(4, 4)]).unwrap();
        let rc = RangeCounter::build(&s);
        assert_eq!(rc.query_segment_indices(0, 0), 1);
        let t = crate::lattice::ApexTriangle::new(RationalPoint::new(rat_frac(1, 2), rat(0)), p(4, 4), p(9, 0));
        assert_eq!(query_apex(&s, &t), 1);
    }

    #[test]
    fn apex_queries() {
        let s = unit_square();
        let half = RationalPoint::new(rat_frac(1, 2), rat_frac(1, 2));
        assert_eq!(query_apex(&s, &ApexTriangle::new(half.clone(), p(0, 0), p(1, 0))), 2);
        assert_eq!(query_apex(&s, &ApexTriangle::new(half.clone(), p(0, 1), p(1, 1))), 2);
        // degenerate: apex on the diagonal
        assert_eq!(query_apex(&s, &ApexTriangle::new(half, p(0, 0), p(1, 1))), 2);
    }

    #[test]
    fn weighted_counts_only_marked_points() {
        let s = grid(3, 3);
        let w: Vec<u32> = s.iter().map(|q| u32::from(q == p(1, 1))).collect();
        let rc = RangeCounter::build_weighted(s.points(), &w);
        let i = |q| s.index_of(q).unwrap();
        assert_eq!(rc.query_indices(i(p(0, 0)), i(p(2, 0)), i(p(0, 2))).unwrap(), 1);
        assert_eq!(rc.query_indices(i(p(0, 0)), i(p(2, 0)), i(p(2, 1))).unwrap(), 0);
    }
}
