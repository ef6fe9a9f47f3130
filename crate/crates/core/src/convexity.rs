//! Digital convexity: `conv(K) ∩ Z² = K`.

use crate::geom::{convex_hull, LatticePoint};
use crate::lattice::count_hull;
use crate::range::PointSet;
use crate::solution::{Objective, Solution};
use crate::valid::ValidityContext;

/// The hull always contains `K`, so equality of counts is equivalent to the
/// definition. Empty sets and singletons are digital convex.
pub fn is_digital_convex(points: &[LatticePoint]) -> bool {
    let mut k = points.to_vec();
    k.sort_unstable();
    k.dedup();
    count_hull(&convex_hull(&k)) == k.len() as u64
}

/// Largest digital convex subset of `S` with a zero-area hull.
pub fn best_collinear(set: &PointSet, objective: Objective) -> Solution {
    ValidityContext::digital(set.clone()).best_collinear(objective)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn examples() {
        assert!(is_digital_convex(&[p(0, 0), p(1, 0), p(0, 1), p(1, 1)]));
        assert!(!is_digital_convex(&[p(0, 0), p(2, 0)]));
        assert!(is_digital_convex(&[p(0, 0), p(2, 1)]));
        assert!(is_digital_convex(&[]));
        assert!(is_digital_convex(&[p(7, -3)]));
        assert!(!is_digital_convex(&[p(0, 0), p(2, 0), p(0, 2)]));
    }

    #[test]
    fn best_collinear_example() {
        let s = PointSet::new(vec![p(0, 0), p(1, 0), p(2, 0), p(5, 5)]).unwrap();
        let b = best_collinear(&s, Objective::Area);
        assert_eq!(b.points, vec![p(0, 0), p(1, 0), p(2, 0)]);
        assert_eq!(b.area2.0, crate::geom::rat(0));
    }
}
