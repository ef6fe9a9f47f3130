//! From a polygon to a digital instance and back.
//!
//! The polygon is sampled on the ε-lattice, keeping only points at L∞
//! distance at least 2ε from the boundary. Those points, divided by ε, form an
//! ordinary lattice instance; the digital optimum scaled by ε² approximates
//! the largest convex polygon inside the original region.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{
    convex_clip_area, Area2, ConvexPolygon, Hull, LatticePoint, PolygonWithHoles, Rational, RationalPoint,
};
use crate::peel1::solve_peel;
use crate::peel2::solve_peel2;
use crate::range::PointSet;
use crate::solution::{Objective, PairSolution, Solution};
use crate::valid::ValidityContext;

/// Upper bound on the number of ε-lattice cells scanned in the bounding box.
pub const SAMPLE_CELL_LIMIT: u128 = 4_000_000;

fn sqrt2_up() -> Rational {
    Rational::new(141_422.into(), 100_000.into())
}

fn pi_up() -> Rational {
    Rational::new(314_160.into(), 100_000.into())
}

/// `8·√2·π + 2` with both irrationals rounded up.
pub fn bound_constant() -> Rational {
    Rational::from_integer(8.into()) * sqrt2_up() * pi_up() + Rational::from_integer(2.into())
}

/// A rational upper bound on `√q` within about `10⁻⁶` relative slack.
pub fn sqrt_upper(q: &Rational) -> Rational {
    if q.is_zero() {
        return Rational::zero();
    }
    let scale = BigInt::from(1_000_000u64);
    let n = q.numer() * q.denom() * &scale * &scale;
    let root = n.sqrt() + 1;
    Rational::new(root, q.denom() * scale)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxInstance {
    pub polygon: PolygonWithHoles,
    pub epsilon: Rational,
    /// Squared diameter of the vertex set.
    pub diameter_squared: Rational,
}

impl ApproxInstance {
    pub fn new(polygon: PolygonWithHoles, epsilon: Rational) -> Result<Self> {
        if !epsilon.is_positive() {
            return Err(Error::NonPositiveEpsilon);
        }
        let diameter_squared = polygon.diameter_squared();
        Ok(Self {
            polygon,
            epsilon,
            diameter_squared,
        })
    }
}

/// The ε-lattice points of the eroded polygon, divided by ε.
pub fn sample_eroded(polygon: &PolygonWithHoles, epsilon: &Rational) -> Result<PointSet> {
    if !epsilon.is_positive() {
        return Err(Error::NonPositiveEpsilon);
    }
    let xs = polygon.outer.iter().map(|v| &v.x);
    let ys = polygon.outer.iter().map(|v| &v.y);
    let lo = |it: &mut dyn Iterator<Item = &Rational>| (it.min().unwrap() / epsilon).ceil().to_integer();
    let hi = |it: &mut dyn Iterator<Item = &Rational>| (it.max().unwrap() / epsilon).floor().to_integer();
    let to_i64 = |b: BigInt| {
        i64::try_from(b).map_err(|_| Error::SizeGuard {
            size: usize::MAX,
            limit: SAMPLE_CELL_LIMIT as usize,
        })
    };
    let (i0, i1) = (to_i64(lo(&mut xs.clone()))?, to_i64(hi(&mut xs.clone()))?);
    let (j0, j1) = (to_i64(lo(&mut ys.clone()))?, to_i64(hi(&mut ys.clone()))?);
    let cells = (i1 - i0 + 1).max(0) as u128 * (j1 - j0 + 1).max(0) as u128;
    if cells > SAMPLE_CELL_LIMIT {
        return Err(Error::SizeGuard {
            size: cells.min(usize::MAX as u128) as usize,
            limit: SAMPLE_CELL_LIMIT as usize,
        });
    }
    let margin = epsilon * Rational::from_integer(2.into());
    let points: Vec<LatticePoint> = (i0..=i1)
        .into_par_iter()
        .flat_map_iter(|i| {
            let margin = margin.clone();
            (j0..=j1).filter_map(move |j| {
                let q = RationalPoint::new(
                    Rational::from_integer(i.into()) * epsilon,
                    Rational::from_integer(j.into()) * epsilon,
                );
                let (inside, dist) = polygon.query(&q);
                (inside && dist >= margin).then(|| LatticePoint::new(i, j))
            })
        })
        .collect();
    PointSet::new(points)
}

/// The pieces of the error bound, in area units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaTerms {
    /// Area lost to erosion: `6√2·π·rε + 16ε²`.
    pub erosion: Rational,
    /// Area lost to sampling: `2√2·π·rε`.
    pub sampling: Rational,
    /// Area by which the digital hull may leave the polygon: `2rε`.
    pub overshoot: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReport {
    pub sample_size: usize,
    pub epsilon: Rational,
    /// Digital optimum in the scaled (integer) coordinates.
    pub solution: Solution,
    /// Twice the hull area in original units.
    pub digital_area2: Area2,
    pub diameter_squared: Rational,
    /// Rational upper bound on the diameter.
    pub diameter_upper: Rational,
    /// `c·r·ε` with `c = 8√2π + 2`, rounded up.
    pub bound_rhs: Rational,
    /// The additive `16ε²`.
    pub bound_additive: Rational,
    pub lemma_terms: LemmaTerms,
}

impl ApproxReport {
    /// Digital area in original units.
    pub fn digital_area(&self) -> Rational {
        &self.digital_area2.0 / Rational::from_integer(2.into())
    }

    /// Hull vertices mapped back to original coordinates.
    pub fn hull_original(&self) -> Vec<RationalPoint> {
        let e = &self.epsilon;
        self.solution
            .hull
            .vertices()
            .into_iter()
            .map(|p| {
                RationalPoint::new(
                    Rational::from_integer(p.x.into()) * e,
                    Rational::from_integer(p.y.into()) * e,
                )
            })
            .collect()
    }

    /// Exact check of `|A_C − A_D| ≤ c·r·ε + 16ε²` against a known continuous
    /// optimum, using the exact squared diameter.
    pub fn within_bound(&self, continuous_area: &Rational) -> bool {
        let slack = (continuous_area - self.digital_area()).abs() - &self.bound_additive;
        if !slack.is_positive() {
            return true;
        }
        let c = bound_constant();
        &slack * &slack <= &c * &c * &self.epsilon * &self.epsilon * &self.diameter_squared
    }

    /// Twice the area of the scaled-back hull lying outside a convex polygon.
    pub fn overshoot_area2(&self, convex: &ConvexPolygon) -> Area2 {
        let Hull::Polygon(_) = self.solution.hull else {
            return Area2::zero();
        };
        let hull = ConvexPolygon::new(self.hull_original()).expect("strictly convex hull");
        Area2(hull.twice_area().0 - convex_clip_area(&hull, convex).0)
    }
}

pub fn approx_peel(inst: &ApproxInstance) -> Result<ApproxReport> {
    let sample = sample_eroded(&inst.polygon, &inst.epsilon)?;
    let solution = if sample.is_empty() {
        Solution::empty()
    } else {
        solve_peel(&ValidityContext::digital(sample.clone()), Objective::Area)?
    };
    let eps = &inst.epsilon;
    let eps2 = eps * eps;
    let digital_area2 = Area2(&solution.area2.0 * &eps2);
    let r = sqrt_upper(&inst.diameter_squared);
    let sqrt2 = sqrt2_up();
    let pi = pi_up();
    let int = |v: i64| Rational::from_integer(v.into());
    let bound_additive = int(16) * &eps2;
    let lemma_terms = LemmaTerms {
        erosion: int(6) * &sqrt2 * &pi * &r * eps + &bound_additive,
        sampling: int(2) * &sqrt2 * &pi * &r * eps,
        overshoot: int(2) * &r * eps,
    };
    Ok(ApproxReport {
        sample_size: sample.len(),
        epsilon: eps.clone(),
        solution,
        digital_area2,
        diameter_squared: inst.diameter_squared.clone(),
        bound_rhs: bound_constant() * &r * eps,
        diameter_upper: r,
        bound_additive,
        lemma_terms,
    })
}

/// Two-set variant on the same sample, without a bound. Returns the pair in
/// scaled coordinates and twice its union area in original units.
pub fn approx_peel2(inst: &ApproxInstance) -> Result<Option<(PairSolution, Area2)>> {
    let sample = sample_eroded(&inst.polygon, &inst.epsilon)?;
    if sample.is_empty() {
        return Ok(None);
    }
    let pair = solve_peel2(&ValidityContext::digital(sample))?;
    let area = Area2(&pair.union_area2.0 * &inst.epsilon * &inst.epsilon);
    Ok(Some((pair, area)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, rat_frac};

    fn square(side: i64) -> PolygonWithHoles {
        let v = [(0, 0), (side, 0), (side, side), (0, side)];
        PolygonWithHoles::from_lattice(&v.map(|(x, y)| LatticePoint::new(x, y))).unwrap()
    }

    #[test]
    fn square_samples() {
        let s = sample_eroded(&square(10), &rat(1)).unwrap();
        assert_eq!(s.len(), 49);
        assert!(s.iter().all(|p| (2..=8).contains(&p.x) && (2..=8).contains(&p.y)));
        let s = sample_eroded(&square(10), &rat(2)).unwrap();
        let mut got: Vec<(i64, i64)> = s.iter().map(|p| (p.x, p.y)).collect();
        got.sort();
        assert_eq!(got, vec![(2, 2), (2, 3), (3, 2), (3, 3)]);
    }

    #[test]
    fn square_reports() {
        let inst = ApproxInstance::new(square(10), rat(1)).unwrap();
        let r = approx_peel(&inst).unwrap();
        assert_eq!(r.digital_area(), rat(36));
        assert!(r.within_bound(&rat(100)));
        assert!(r.bound_rhs > rat(530) && r.bound_rhs < rat(532));

        let inst = ApproxInstance::new(square(10), rat_frac(1, 2)).unwrap();
        // hull [1,9]², side 8
        let r = approx_peel(&inst).unwrap();
        assert_eq!(r.digital_area(), rat(64));
        assert!(r.within_bound(&rat(100)));
    }

    #[test]
    fn empty_sample() {
        let inst = ApproxInstance::new(square(10), rat(20)).unwrap();
        let r = approx_peel(&inst).unwrap();
        assert_eq!(r.sample_size, 0);
        assert_eq!(r.digital_area2, Area2::zero());
        assert!(r.within_bound(&rat(100)));
    }

    #[test]
    fn hole_is_eroded_too() {
        let outer: Vec<RationalPoint> = [(0, 0), (10, 0), (10, 10), (0, 10)]
            .iter()
            .map(|&(x, y)| RationalPoint::new(rat(x), rat(y)))
            .collect();
        let hole: Vec<RationalPoint> = [(4, 4), (4, 6), (6, 6), (6, 4)]
            .iter()
            .map(|&(x, y)| RationalPoint::new(rat(x), rat(y)))
            .collect();
        let p = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        let s = sample_eroded(&p, &rat(1)).unwrap();
        for q in [(5, 5), (3, 5), (7, 5), (5, 7), (3, 3)] {
            assert!(!s.contains(LatticePoint::new(q.0, q.1)), "{q:?}");
        }
        assert!(s.contains(LatticePoint::new(2, 2)));
        assert!(s.contains(LatticePoint::new(8, 8)));
    }

    #[test]
    fn bad_epsilon() {
        assert_eq!(ApproxInstance::new(square(2), rat(0)), Err(Error::NonPositiveEpsilon));
        assert_eq!(sample_eroded(&square(2), &rat(-1)), Err(Error::NonPositiveEpsilon));
    }

    #[test]
    fn sqrt_bound_is_above() {
        let q = rat(200);
        let r = sqrt_upper(&q);
        assert!(&r * &r >= q);
        assert!(r < rat_frac(141_422, 10_000));
    }
}
