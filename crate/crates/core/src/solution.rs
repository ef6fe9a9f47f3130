//! Result types shared by the solvers, with the deterministic tie-break.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::geom::{convex_hull, hull_union_area2, Area2, Hull, LatticePoint, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    #[default]
    Area,
    Count,
}

impl std::str::FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "area" => Ok(Objective::Area),
            "count" => Ok(Objective::Count),
            other => Err(format!("unknown objective `{other}` (expected area|count)")),
        }
    }
}

/// A digital convex subset together with its hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Sorted lexicographically.
    pub points: Vec<LatticePoint>,
    pub hull: Hull,
    pub area2: Area2,
    pub count: usize,
}

impl Solution {
    pub fn empty() -> Self {
        Self {
            points: vec![],
            hull: Hull::Empty,
            area2: Area2::zero(),
            count: 0,
        }
    }

    pub fn from_points(mut points: Vec<LatticePoint>) -> Self {
        points.sort_unstable();
        points.dedup();
        let hull = convex_hull(&points);
        let area2 = Area2::from_int(hull.twice_area());
        let count = points.len();
        Self {
            points,
            hull,
            area2,
            count,
        }
    }

    pub fn twice_area_i128(&self) -> i128 {
        self.hull.twice_area()
    }

    /// `(primary, secondary)` under the objective.
    pub fn key(&self, objective: Objective) -> (i128, i128) {
        let a = self.twice_area_i128();
        let c = self.count as i128;
        match objective {
            Objective::Area => (a, c),
            Objective::Count => (c, a),
        }
    }

    /// Total order where `Greater` means "better": objective, then the other
    /// measure, then the lexicographically smaller point list.
    pub fn compare(&self, other: &Self, objective: Objective) -> Ordering {
        self.key(objective)
            .cmp(&other.key(objective))
            .then_with(|| other.points.cmp(&self.points))
    }

    pub fn better_of(self, other: Self, objective: Objective) -> Self {
        if other.compare(&self, objective) == Ordering::Greater {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    Disjoint,
    Intersecting,
    Single,
}

/// Two digital convex subsets and the exact area of the union of their hulls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSolution {
    pub first: Solution,
    pub second: Solution,
    pub union_area2: Area2,
    pub kind: PairKind,
}

impl PairSolution {
    pub fn new(first: Solution, second: Solution, kind: PairKind) -> Self {
        let union_area2 = hull_union_area2(&first.hull, &second.hull);
        Self {
            first,
            second,
            union_area2,
            kind,
        }
    }

    pub fn single(s: Solution) -> Self {
        let union_area2 = s.area2.clone();
        Self {
            first: s.clone(),
            second: s,
            union_area2,
            kind: PairKind::Single,
        }
    }

    /// Number of distinct points in the union.
    pub fn count(&self) -> usize {
        let mut all: Vec<LatticePoint> = self
            .first
            .points
            .iter()
            .chain(self.second.points.iter())
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }

    /// Union area, then union count, then the lexicographically smaller pair
    /// of point lists; kind breaks the remaining ties.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.union_area2
            .cmp(&other.union_area2)
            .then_with(|| self.count().cmp(&other.count()))
            .then_with(|| (&other.first.points, &other.second.points).cmp(&(&self.first.points, &self.second.points)))
            .then_with(|| kind_rank(other.kind).cmp(&kind_rank(self.kind)))
    }

    pub fn better_of(self, other: Self) -> Self {
        if other.compare(&self) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn union_area2_rational(&self) -> &Rational {
        &self.union_area2.0
    }
}

fn kind_rank(k: PairKind) -> u8 {
    match k {
        PairKind::Single => 0,
        PairKind::Disjoint => 1,
        PairKind::Intersecting => 2,
    }
}
