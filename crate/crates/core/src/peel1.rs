//! Largest digital convex subset (and the optimal island variant).
//!
//! Every convex lattice polygon has a fan triangulation from its bottom-most
//! (then leftmost) vertex `v`. For each candidate `v` the remaining points
//! above it are sorted by angle, and a longest-chain DP appends valid
//! triangles `(v, p_i, p_j)` while the turn at `p_i` stays convex. For a
//! fixed middle vertex `p_i` the admissible predecessors form a prefix in
//! angular order around `p_i`, so each layer is a sort plus a sweep.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::convexity::is_digital_convex;
use crate::error::{Error, Result};
use crate::geom::{convex_hull, cross, Hull, LatticePoint};
use crate::lattice::Triangle;
use crate::solution::{Objective, Solution};
use crate::valid::{Mode, ValidityContext};

/// A solution plus the fan that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelOutcome {
    pub solution: Solution,
    /// Fan triangles from the bottom vertex; empty for zero-area solutions.
    pub fan: Vec<Triangle>,
}

pub fn solve_peel(ctx: &ValidityContext, objective: Objective) -> Result<Solution> {
    solve_peel_detailed(ctx, objective).map(|o| o.solution)
}

pub fn solve_peel_detailed(ctx: &ValidityContext, objective: Objective) -> Result<PeelOutcome> {
    if ctx.is_empty() {
        return Err(Error::EmptyInput);
    }
    if whole_set_admissible(ctx) {
        let solution = Solution::from_points(ctx.set().points().to_vec());
        let fan = fan_of(&solution.hull);
        return Ok(PeelOutcome { solution, fan });
    }

    let fans: Vec<Option<PeelOutcome>> = (0..ctx.len())
        .into_par_iter()
        .map(|v| best_fan_from(ctx, v, objective))
        .collect();

    let mut best = PeelOutcome {
        solution: ctx.best_collinear(objective),
        fan: vec![],
    };
    for cand in fans.into_iter().flatten() {
        if cand.solution.compare(&best.solution, objective) == Ordering::Greater {
            best = cand;
        }
    }
    Ok(best)
}

fn whole_set_admissible(ctx: &ValidityContext) -> bool {
    match ctx.mode() {
        Mode::Digital => is_digital_convex(ctx.set().points()),
        Mode::Island => {
            let hull = convex_hull(ctx.set().points());
            let forbidden = ctx.forbidden().expect("island mode");
            !forbidden.iter().any(|f| hull.contains(f))
        }
    }
}

/// Fan triangulation of a hull from its bottom-most, leftmost vertex.
pub fn fan_of(hull: &Hull) -> Vec<Triangle> {
    let Hull::Polygon(vs) = hull else { return vec![] };
    let start = (0..vs.len()).min_by_key(|&i| (vs[i].y, vs[i].x)).unwrap();
    let v = vs[start];
    let n = vs.len();
    (1..n - 1)
        .map(|k| Triangle::new(v, vs[(start + k) % n], vs[(start + k + 1) % n]))
        .collect()
}

fn above(a: LatticePoint, v: LatticePoint) -> bool {
    (a.y, a.x) > (v.y, v.x)
}

// Both vectors lie in a common open half-plane; counterclockwise is later.
fn by_direction(u: (i64, i64), w: (i64, i64)) -> Ordering {
    let c = u.0 as i128 * w.1 as i128 - u.1 as i128 * w.0 as i128;
    0.cmp(&c)
}

fn sub(a: LatticePoint, b: LatticePoint) -> (i64, i64) {
    (a.x - b.x, a.y - b.y)
}

type Value = (i64, i64);

fn add(a: Value, b: Value) -> Value {
    (a.0 + b.0, a.1 + b.1)
}

#[derive(Clone, Copy)]
struct Cell {
    value: Value,
    pred: Option<u32>,
}

fn best_fan_from(ctx: &ValidityContext, v: usize, objective: Objective) -> Option<PeelOutcome> {
    let vp = ctx.point(v);
    let mut order: Vec<usize> = (0..ctx.len()).filter(|&i| above(ctx.point(i), vp)).collect();
    if order.len() < 2 {
        return None;
    }
    order.sort_by(|&a, &b| {
        let (pa, pb) = (ctx.point(a), ctx.point(b));
        by_direction(sub(pa, vp), sub(pb, vp)).then_with(|| {
            let da = (pa.x - vp.x).abs() + (pa.y - vp.y).abs();
            let db = (pb.x - vp.x).abs() + (pb.y - vp.y).abs();
            da.cmp(&db)
        })
    });
    let m = order.len();
    let pt = |k: usize| ctx.point(order[k]);

    // weights of triangle (v, k, l): fresh start and continuation
    let weight = |k: usize, l: usize, first: bool| -> Value {
        let area = cross(vp, pt(k), pt(l)) as i64;
        let mut count = ctx.triangle_count(v, order[k], order[l]) as i64;
        if !first {
            count -= ctx.segment_count(v, order[k]) as i64;
        }
        match objective {
            Objective::Area => (area, count),
            Objective::Count => (count, area),
        }
    };

    let mut cells: Vec<Option<Cell>> = vec![None; m * m];
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); m];
    for k in 0..m {
        for l in (k + 1)..m {
            if cross(vp, pt(k), pt(l)) > 0 && ctx.triangle_valid(v, order[k], order[l]) {
                outgoing[k].push(l);
            }
        }
    }
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); m];

    let mut best: Option<(Value, usize, usize)> = None;
    for i in 0..m {
        let pi = pt(i);
        let mut inc = std::mem::take(&mut incoming[i]);
        inc.sort_by(|&h, &g| by_direction(sub(pi, pt(h)), sub(pi, pt(g))).then(h.cmp(&g)));
        let mut out = outgoing[i].clone();
        out.sort_by(|&j, &l| by_direction(sub(pt(j), pi), sub(pt(l), pi)).then(j.cmp(&l)));

        let mut ptr = 0;
        let mut run: Option<(Value, usize)> = None;
        for &j in &out {
            let w_out = sub(pt(j), pi);
            while ptr < inc.len() {
                let h = inc[ptr];
                let w_in = sub(pi, pt(h));
                // convex (or straight) turn at p_i
                if w_in.0 as i128 * w_out.1 as i128 - w_in.1 as i128 * w_out.0 as i128 >= 0 {
                    let val = cells[h * m + i].expect("incoming cell").value;
                    if run.is_none_or(|(r, _)| val > r) {
                        run = Some((val, h));
                    }
                    ptr += 1;
                } else {
                    break;
                }
            }
            let mut cell = Cell {
                value: weight(i, j, true),
                pred: None,
            };
            if let Some((r, h)) = run {
                let cont = add(r, weight(i, j, false));
                if cont > cell.value {
                    cell = Cell {
                        value: cont,
                        pred: Some(h as u32),
                    };
                }
            }
            cells[i * m + j] = Some(cell);
            incoming[j].push(i);
            if best.is_none_or(|(b, _, _)| cell.value > b) {
                best = Some((cell.value, i, j));
            }
        }
    }

    let (value, mut i, mut j) = best?;
    let mut chain = vec![pt(j), pt(i)];
    let mut fan = vec![Triangle::new(vp, pt(i), pt(j))];
    while let Some(h) = cells[i * m + j].and_then(|c| c.pred) {
        let h = h as usize;
        chain.push(pt(h));
        fan.push(Triangle::new(vp, pt(h), pt(i)));
        j = i;
        i = h;
    }
    chain.push(vp);
    fan.reverse();
    let solution = ctx.materialize(&chain);
    debug_assert_eq!(solution.key(objective), (value.0 as i128, value.1 as i128));
    Some(PeelOutcome { solution, fan })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::range::PointSet;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn grid(w: i64, h: i64) -> Vec<LatticePoint> {
        (0..w).flat_map(|x| (0..h).map(move |y| p(x, y))).collect()
    }

    fn digital(pts: Vec<LatticePoint>) -> ValidityContext {
        ValidityContext::digital(PointSet::new(pts).unwrap())
    }

    #[test]
    fn full_grid_is_its_own_answer() {
        let s = solve_peel(&digital(grid(3, 3)), Objective::Area).unwrap();
        assert_eq!(s.twice_area_i128(), 8);
        assert_eq!(s.count, 9);
    }

    #[test]
    fn trapped_center() {
        let s = solve_peel(&digital(vec![p(0, 0), p(1, 0), p(0, 1), p(2, 2)]), Objective::Area).unwrap();
        assert_eq!(s.twice_area_i128(), 1);
        assert_eq!(s.points, vec![p(0, 0), p(0, 1), p(1, 0)]);
    }

    #[test]
    fn spaced_collinear_points_give_a_single_point() {
        let ctx = digital(vec![p(0, 0), p(2, 0), p(4, 0)]);
        for obj in [Objective::Area, Objective::Count] {
            let s = solve_peel(&ctx, obj).unwrap();
            assert_eq!(s.count, 1);
            assert_eq!(s.points, vec![p(0, 0)]);
        }
    }

    #[test]
    fn island_matches_digital_on_punctured_grid() {
        let punctured: Vec<LatticePoint> = grid(3, 3).into_iter().filter(|&q| q != p(1, 1)).collect();
        let d = solve_peel(&digital(punctured), Objective::Area).unwrap();
        let island = ValidityContext::island(
            PointSet::new(grid(3, 3)).unwrap(),
            PointSet::new(vec![p(1, 1)]).unwrap(),
        );
        let i = solve_peel(&island, Objective::Area).unwrap();
        assert_eq!(d.twice_area_i128(), i.twice_area_i128());
        assert_eq!(d.points, i.points);
    }

    #[test]
    fn count_objective_prefers_long_runs() {
        // a run of 6 beats the unit triangle under the count objective
        let mut pts: Vec<LatticePoint> = (0..6).map(|x| p(x, 10)).collect();
        pts.extend([p(0, 0), p(1, 0), p(0, 1)]);
        let ctx = digital(pts);
        assert_eq!(solve_peel(&ctx, Objective::Count).unwrap().count, 6);
        assert_eq!(solve_peel(&ctx, Objective::Area).unwrap().twice_area_i128(), 1);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(solve_peel(&digital(vec![]), Objective::Area), Err(Error::EmptyInput));
    }

    #[test]
    fn fan_triangles_are_valid() {
        let pts: Vec<LatticePoint> = grid(5, 4)
            .into_iter()
            .filter(|&q| q != p(2, 2) && q != p(4, 0))
            .collect();
        let ctx = digital(pts);
        let out = solve_peel_detailed(&ctx, Objective::Area).unwrap();
        let valid = ctx.enumerate_valid();
        assert!(!out.fan.is_empty());
        for t in &out.fan {
            assert!(valid.contains(t));
        }
        let fan_area: i128 = out.fan.iter().map(|t| t.twice_area()).sum();
        assert_eq!(fan_area, out.solution.twice_area_i128());
    }
}
