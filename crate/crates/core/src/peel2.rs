//! Largest union of two digital convex subsets.
//!
//! Two optimal hulls either have disjoint interiors, in which case a line
//! through an edge of one of them separates them, or their boundaries cross
//! at a point `ρ`. In the crossing case both hulls are fans around `ρ`, and a
//! DAG over pairs of fan triangles, always advancing the fan that is less far
//! along in clockwise order, has longest paths equal to the union areas.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geom::{
    convex_clip_area, cross, hull_union_area2, segment_intersection, Area2, ConvexPolygon, Crossing, LatticePoint,
    Rational, RationalPoint,
};
use crate::peel1::solve_peel;
use crate::solution::{Objective, PairKind, PairSolution, Solution};
use crate::valid::ValidityContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Two properly crossing edges and the closed half-planes hosting each set.
///
/// After construction `first = (p_1, p_b)` and `second = (p_a, p_n)` are
/// directed so that their set lies on the left, and clockwise around `ρ` the
/// endpoints appear as `p_1, p_a, p_b, p_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedInstance {
    pub first: (LatticePoint, LatticePoint),
    pub second: (LatticePoint, LatticePoint),
    pub rho: RationalPoint,
}

impl RootedInstance {
    pub fn new(
        e: (LatticePoint, LatticePoint),
        f: (LatticePoint, LatticePoint),
        side_e: Side,
        side_f: Side,
    ) -> Result<Self> {
        let rho = match segment_intersection(e, f) {
            Crossing::Proper(r) => r,
            _ => return Err(Error::NotRooted),
        };
        let direct = |s: (LatticePoint, LatticePoint), side: Side| match side {
            Side::Left => s,
            Side::Right => (s.1, s.0),
        };
        let e = direct(e, side_e);
        let f = direct(f, side_f);
        // f's start inside e's clockwise sweep means e comes first
        let (first, second) = if cross(e.0, e.1, f.0) > 0 { (e, f) } else { (f, e) };
        Ok(Self { first, second, rho })
    }
}

/// A rooted solution with the DAG path length that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedOutcome {
    pub solution: PairSolution,
    pub path_length: Area2,
}

impl RootedOutcome {
    /// Path length equals the union area recomputed from the hulls.
    pub fn path_matches_union(&self) -> bool {
        let recomputed = hull_union_area2(&self.solution.first.hull, &self.solution.second.hull);
        recomputed == self.path_length && recomputed == self.solution.union_area2
    }
}

// Exact integer arithmetic used inside one crossing: i128 when coordinates
// are small enough, BigInt otherwise.
trait Exact: Clone + Ord + Signed + Integer + From<i64> + Into<BigInt> + ToPrimitive {}
impl<T: Clone + Ord + Signed + Integer + From<i64> + Into<BigInt> + ToPrimitive> Exact for T {}

const FAST_COORD: i64 = 1 << 18;

type Vec2<T> = (T, T);

fn tcross<T: Exact>(u: &Vec2<T>, w: &Vec2<T>) -> T {
    u.0.clone() * w.1.clone() - u.1.clone() * w.0.clone()
}

fn tdot<T: Exact>(u: &Vec2<T>, w: &Vec2<T>) -> T {
    u.0.clone() * w.0.clone() + u.1.clone() * w.1.clone()
}

fn tsub<T: Exact>(u: &Vec2<T>, w: &Vec2<T>) -> Vec2<T> {
    (u.0.clone() - w.0.clone(), u.1.clone() - w.1.clone())
}

/// Geometry around the crossing point `ρ` of two segments, with every
/// coordinate multiplied by a common denominator `den`.
struct RootFrame<'a, T> {
    ctx: &'a ValidityContext,
    rho: RationalPoint,
    den: T,
    rho_scaled: Vec2<T>,
    /// Scaled `s - ρ` for each point of `S`, by set index.
    w: Vec<Vec2<T>>,
    /// Same for forbidden points in island mode.
    wf: Vec<Vec2<T>>,
    valid: HashMap<(usize, usize), bool>,
}

impl<'a, T: Exact> RootFrame<'a, T> {
    fn new(
        ctx: &'a ValidityContext,
        e: (LatticePoint, LatticePoint),
        f: (LatticePoint, LatticePoint),
        rho: RationalPoint,
    ) -> Self {
        let t = |v: i64| T::from(v);
        let d1 = (t(e.1.x - e.0.x), t(e.1.y - e.0.y));
        let d2 = (t(f.1.x - f.0.x), t(f.1.y - f.0.y));
        let mut den = tcross(&d1, &d2);
        let mut num = tcross(&(t(f.0.x - e.0.x), t(f.0.y - e.0.y)), &d2);
        if den.is_negative() {
            den = -den;
            num = -num;
        }
        let rho_scaled = (
            t(e.0.x) * den.clone() + d1.0.clone() * num.clone(),
            t(e.0.y) * den.clone() + d1.1.clone() * num,
        );
        let scaled = |p: LatticePoint| tsub(&(t(p.x) * den.clone(), t(p.y) * den.clone()), &rho_scaled);
        let w = ctx.set().iter().map(scaled).collect();
        let wf = ctx.forbidden().map_or(vec![], |f| f.iter().map(scaled).collect());
        Self {
            ctx,
            rho,
            den,
            rho_scaled,
            w,
            wf,
            valid: HashMap::new(),
        }
    }

    /// Validity of the closed triangle `(ρ, p_i, p_j)`, non-degenerate.
    fn valid(&mut self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        if let Some(&v) = self.valid.get(&key) {
            return v;
        }
        let (a, b) = (&self.w[i], &self.w[j]);
        let s = tcross(a, b).signum();
        let ab = tsub(b, a);
        let zero = T::zero();
        let inside = |x: &Vec2<T>| {
            tcross(a, x) * s.clone() >= zero
                && tcross(&ab, &tsub(x, a)) * s.clone() >= zero
                && tcross(x, b) * s.clone() >= zero
        };
        let v = if self.ctx.forbidden().is_some() {
            !self.wf.iter().any(inside)
        } else {
            let k = self.w.iter().filter(|x| inside(x)).count() as u64;
            self.lattice_count(i, j, k) == k
        };
        self.valid.insert(key, v);
        v
    }

    /// Lattice points in the closed triangle `(ρ, p_i, p_j)`, by rows; stops
    /// early once the count exceeds `limit`.
    fn lattice_count(&self, i: usize, j: usize, limit: u64) -> u64 {
        let den = &self.den;
        let t = |v: i64| T::from(v);
        let (p, q) = (self.ctx.point(i), self.ctx.point(j));
        let verts = [
            self.rho_scaled.clone(),
            (t(p.x) * den.clone(), t(p.y) * den.clone()),
            (t(q.x) * den.clone(), t(q.y) * den.clone()),
        ];
        let ys = verts.iter().map(|v| v.1.clone());
        let mut y = ys.clone().min().unwrap().div_ceil(den);
        let ymax = ys.max().unwrap().div_floor(den);
        let mut total = 0u64;
        while y <= ymax {
            let row = y.clone() * den.clone();
            let mut lo: Option<T> = None;
            let mut hi: Option<T> = None;
            let mut push = |num: T, d: T| {
                let c = num.div_ceil(&d);
                let f = num.div_floor(&d);
                if lo.as_ref().is_none_or(|l| c < *l) {
                    lo = Some(c);
                }
                if hi.as_ref().is_none_or(|h| f > *h) {
                    hi = Some(f);
                }
            };
            for k in 0..3 {
                let (px, py) = &verts[k];
                let (qx, qy) = &verts[(k + 1) % 3];
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
                let dy = qy.clone() - py.clone();
                let mut num = px.clone() * dy.clone() + (row.clone() - py.clone()) * (qx.clone() - px.clone());
                let mut d = den.clone() * dy;
                if d.is_negative() {
                    num = -num;
                    d = -d;
                }
                push(num, d);
            }
            if let (Some(l), Some(h)) = (lo, hi) {
                if h >= l {
                    let run: BigInt = (h - l + T::one()).into();
                    total += u64::try_from(run).unwrap_or(u64::MAX);
                    if total > limit {
                        return total;
                    }
                }
            }
            y = y + T::one();
        }
        total
    }

    /// Longest path for one instance. `None` when the sum of the two fans'
    /// separate optima is strictly below `threshold`.
    fn dp(&mut self, inst: &RootedInstance, threshold: Option<&Area2>) -> Result<Option<RootedOutcome>> {
        let ctx = self.ctx;
        let (p1, pb) = inst.first;
        let (pa, pn) = inst.second;
        let (i1, in_) = match (ctx.set().index_of(p1), ctx.set().index_of(pn)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::UnknownPoint(format!("{p1} or {pn}"))),
        };
        let d0 = self.w[i1].clone();
        let dn = self.w[in_].clone();
        let zero = T::zero();
        let in_h = |s: LatticePoint| cross(p1, pb, s) >= 0 || cross(pa, pn, s) >= 0;

        // clockwise from p_1; half 0 is [0, π), half 1 is [π, 2π)
        let mut order: Vec<(usize, u8)> = Vec::new();
        for (k, s) in ctx.set().iter().enumerate() {
            let w = &self.w[k];
            if !in_h(s) || (w.0.is_zero() && w.1.is_zero()) {
                continue;
            }
            let c0 = tcross(&d0, w);
            let ahead = tdot(&d0, w) > zero;
            if c0.is_zero() && ahead && s != p1 {
                continue;
            }
            if tcross(&dn, w).is_zero() && tdot(&dn, w) > zero && s != pn {
                continue;
            }
            let half = if c0.is_negative() || (c0.is_zero() && ahead) {
                0
            } else {
                1
            };
            order.push((k, half));
        }
        let w = &self.w;
        order.sort_by(|a, b| {
            a.1.cmp(&b.1)
                .then_with(|| tcross(&w[a.0], &w[b.0]).cmp(&zero))
                .then_with(|| tdot(&w[a.0], &w[a.0]).cmp(&tdot(&w[b.0], &w[b.0])))
        });
        let idx: Vec<usize> = order.iter().map(|o| o.0).collect();
        let m = idx.len();
        let pt = |k: usize| ctx.point(idx[k]);
        let pos = |p: LatticePoint| (0..m).find(|&k| pt(k) == p);
        let (Some(0), Some(a), Some(b), Some(last)) = (pos(p1), pos(pa), pos(pb), pos(pn)) else {
            return Err(Error::Infeasible);
        };
        debug_assert!(0 < a && a < b && b < last && last == m - 1);

        let den2: BigInt = (self.den.clone() * self.den.clone()).into();
        let wo: Vec<Vec2<T>> = idx.iter().map(|&k| self.w[k].clone()).collect();
        let scaled_cross = |i: usize, j: usize| -> T { tcross(&wo[i], &wo[j]) };
        let tri_area = |i: usize, j: usize| Rational::new(scaled_cross(i, j).abs().into(), den2.clone());

        let mut tris: Vec<(usize, usize)> = Vec::new();
        let mut starting: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut ending: Vec<Vec<usize>> = vec![Vec::new(); m];
        let mut candidates = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                if (j <= b || i >= a) && !scaled_cross(i, j).is_zero() {
                    candidates.push((i, j));
                }
            }
        }
        for (i, j) in candidates {
            if self.valid(idx[i], idx[j]) {
                starting[i].push(tris.len());
                ending[j].push(tris.len());
                tris.push((i, j));
            }
        }
        if starting[0].is_empty() || starting[a].is_empty() || ending[b].is_empty() || ending[last].is_empty() {
            return Err(Error::Infeasible);
        }
        if let Some(limit) = threshold {
            let fan1 = self.best_fan(&tris, &wo, 0, b);
            let fan2 = self.best_fan(&tris, &wo, a, last);
            let (Some(f1), Some(f2)) = (fan1, fan2) else {
                return Err(Error::Infeasible);
            };
            if Rational::new((f1 + f2).into(), den2.clone()) < limit.0 {
                return Ok(None);
            }
        }
        let rp: Vec<RationalPoint> = (0..m).map(|k| pt(k).to_rational()).collect();
        let wf: Vec<(f64, f64)> = wo.iter().map(|v| (to_f64(&v.0), to_f64(&v.1))).collect();
        let den2f = to_f64(&(self.den.clone() * self.den.clone()));
        let area_x: Vec<Rational> = tris.iter().map(|&(i, j)| tri_area(i, j)).collect();
        let area_f: Vec<f64> = tris.iter().map(|&(i, j)| fcross(wf[i], wf[j]).abs() / den2f).collect();
        let convex_at = |i: usize, j: usize, k: usize| cross(pt(i), pt(j), pt(k)) < 0;
        // best remaining area of each fan after a triangle, overlaps ignored
        let nt = tris.len();
        let mut suf1 = vec![f64::NEG_INFINITY; nt];
        let mut suf2 = vec![f64::NEG_INFINITY; nt];
        for t in (0..nt).rev() {
            let (i, j) = tris[t];
            if j <= b {
                suf1[t] = if j == b {
                    0.0
                } else {
                    starting[j]
                        .iter()
                        .filter(|&&s| tris[s].1 <= b && convex_at(i, j, tris[s].1))
                        .map(|&s| area_f[s] + suf1[s])
                        .fold(f64::NEG_INFINITY, f64::max)
                };
            }
            if i >= a {
                suf2[t] = if j == last {
                    0.0
                } else {
                    starting[j]
                        .iter()
                        .filter(|&&s| convex_at(i, j, tris[s].1))
                        .map(|&s| area_f[s] + suf2[s])
                        .fold(f64::NEG_INFINITY, f64::max)
                };
            }
        }
        let tol = area_scale(ctx) * 1e-9;
        let floor = threshold.map_or(f64::NEG_INFINITY, |t| t.0.to_f64().unwrap_or(f64::NEG_INFINITY) - tol);
        let mut dag = PairDag {
            tris: &tris,
            wo: wo.clone(),
            den2: den2.clone(),
            nt,
            wf,
            den2f,
            tol,
            floor,
            suf1,
            suf2,
            rho: self.rho.clone(),
            rp,
            area_f,
            area_x,
            overlap_memo: HashMap::new(),
            values: vec![f64::NEG_INFINITY; nt * nt],
            preds: vec![Pred::Start; nt * nt],
            steps: vec![
                Step {
                    add: (0, None),
                    sub: None
                };
                nt * nt
            ],
            exact: HashMap::new(),
        };

        for &t1 in &starting[0] {
            let (_, j) = tris[t1];
            if j > b {
                continue;
            }
            for &t2 in &starting[a] {
                let sub = (a < j).then_some((t1, t2));
                dag.relax(
                    t1,
                    t2,
                    Pred::Start,
                    Step {
                        add: (t1, Some(t2)),
                        sub,
                    },
                );
            }
        }

        let mut best_end: Option<usize> = None;
        for j in 1..=b {
            for v in (a + 1)..m {
                for &t1 in &ending[j] {
                    if tris[t1].1 > b {
                        continue;
                    }
                    for &t2 in &ending[v] {
                        if tris[t2].0 < a || dag.values[t1 * nt + t2] == f64::NEG_INFINITY {
                            continue;
                        }
                        let (i, _) = tris[t1];
                        let (u, _) = tris[t2];
                        let here = Pred::Node(t1 as u32, t2 as u32);
                        if j == b && v == last {
                            let node = t1 * nt + t2;
                            if best_end.is_none_or(|cur| dag.beats(node, cur)) {
                                best_end = Some(node);
                            }
                        }
                        // advance the first fan
                        if j < b && j <= v {
                            for &t3 in &starting[j] {
                                let k = tris[t3].1;
                                if k > b || !convex_at(i, j, k) {
                                    continue;
                                }
                                let sub = (j < v).then_some((t3, t2));
                                dag.relax(t3, t2, here, Step { add: (t3, None), sub });
                            }
                        }
                        // advance the second fan
                        if v < last && (v <= j || j == b) {
                            for &t4 in &starting[v] {
                                let w = tris[t4].1;
                                if !convex_at(u, v, w) {
                                    continue;
                                }
                                let sub = (v < j).then_some((t4, t1));
                                dag.relax(t1, t4, here, Step { add: (t4, None), sub });
                            }
                        }
                    }
                }
            }
        }

        let Some(end) = best_end else {
            return if threshold.is_some() {
                Ok(None)
            } else {
                Err(Error::Infeasible)
            };
        };
        let length = dag.exact(end);
        let (mut t1, mut t2) = (end / nt, end % nt);
        let mut fan1 = vec![tris[t1]];
        let mut fan2 = vec![tris[t2]];
        while let Pred::Node(s1, s2) = dag.preds[t1 * nt + t2] {
            let (s1, s2) = (s1 as usize, s2 as usize);
            if s1 != t1 {
                fan1.push(tris[s1]);
            }
            if s2 != t2 {
                fan2.push(tris[s2]);
            }
            t1 = s1;
            t2 = s2;
        }
        let verts =
            |fan: &[(usize, usize)]| -> Vec<LatticePoint> { fan.iter().flat_map(|&(i, j)| [pt(i), pt(j)]).collect() };
        let first = ctx.materialize(&verts(&fan1));
        let second = ctx.materialize(&verts(&fan2));
        let solution = PairSolution::new(first, second, PairKind::Intersecting);
        Ok(Some(RootedOutcome {
            solution,
            path_length: Area2(length),
        }))
    }

    /// Largest scaled fan area from `from` to `to` using triangles inside
    /// that range, ignoring the other fan.
    fn best_fan(&self, tris: &[(usize, usize)], wo: &[Vec2<T>], from: usize, to: usize) -> Option<T> {
        let mut best_at: Vec<Vec<(usize, T)>> = vec![Vec::new(); to + 1];
        let mut result: Option<T> = None;
        for &(i, j) in tris {
            if i < from || j > to {
                continue;
            }
            let own = tcross(&wo[i], &wo[j]).abs();
            let prev = if i == from {
                Some(T::zero())
            } else {
                best_at[i]
                    .iter()
                    .filter(|(h, _)| tcross(&tsub(&wo[i], &wo[*h]), &tsub(&wo[j], &wo[i])) <= T::zero())
                    .map(|(_, v)| v.clone())
                    .max()
            };
            if let Some(p) = prev {
                let v = p + own;
                if j == to && result.as_ref().is_none_or(|r| v > *r) {
                    result = Some(v.clone());
                }
                best_at[j].push((i, v));
            }
        }
        result
    }
}

#[derive(Clone, Copy)]
enum Pred {
    Start,
    Node(u32, u32),
}

/// Triangle areas added and the overlap subtracted along one DAG edge.
#[derive(Clone, Copy)]
struct Step {
    add: (usize, Option<usize>),
    sub: Option<(usize, usize)>,
}

fn to_f64<T: Exact>(v: &T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

fn fcross(u: (f64, f64), w: (f64, f64)) -> f64 {
    u.0 * w.1 - u.1 * w.0
}

fn fsub(u: (f64, f64), w: (f64, f64)) -> (f64, f64) {
    (u.0 - w.0, u.1 - w.1)
}

/// Longest-path state. Values are tracked in floating point and compared
/// exactly whenever two candidates fall within `tol` of each other, so every
/// decision agrees with exact arithmetic.
struct PairDag<'a, T> {
    tris: &'a [(usize, usize)],
    wo: Vec<Vec2<T>>,
    den2: BigInt,
    nt: usize,
    wf: Vec<(f64, f64)>,
    den2f: f64,
    tol: f64,
    rho: RationalPoint,
    rp: Vec<RationalPoint>,
    area_f: Vec<f64>,
    area_x: Vec<Rational>,
    /// Nodes whose bound falls below this are dropped.
    floor: f64,
    suf1: Vec<f64>,
    suf2: Vec<f64>,
    overlap_memo: HashMap<(usize, usize), Rational>,
    /// Per node `t1 * nt + t2`; `-∞` marks an unreached node.
    values: Vec<f64>,
    preds: Vec<Pred>,
    steps: Vec<Step>,
    exact: HashMap<usize, Rational>,
}

impl<T: Exact> PairDag<'_, T> {
    /// Approximate overlap of two apex triangles, both clockwise from `ρ`.
    fn overlap_f(&self, s: usize, t: usize) -> f64 {
        let ((i, j), (u, v)) = (self.tris[s], self.tris[t]);
        let (x, y) = (i.max(u), j.min(v));
        if x >= y {
            return 0.0;
        }
        let w = &self.wf;
        let (dx, dy) = (w[x], w[y]);
        let cxy = fcross(dx, dy);
        if cxy == 0.0 {
            return 0.0;
        }
        let hit = |a: (f64, f64), b: (f64, f64), d: (f64, f64)| {
            let ab = fsub(b, a);
            fcross(ab, a) / fcross(ab, d)
        };
        let (a, b, c, e) = (w[i], w[j], w[u], w[v]);
        let (l1x, l2x, l1y, l2y) = (hit(a, b, dx), hit(c, e, dx), hit(a, b, dy), hit(c, e, dy));
        let (nx, ny) = (l1x.min(l2x), l1y.min(l2y));
        let area = if (l1x - l2x) * (l1y - l2y) >= 0.0 {
            (nx * ny * cxy).abs()
        } else {
            let (ab, ce) = (fsub(b, a), fsub(e, c));
            let mu = fcross(fsub(c, a), ce) / fcross(ab, ce);
            let z = (a.0 + mu * ab.0, a.1 + mu * ab.1);
            fcross((nx * dx.0, nx * dx.1), z).abs() + fcross(z, (ny * dy.0, ny * dy.1)).abs()
        };
        area / self.den2f
    }

    fn overlap_x(&mut self, s: usize, t: usize) -> Rational {
        let key = (s.min(t), s.max(t));
        if let Some(v) = self.overlap_memo.get(&key) {
            return v.clone();
        }
        let v = self.overlap_exact(key.0, key.1);
        debug_assert_eq!(v, {
            let poly = |k: usize| {
                let (i, j) = self.tris[k];
                ConvexPolygon::new(vec![self.rho.clone(), self.rp[j].clone(), self.rp[i].clone()]).unwrap()
            };
            convex_clip_area(&poly(key.0), &poly(key.1)).0
        });
        self.overlap_memo.insert(key, v.clone());
        v
    }

    /// Same as `overlap_f`, exactly.
    fn overlap_exact(&self, s: usize, t: usize) -> Rational {
        let ((i, j), (u, v)) = (self.tris[s], self.tris[t]);
        let (x, y) = (i.max(u), j.min(v));
        if x >= y {
            return Rational::zero();
        }
        let w = &self.wo;
        let big = |v: T| -> BigInt { v.into() };
        let (dx, dy) = (&w[x], &w[y]);
        let cxy = tcross(dx, dy);
        if cxy.is_zero() {
            return Rational::zero();
        }
        let hit = |a: &Vec2<T>, b: &Vec2<T>, d: &Vec2<T>| {
            let ab = tsub(b, a);
            Rational::new(big(tcross(&ab, a)), big(tcross(&ab, d)))
        };
        let (a, b, c, e) = (&w[i], &w[j], &w[u], &w[v]);
        let (l1x, l2x, l1y, l2y) = (hit(a, b, dx), hit(c, e, dx), hit(a, b, dy), hit(c, e, dy));
        let switch = (&l1x - &l2x).signum() * (&l1y - &l2y).signum();
        let (nx, ny) = (l1x.min(l2x), l1y.min(l2y));
        let area = if !switch.is_negative() {
            (nx * ny * Rational::from_integer(big(cxy))).abs()
        } else {
            let (ab, ce) = (tsub(b, a), tsub(e, c));
            let mu = Rational::new(big(tcross(&tsub(c, a), &ce)), big(tcross(&ab, &ce)));
            let r = |v: T| Rational::from_integer(big(v));
            let left = nx * (r(tcross(dx, a)) + &mu * r(tcross(dx, &ab)));
            let right = ny * (r(tcross(a, dy)) + &mu * r(tcross(&ab, dy)));
            left.abs() + right.abs()
        };
        area / Rational::from_integer(self.den2.clone())
    }

    fn step_f(&self, step: Step) -> f64 {
        let mut v = self.area_f[step.add.0] + step.add.1.map_or(0.0, |t| self.area_f[t]);
        if let Some((s, t)) = step.sub {
            v -= self.overlap_f(s, t);
        }
        v
    }

    fn step_x(&mut self, step: Step) -> Rational {
        let mut v = self.area_x[step.add.0].clone();
        if let Some(t) = step.add.1 {
            v += &self.area_x[t];
        }
        if let Some((s, t)) = step.sub {
            v -= self.overlap_x(s, t);
        }
        v
    }

    fn pred_slot(&self, pred: Pred) -> Option<usize> {
        match pred {
            Pred::Start => None,
            Pred::Node(a, b) => Some(a as usize * self.nt + b as usize),
        }
    }

    /// Exact value of a node, filled in along its predecessor chain.
    fn exact(&mut self, slot: usize) -> Rational {
        let mut chain = Vec::new();
        let mut cur = Some(slot);
        let mut base = Rational::zero();
        while let Some(c) = cur {
            if let Some(x) = self.exact.get(&c) {
                base = x.clone();
                break;
            }
            chain.push(c);
            cur = self.pred_slot(self.preds[c]);
        }
        for c in chain.into_iter().rev() {
            base += self.step_x(self.steps[c]);
            self.exact.insert(c, base.clone());
        }
        base
    }

    fn beats(&mut self, a: usize, b: usize) -> bool {
        let d = self.values[a] - self.values[b];
        if d.abs() > self.tol {
            return d > 0.0;
        }
        self.exact(a) > self.exact(b)
    }

    fn relax(&mut self, t1: usize, t2: usize, pred: Pred, step: Step) {
        let (r1, r2) = (self.suf1[t1], self.suf2[t2]);
        if r1 == f64::NEG_INFINITY || r2 == f64::NEG_INFINITY {
            return;
        }
        let base = self.pred_slot(pred).map_or(0.0, |p| self.values[p]);
        let value = base + self.step_f(step);
        if value + r1 + r2 < self.floor {
            return;
        }
        let slot = t1 * self.nt + t2;
        let cur = self.values[slot];
        let mut exact = None;
        if cur != f64::NEG_INFINITY {
            let d = value - cur;
            if d < -self.tol {
                return;
            }
            if d <= self.tol {
                let cand = self.pred_slot(pred).map_or(Rational::zero(), |p| self.exact(p)) + self.step_x(step);
                if cand <= self.exact(slot) {
                    return;
                }
                exact = Some(cand);
            }
        }
        self.values[slot] = value;
        self.preds[slot] = pred;
        self.steps[slot] = step;
        match exact {
            Some(x) => self.exact.insert(slot, x),
            None => self.exact.remove(&slot),
        };
    }
}

/// Twice the bounding box area plus the squared diagonal, an upper bound on
/// every area handled for this set.
fn area_scale(ctx: &ValidityContext) -> f64 {
    let span = |f: fn(LatticePoint) -> i64| {
        let (lo, hi) = ctx
            .set()
            .iter()
            .map(f)
            .fold((i64::MAX, i64::MIN), |(l, h), v| (l.min(v), h.max(v)));
        (hi - lo) as f64
    };
    let (dx, dy) = (span(|p| p.x), span(|p| p.y));
    2.0 * dx * dy + dx * dx + dy * dy + 1.0
}

fn fits_fast(ctx: &ValidityContext) -> bool {
    let small = |p: LatticePoint| p.x.abs() <= FAST_COORD && p.y.abs() <= FAST_COORD;
    ctx.set().iter().all(small) && ctx.forbidden().is_none_or(|f| f.iter().all(small))
}

/// Runs the given side choices of one crossing, sharing triangle validity.
fn solve_crossing(
    ctx: &ValidityContext,
    e: (LatticePoint, LatticePoint),
    f: (LatticePoint, LatticePoint),
    sides: &[(Side, Side)],
    threshold: Option<&Area2>,
) -> Vec<Result<Option<RootedOutcome>>> {
    fn run<T: Exact>(
        ctx: &ValidityContext,
        e: (LatticePoint, LatticePoint),
        f: (LatticePoint, LatticePoint),
        sides: &[(Side, Side)],
        threshold: Option<&Area2>,
    ) -> Vec<Result<Option<RootedOutcome>>> {
        let Crossing::Proper(rho) = segment_intersection(e, f) else {
            return sides.iter().map(|_| Err(Error::NotRooted)).collect();
        };
        let mut frame = RootFrame::<T>::new(ctx, e, f, rho);
        sides
            .iter()
            .map(|&(se, sf)| RootedInstance::new(e, f, se, sf).and_then(|inst| frame.dp(&inst, threshold)))
            .collect()
    }
    if fits_fast(ctx) {
        run::<i128>(ctx, e, f, sides, threshold)
    } else {
        run::<BigInt>(ctx, e, f, sides, threshold)
    }
}

/// Longest path in the DAG of one rooted instance.
pub fn solve_rooted(ctx: &ValidityContext, inst: &RootedInstance) -> Result<RootedOutcome> {
    match segment_intersection(inst.first, inst.second) {
        Crossing::Proper(r) if r == inst.rho => {}
        _ => return Err(Error::NotRooted),
    }
    let out = solve_crossing(ctx, inst.first, inst.second, &[(Side::Left, Side::Left)], None)
        .pop()
        .expect("one result");
    out.map(|o| o.expect("no threshold"))
}

/// Best single set on the closed left of each directed pair `(i, j)`,
/// indexed `i * n + j`.
fn half_plane_peels(ctx: &ValidityContext) -> Vec<Option<Solution>> {
    let n = ctx.len();
    (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / n, k % n);
            if i == j {
                return None;
            }
            let (p, q) = (ctx.point(i), ctx.point(j));
            let side = ctx.restricted(ctx.set().filter(|s| cross(p, q, s) >= 0));
            Some(solve_peel(&side, Objective::Area).expect("contains p and q"))
        })
        .collect()
}

fn disjoint_from(ctx: &ValidityContext, halves: &[Option<Solution>]) -> Result<PairSolution> {
    let n = ctx.len();
    if n < 2 {
        let s = solve_peel(ctx, Objective::Area)?;
        return Ok(PairSolution::new(s, Solution::empty(), PairKind::Disjoint));
    }
    let mut best: Option<PairSolution> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let left = halves[i * n + j].clone().expect("off-diagonal");
            let right = halves[j * n + i].clone().expect("off-diagonal");
            let cand = PairSolution::new(left, right, PairKind::Disjoint);
            best = Some(match best {
                None => cand,
                Some(b) => b.better_of(cand),
            });
        }
    }
    Ok(best.expect("at least one pair"))
}

/// Best pair whose hulls sit on opposite closed sides of a line through two
/// input points.
pub fn solve_disjoint(ctx: &ValidityContext) -> Result<PairSolution> {
    if ctx.is_empty() {
        return Err(Error::EmptyInput);
    }
    disjoint_from(ctx, &half_plane_peels(ctx))
}

/// Every rooted instance: each unordered pair of properly crossing segments
/// between input points, with the four side choices.
pub fn rooted_instances(ctx: &ValidityContext) -> Vec<RootedInstance> {
    crossing_pairs(ctx)
        .into_iter()
        .flat_map(|(e, f)| {
            ALL_SIDES
                .iter()
                .map(move |&(se, sf)| RootedInstance::new(e, f, se, sf).expect("crossing"))
        })
        .collect()
}

const ALL_SIDES: [(Side, Side); 4] = [
    (Side::Left, Side::Left),
    (Side::Left, Side::Right),
    (Side::Right, Side::Left),
    (Side::Right, Side::Right),
];

type Segment = (LatticePoint, LatticePoint);

/// A crossing with the side choices left to try.
type Task<S> = (Segment, Segment, Vec<S>);

fn crossing_pairs(ctx: &ValidityContext) -> Vec<(Segment, Segment)> {
    let n = ctx.len();
    let segs: Vec<Segment> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .map(|(i, j)| (ctx.point(i), ctx.point(j)))
        .collect();
    let mut out = Vec::new();
    for s in 0..segs.len() {
        for t in (s + 1)..segs.len() {
            if matches!(segment_intersection(segs[s], segs[t]), Crossing::Proper(_)) {
                out.push((segs[s], segs[t]));
            }
        }
    }
    out
}

/// Bookkeeping from a full two-set solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peel2Report {
    pub solution: PairSolution,
    pub rooted_instances: usize,
    /// Instances left after discarding those that cannot beat the
    /// non-crossing candidates.
    pub solved_roots: usize,
    pub feasible_roots: usize,
    /// Rooted paths whose length disagreed with the recomputed union area.
    pub path_mismatches: usize,
}

pub fn solve_peel2(ctx: &ValidityContext) -> Result<PairSolution> {
    solve_peel2_detailed(ctx).map(|r| r.solution)
}

/// Crossings handed to the workers between two updates of the pruning
/// threshold.
const CHUNK: usize = 64;

pub fn solve_peel2_detailed(ctx: &ValidityContext) -> Result<Peel2Report> {
    if ctx.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = ctx.len();
    let single = PairSolution::single(solve_peel(ctx, Objective::Area)?);
    if single.first.count == n {
        // S itself is admissible, and every union lies inside conv(S)
        return Ok(Peel2Report {
            solution: single,
            rooted_instances: 0,
            solved_roots: 0,
            feasible_roots: 0,
            path_mismatches: 0,
        });
    }
    let halves = half_plane_peels(ctx);
    let mut best = single.better_of(disjoint_from(ctx, &halves)?);

    // A root needs a valid triangle on each chosen side, and its union is at
    // most the sum of the best single sets on the two sides.
    let mut usable = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            let (p, q) = (ctx.point(i), ctx.point(j));
            usable[i * n + j] = i != j && (0..n).any(|r| cross(p, q, ctx.point(r)) > 0 && ctx.triangle_valid(i, j, r));
        }
    }
    let directed = |s: Segment, side: Side| {
        let (i, j) = (ctx.set().index_of(s.0).unwrap(), ctx.set().index_of(s.1).unwrap());
        match side {
            Side::Left => i * n + j,
            Side::Right => j * n + i,
        }
    };
    let bound = |e: Segment, f: Segment, (se, sf): (Side, Side)| -> Option<i128> {
        let (de, df) = (directed(e, se), directed(f, sf));
        let area = |d: usize| halves[d].as_ref().expect("off-diagonal").twice_area_i128();
        (usable[de] && usable[df]).then(|| area(de) + area(df))
    };

    let pairs = crossing_pairs(ctx);
    let total = pairs.len() * ALL_SIDES.len();
    let mut tasks: Vec<Task<((Side, Side), i128)>> = pairs
        .into_iter()
        .filter_map(|(e, f)| {
            let sides: Vec<((Side, Side), i128)> = ALL_SIDES
                .iter()
                .filter_map(|&s| bound(e, f, s).map(|b| (s, b)))
                .collect();
            (!sides.is_empty()).then_some((e, f, sides))
        })
        .collect();
    let top = |t: &Task<((Side, Side), i128)>| t.2.iter().map(|s| s.1).max().unwrap();
    tasks.sort_by_key(|t| std::cmp::Reverse(top(t)));

    let mut solved = 0;
    let mut feasible = 0;
    let mut violations = 0;
    for chunk in tasks.chunks(CHUNK) {
        // strict comparison: a pruned root could not even tie
        let threshold = best.union_area2.clone();
        let work: Vec<Task<(Side, Side)>> = chunk
            .iter()
            .filter_map(|(e, f, sides)| {
                let keep: Vec<(Side, Side)> = sides
                    .iter()
                    .filter(|(_, b)| Area2::from_int(*b) >= threshold)
                    .map(|(s, _)| *s)
                    .collect();
                (!keep.is_empty()).then_some((*e, *f, keep))
            })
            .collect();
        if work.is_empty() {
            break;
        }
        solved += work.iter().map(|w| w.2.len()).sum::<usize>();
        let outcomes: Vec<Vec<Result<Option<RootedOutcome>>>> = work
            .par_iter()
            .map(|(e, f, sides)| solve_crossing(ctx, *e, *f, sides, Some(&threshold)))
            .collect();
        for o in outcomes.into_iter().flatten().flatten().flatten() {
            feasible += 1;
            if !o.path_matches_union() {
                violations += 1;
            }
            best = best.better_of(o.solution);
        }
    }
    Ok(Peel2Report {
        solution: best,
        rooted_instances: total,
        solved_roots: solved,
        feasible_roots: feasible,
        path_mismatches: violations,
    })
}
