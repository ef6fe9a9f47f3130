//! Acceptance run: one line per criterion, nonzero exit if a hard one fails.

use std::path::Path;
use std::time::{Duration, Instant};

use digipeel::approx::{approx_peel, sample_eroded, ApproxInstance};
use digipeel::cli;
use digipeel::convexity::is_digital_convex;
use digipeel::geom::{orientation, rat, rat_frac, ConvexPolygon, PolygonWithHoles, Rational};
use digipeel::lattice::{count_apex_triangle, count_lattice_triangle, lattice_on_segment, ApexTriangle, Triangle};
use digipeel::oracle::{oracle_count, oracle_count_apex, oracle_peel, oracle_peel2};
use digipeel::peel1::solve_peel;
use digipeel::peel2::{rooted_instances, solve_peel2_detailed, solve_rooted};
use digipeel::range::{naive_triangle_count, query_apex, query_lattice, RangeCounter};
use digipeel::{LatticePoint, Objective, PairSolution, PointSet, RationalPoint, Solution, ValidityContext};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Line {
    id: u32,
    name: &'static str,
    pass: bool,
    soft: bool,
    detail: String,
    elapsed: Duration,
}

fn p(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

fn random_point(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> LatticePoint {
    p(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi))
}

fn box_instance(rng: &mut ChaCha8Rng, n: usize, side: i64) -> PointSet {
    let mut cells: Vec<LatticePoint> = (0..side).flat_map(|x| (0..side).map(move |y| p(x, y))).collect();
    cells.shuffle(rng);
    cells.truncate(n);
    PointSet::new(cells).unwrap()
}

fn random_set(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> PointSet {
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let q = random_point(rng, lo, hi);
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    PointSet::new(pts).unwrap()
}

/// Violations of "digital convex and drawn from S".
fn sanity(s: &Solution, set: &PointSet) -> usize {
    let inside = s.points.iter().all(|&q| set.contains(q));
    usize::from(!(inside && is_digital_convex(&s.points)))
}

fn pair_sanity(s: &PairSolution, set: &PointSet) -> usize {
    sanity(&s.first, set) + sanity(&s.second, set)
}

fn counting_exactness() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut bad = 0;
    let mut done = 0;
    while done < 1000 {
        let t = Triangle::new(
            random_point(&mut rng, -50, 50),
            random_point(&mut rng, -50, 50),
            random_point(&mut rng, -50, 50),
        );
        if count_lattice_triangle(&t) != oracle_count(&t).unwrap() {
            bad += 1;
        }
        done += 1;
    }
    let mut apex_done = 0;
    while apex_done < 1000 {
        let coord = |rng: &mut ChaCha8Rng| {
            let d = rng.gen_range(1..=100i64);
            rat_frac(rng.gen_range(-50 * d..=50 * d), d)
        };
        let apex = RationalPoint::new(coord(&mut rng), coord(&mut rng));
        let t = ApexTriangle::new(apex, random_point(&mut rng, -50, 50), random_point(&mut rng, -50, 50));
        if t.is_degenerate() {
            continue;
        }
        if count_apex_triangle(&t) != oracle_count_apex(&t).unwrap() {
            bad += 1;
        }
        apex_done += 1;
    }
    (
        bad == 0,
        format!("{done} lattice + {apex_done} apex triangles, {bad} mismatches"),
    )
}

fn pick_consistency() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    let mut done = 0;
    while done < 1000 {
        let t = Triangle::new(
            random_point(&mut rng, -50, 50),
            random_point(&mut rng, -50, 50),
            random_point(&mut rng, -50, 50),
        );
        if t.is_degenerate() {
            continue;
        }
        let [a, b, c] = t.vertices();
        let boundary: u64 = [(a, b), (b, c), (c, a)]
            .iter()
            .map(|&(u, v)| lattice_on_segment(u, v) - 1)
            .sum();
        // count = A + B/2 + 1, doubled
        if 2 * count_lattice_triangle(&t) as i128 != t.twice_area() + boundary as i128 + 2 {
            bad += 1;
        }
        done += 1;
    }
    (bad == 0, format!("{done} triangles, {bad} violations"))
}

fn range_counting() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let set = random_set(&mut rng, 200, 0, 100);
    let rc = RangeCounter::build(&set);
    let pts = set.points().to_vec();
    let mut bad = 0;
    let (mut lattice, mut apex) = (0, 0);
    while lattice < 10_000 {
        let (a, b, c) = (
            *pts.choose(&mut rng).unwrap(),
            *pts.choose(&mut rng).unwrap(),
            *pts.choose(&mut rng).unwrap(),
        );
        let Ok(got) = query_lattice(&set, &rc, a, b, c) else {
            continue;
        };
        if got != naive_triangle_count(&set, a, b, c) {
            bad += 1;
        }
        lattice += 1;
    }
    while apex < 10_000 {
        let d = rng.gen_range(1..=100i64);
        let apex_pt = RationalPoint::new(
            rat_frac(rng.gen_range(0..=100 * d), d),
            rat_frac(rng.gen_range(0..=100 * d), d),
        );
        let t = ApexTriangle::new(apex_pt, *pts.choose(&mut rng).unwrap(), *pts.choose(&mut rng).unwrap());
        if t.is_degenerate() {
            continue;
        }
        // membership from raw orientations, independent of ApexTriangle::contains
        let corners = [t.apex.clone(), t.p.to_rational(), t.q.to_rational()];
        let expected = set
            .iter()
            .filter(|s| {
                let r = s.to_rational();
                (0..3).all(|k| orientation(&corners[k], &corners[(k + 1) % 3], &r).sign() >= 0)
            })
            .count() as u64;
        if query_apex(&set, &t) != expected {
            bad += 1;
        }
        apex += 1;
    }
    (
        bad == 0,
        format!("{lattice} lattice + {apex} apex queries on 200 points, {bad} mismatches"),
    )
}

struct Corpus {
    peel: Vec<PointSet>,
    peel2: Vec<PointSet>,
}

fn corpus() -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let peel = (0..200).map(|k| box_instance(&mut rng, 1 + k % 10, 6)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let peel2 = (0..100).map(|k| box_instance(&mut rng, 1 + k % 8, 5)).collect();
    Corpus { peel, peel2 }
}

fn peel_optimality(c: &Corpus, violations: &mut usize) -> (bool, String) {
    let mut bad = 0;
    for set in &c.peel {
        let ctx = ValidityContext::digital(set.clone());
        for objective in [Objective::Area, Objective::Count] {
            let fast = solve_peel(&ctx, objective).unwrap();
            let slow = oracle_peel(set, objective).unwrap();
            *violations += sanity(&fast, set);
            if fast.key(objective) != slow.key(objective) {
                bad += 1;
            }
        }
    }
    (
        bad == 0,
        format!("{} instances x 2 objectives, {bad} mismatches", c.peel.len()),
    )
}

fn peel2_optimality(c: &Corpus, violations: &mut usize) -> (bool, String) {
    let mut bad = 0;
    let mut runtime_mismatch = 0;
    for set in &c.peel2 {
        let report = solve_peel2_detailed(&ValidityContext::digital(set.clone())).unwrap();
        let slow = oracle_peel2(set).unwrap();
        *violations += pair_sanity(&report.solution, set);
        runtime_mismatch += report.path_mismatches;
        if report.solution.union_area2 != slow.union_area2 {
            bad += 1;
        }
    }
    (
        bad == 0 && runtime_mismatch == 0,
        format!(
            "{} instances, {bad} mismatches, {runtime_mismatch} path/area disagreements",
            c.peel2.len()
        ),
    )
}

fn path_length_all_roots(c: &Corpus, violations: &mut usize) -> (bool, String) {
    let (mut roots, mut feasible, mut bad) = (0, 0, 0);
    for set in &c.peel2 {
        let ctx = ValidityContext::digital(set.clone());
        for inst in rooted_instances(&ctx) {
            roots += 1;
            if let Ok(out) = solve_rooted(&ctx, &inst) {
                feasible += 1;
                *violations += pair_sanity(&out.solution, set);
                if !out.path_matches_union() {
                    bad += 1;
                }
            }
        }
    }
    (
        bad == 0,
        format!("{roots} rooted instances, {feasible} feasible, {bad} violations"),
    )
}

fn hexagon() -> Vec<RationalPoint> {
    // radius 5 around (5, 5), half-height 5·√3/2 rounded to 433/100
    let h = rat_frac(433, 100);
    let five = rat(5);
    vec![
        RationalPoint::new(rat(10), five.clone()),
        RationalPoint::new(rat_frac(15, 2), &five + &h),
        RationalPoint::new(rat_frac(5, 2), &five + &h),
        RationalPoint::new(rat(0), five.clone()),
        RationalPoint::new(rat_frac(5, 2), &five - &h),
        RationalPoint::new(rat_frac(15, 2), &five - &h),
    ]
}

fn approximation_bound(violations: &mut usize) -> (bool, String) {
    let lattice = |v: &[(i64, i64)]| {
        v.iter()
            .map(|&(x, y)| RationalPoint::new(rat(x), rat(y)))
            .collect::<Vec<_>>()
    };
    let fixtures = [
        ("square", lattice(&[(0, 0), (10, 0), (10, 10), (0, 10)])),
        ("triangle", lattice(&[(0, 0), (12, 0), (0, 9)])),
        ("hexagon", hexagon()),
    ];
    let epsilons = [rat(2), rat(1), rat_frac(1, 2), rat_frac(1, 4)];
    let (mut ok, mut cases, mut monotone, mut overshoot_ok, mut sample_ok) = (0, 0, true, true, true);
    for (_, verts) in &fixtures {
        let poly = PolygonWithHoles::new(verts.clone(), vec![]).unwrap();
        let convex = ConvexPolygon::new(verts.clone()).unwrap();
        let area = poly.twice_area().0 / rat(2);
        let mut prev: Option<Rational> = None;
        for eps in &epsilons {
            let inst = ApproxInstance::new(poly.clone(), eps.clone()).unwrap();
            let report = approx_peel(&inst).unwrap();
            cases += 1;
            if report.within_bound(&area) {
                ok += 1;
            }
            let a_d = report.digital_area();
            if prev.as_ref().is_some_and(|p| a_d < *p) {
                monotone = false;
            }
            prev = Some(a_d);
            // overshoot is bounded by 2rε
            let over = report.overshoot_area2(&convex).0 / rat(2);
            if over > report.lemma_terms.overshoot {
                overshoot_ok = false;
            }
            let sample = sample_eroded(&poly, eps).unwrap();
            *violations += sanity(&report.solution, &sample);
            for s in sample.iter() {
                let q = RationalPoint::new(rat(s.x) * eps, rat(s.y) * eps);
                let (inside, dist) = poly.query(&q);
                if !inside || dist < eps * rat(2) {
                    sample_ok = false;
                }
            }
        }
    }
    (
        ok == cases && monotone && overshoot_ok && sample_ok,
        format!(
            "{ok}/{cases} within bound, A_D monotone: {monotone}, overshoot within 2rε: {overshoot_ok}, samples eroded: {sample_ok}"
        ),
    )
}

fn performance() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let set = random_set(&mut rng, 300, 0, 1000);
    let t = Instant::now();
    solve_peel(&ValidityContext::digital(set), Objective::Area).unwrap();
    let peel = t.elapsed();
    let mut worst = Duration::ZERO;
    for side in [1000, 12, 8] {
        let set = random_set(&mut rng, 30, 0, side);
        let t = Instant::now();
        solve_peel2_detailed(&ValidityContext::digital(set)).unwrap();
        worst = worst.max(t.elapsed());
    }
    (
        peel < Duration::from_secs(60) && worst < Duration::from_secs(600),
        format!("peel n=300: {peel:.2?}; peel2 n=30, slowest of boxes 1000/12/8: {worst:.2?}"),
    )
}

fn determinism(c: &Corpus) -> (bool, String) {
    let dir = tempfile::tempdir().unwrap();
    let mut differ = 0;
    let mut runs = 0;
    let jobs = c
        .peel
        .iter()
        .map(|s| ("peel", s))
        .chain(c.peel2.iter().map(|s| ("peel2", s)));
    for (k, (cmd, set)) in jobs.enumerate() {
        let path = dir.path().join(format!("{k}.txt"));
        std::fs::write(&path, digipeel::io::format_points(set)).unwrap();
        let run =
            |workers: &str, path: &Path| cli::run(["digipeel", "--workers", workers, cmd, path.to_str().unwrap()]);
        let outs = [run("1", &path), run("8", &path), run("8", &path)];
        runs += outs.len();
        if outs.iter().any(|o| o.code != 0 || o.stdout != outs[0].stdout) {
            differ += 1;
        }
    }
    (
        differ == 0,
        format!(
            "{runs} CLI runs over {} instances, {differ} differing",
            c.peel.len() + c.peel2.len()
        ),
    )
}

fn main() {
    let mut lines = Vec::new();
    let mut record = |id, name, soft, f: &mut dyn FnMut() -> (bool, String)| {
        let t = Instant::now();
        let (pass, detail) = f();
        let elapsed = t.elapsed();
        let line = Line {
            id,
            name,
            pass,
            soft,
            detail,
            elapsed,
        };
        println!(
            "criterion {:>2} {:<24} {}{}  {} ({:.2?})",
            line.id,
            line.name,
            if line.pass { "PASS" } else { "FAIL" },
            if line.soft { " (soft)" } else { "" },
            line.detail,
            line.elapsed
        );
        lines.push(line);
    };
    let c = corpus();
    let mut violations = 0;
    record(1, "counting exactness", false, &mut || counting_exactness());
    record(2, "pick consistency", false, &mut || pick_consistency());
    record(3, "range counting", false, &mut || range_counting());
    record(4, "single set optimality", false, &mut || {
        peel_optimality(&c, &mut violations)
    });
    record(5, "pair optimality", false, &mut || {
        peel2_optimality(&c, &mut violations)
    });
    record(6, "path length = union", false, &mut || {
        path_length_all_roots(&c, &mut violations)
    });
    record(8, "approximation bound", false, &mut || {
        approximation_bound(&mut violations)
    });
    let v = violations;
    record(7, "output sanity", false, &mut || {
        (v == 0, format!("{v} outputs not digital convex or not inside S"))
    });
    record(9, "performance", true, &mut || performance());
    record(10, "determinism", false, &mut || determinism(&c));

    let limits = [(1, 10), (2, 5), (3, 30), (4, 120), (5, 600), (8, 120)];
    let mut failed = 0;
    for line in &lines {
        let over = limits
            .iter()
            .any(|&(id, s)| id == line.id && line.elapsed > Duration::from_secs(s));
        if over {
            println!("criterion {:>2} exceeded its time budget", line.id);
        }
        if (!line.pass || over) && !line.soft {
            failed += 1;
        }
    }
    println!("acceptance: {} criteria, {failed} hard failures", lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
