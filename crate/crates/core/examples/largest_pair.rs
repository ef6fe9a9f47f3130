//! Two digital convex subsets with the largest union area, compared with the
//! best single subset.
//!
//! Run with `cargo run --release --example largest_pair`.

use std::time::Instant;

use digipeel::peel1::solve_peel;
use digipeel::peel2::{solve_peel2_detailed, solve_rooted, RootedInstance, Side};
use digipeel::{LatticePoint, Objective, PointSet, ValidityContext};

fn p(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

fn main() {
    // a plus sign: two crossing bars beat any single convex piece
    let mut pts: Vec<LatticePoint> = (0..6).flat_map(|x| (2..4).map(move |y| p(x, y))).collect();
    pts.extend(
        (2..4)
            .flat_map(|x| (0..6).map(move |y| p(x, y)))
            .filter(|q| q.y < 2 || q.y > 3),
    );
    let ctx = ValidityContext::digital(PointSet::new(pts).unwrap());

    let single = solve_peel(&ctx, Objective::Area).unwrap();
    println!("best single set: area {}", single.area2.area_f64());

    let start = Instant::now();
    let report = solve_peel2_detailed(&ctx).unwrap();
    let s = &report.solution;
    println!(
        "best pair ({:?}): union area {} in {:?}",
        s.kind,
        s.union_area2.area_f64(),
        start.elapsed()
    );
    println!("  first hull  {}", s.first.hull);
    println!("  second hull {}", s.second.hull);
    println!(
        "  {} rooted instances, {} solved after pruning, {} feasible, {} path/area disagreements",
        report.rooted_instances, report.solved_roots, report.feasible_roots, report.path_mismatches
    );

    // rooted instances by hand: the two bars' diagonals cross at (5/2, 5/2)
    for se in [Side::Left, Side::Right] {
        for sf in [Side::Left, Side::Right] {
            let inst = RootedInstance::new((p(0, 2), p(5, 3)), (p(2, 0), p(3, 5)), se, sf).unwrap();
            match solve_rooted(&ctx, &inst) {
                Ok(out) => println!(
                    "rooted at {} ({se:?}, {sf:?}): union area {}, path length agrees: {}",
                    inst.rho,
                    out.path_length.area_f64(),
                    out.path_matches_union()
                ),
                Err(e) => println!("rooted at {} ({se:?}, {sf:?}): {e}", inst.rho),
            }
        }
    }
}
