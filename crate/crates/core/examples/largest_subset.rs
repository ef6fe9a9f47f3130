//! The largest digital convex subset of a random point set, by area and by
//! number of points.
//!
//! Run with `cargo run --release --example largest_subset [n] [box] [seed]`.

use std::time::Instant;

use digipeel::cli::generate;
use digipeel::io::parse_points;
use digipeel::peel1::solve_peel_detailed;
use digipeel::{Objective, ValidityContext};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = *args.first().unwrap_or(&60) as usize;
    let size = *args.get(1).unwrap_or(&12) as i64;
    let seed = *args.get(2).unwrap_or(&1);
    let set = parse_points(&generate(seed, n, size).unwrap()).unwrap();
    let ctx = ValidityContext::digital(set);

    for objective in [Objective::Area, Objective::Count] {
        let start = Instant::now();
        let out = solve_peel_detailed(&ctx, objective).unwrap();
        let s = &out.solution;
        println!(
            "{objective:?}: area {} with {} points, hull {}, {} fan triangles ({:?})",
            s.area2.area_f64(),
            s.count,
            s.hull,
            out.fan.len(),
            start.elapsed()
        );
    }
}
