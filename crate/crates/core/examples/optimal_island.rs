//! Optimal islands: the largest subset of the blue points whose hull holds no
//! red point.
//!
//! Run with `cargo run --example optimal_island`.

use digipeel::oracle::oracle_island;
use digipeel::peel1::solve_peel;
use digipeel::{LatticePoint, Objective, PointSet, ValidityContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut blue = Vec::new();
    let mut red = Vec::new();
    for x in 0..40 {
        for y in 0..40 {
            match rng.gen_range(0..20) {
                0 | 1 => blue.push(LatticePoint::new(x, y)),
                2 => red.push(LatticePoint::new(x, y)),
                _ => {}
            }
        }
    }
    let blue = PointSet::new(blue).unwrap();
    let red = PointSet::new(red).unwrap();
    let ctx = ValidityContext::island(blue.clone(), red.clone());
    for objective in [Objective::Area, Objective::Count] {
        let s = solve_peel(&ctx, objective).unwrap();
        println!(
            "{objective:?}: {} blue points, area {}, hull {}",
            s.count,
            s.area2.area_f64(),
            s.hull
        );
    }

    // a small instance is cheap to confirm by brute force
    let small_blue = PointSet::new(blue.iter().filter(|p| p.x < 12 && p.y < 12).collect()).unwrap();
    let small_red = PointSet::new(red.iter().filter(|p| p.x < 12 && p.y < 12).collect()).unwrap();
    if small_blue.len() <= digipeel::oracle::PEEL_LIMIT {
        let fast = solve_peel(
            &ValidityContext::island(small_blue.clone(), small_red.clone()),
            Objective::Area,
        )
        .unwrap();
        let slow = oracle_island(&small_blue, &small_red, Objective::Area).unwrap();
        println!(
            "12x12 corner: solver area {}, brute force area {}",
            fast.area2, slow.area2
        );
    }
}
