//! Checking both solvers against exhaustive search on small random sets.
//!
//! Run with `cargo run --release --example oracle_crosscheck [cases]`.

use digipeel::cli::generate;
use digipeel::io::parse_points;
use digipeel::oracle::{oracle_peel, oracle_peel2};
use digipeel::peel1::solve_peel;
use digipeel::peel2::solve_peel2;
use digipeel::{Objective, ValidityContext};

fn main() {
    let cases: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let (mut peel_ok, mut peel2_ok) = (0, 0);
    for seed in 0..cases {
        let n = 3 + (seed % 6) as usize;
        let set = parse_points(&generate(seed, n, 4).unwrap()).unwrap();
        let ctx = ValidityContext::digital(set.clone());
        let fast = solve_peel(&ctx, Objective::Area).unwrap();
        let slow = oracle_peel(&set, Objective::Area).unwrap();
        peel_ok += usize::from(fast.key(Objective::Area) == slow.key(Objective::Area));
        let fast2 = solve_peel2(&ctx).unwrap();
        let slow2 = oracle_peel2(&set).unwrap();
        if fast2.union_area2 == slow2.union_area2 {
            peel2_ok += 1;
        } else {
            println!(
                "seed {seed}: solver {} vs brute force {}",
                fast2.union_area2, slow2.union_area2
            );
        }
    }
    println!("single set: {peel_ok}/{cases} agree; pairs: {peel2_ok}/{cases} agree");
}
