//! Triangle range counting over a point set after an O(n² log n) build.
//!
//! Run with `cargo run --release --example range_counting`.

use std::time::Instant;

use digipeel::range::{naive_triangle_count, query_lattice, RangeCounter};
use digipeel::{LatticePoint, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut pts = std::collections::BTreeSet::new();
    while pts.len() < 300 {
        pts.insert(LatticePoint::new(rng.gen_range(0..200), rng.gen_range(0..200)));
    }
    let set = PointSet::new(pts.into_iter().collect()).unwrap();

    let start = Instant::now();
    let rc = RangeCounter::build(&set);
    println!("built counter for {} points in {:?}", set.len(), start.elapsed());

    let mut agree = 0;
    let queries = 2000;
    let start = Instant::now();
    for _ in 0..queries {
        let pick = |rng: &mut ChaCha8Rng| set.points()[rng.gen_range(0..set.len())];
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let Ok(fast) = query_lattice(&set, &rc, a, b, c) else {
            continue;
        };
        if fast == naive_triangle_count(&set, a, b, c) {
            agree += 1;
        }
    }
    println!(
        "{agree} of {queries} sampled queries (collinear ones skipped) matched a direct scan in {:?}",
        start.elapsed()
    );
}
