//! Recognizing digital convex sets: conv(K) ∩ Z² = K.
//!
//! Run with `cargo run --example digital_convexity`.

use digipeel::convexity::is_digital_convex;
use digipeel::geom::convex_hull;
use digipeel::lattice::count_hull;
use digipeel::LatticePoint;

fn main() {
    let p = |x, y| LatticePoint::new(x, y);
    let cases: Vec<(&str, Vec<LatticePoint>)> = vec![
        ("unit square", vec![p(0, 0), p(1, 0), p(0, 1), p(1, 1)]),
        ("gap on a segment", vec![p(0, 0), p(2, 0)]),
        ("primitive segment", vec![p(0, 0), p(2, 1)]),
        ("triangle missing its midpoints", vec![p(0, 0), p(2, 0), p(0, 2)]),
        (
            "3x3 grid without its center",
            (0..3)
                .flat_map(|x| (0..3).map(move |y| p(x, y)))
                .filter(|&q| q != p(1, 1))
                .collect(),
        ),
    ];
    for (name, k) in cases {
        let hull_points = count_hull(&convex_hull(&k));
        println!(
            "{name:32} |K| = {:2}, |conv(K) ∩ Z²| = {hull_points:2}, digital convex: {}",
            k.len(),
            is_digital_convex(&k)
        );
    }
}
