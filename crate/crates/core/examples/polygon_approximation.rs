//! Approximating the largest convex polygon inside a polygon by sampling
//! finer and finer lattices.
//!
//! Run with `cargo run --release --example polygon_approximation`.

use digipeel::approx::{approx_peel, ApproxInstance};
use digipeel::geom::rat_frac;
use digipeel::io::parse_polygon;

fn main() {
    // a hexagon; being convex, the answer is the hexagon itself
    let hexagon = parse_polygon("POLYGON\n3 0\n9 0\n12 5\n9 10\n3 10\n0 5\n").unwrap();
    let exact = hexagon.twice_area().0 / rat_frac(2, 1);
    println!("continuous optimum: {exact}");
    for k in 0..5 {
        let eps = rat_frac(1, 1 << k);
        let inst = ApproxInstance::new(hexagon.clone(), eps.clone()).unwrap();
        let r = approx_peel(&inst).unwrap();
        println!(
            "eps {eps:>5}: {:5} samples, digital area {:8.3}, gap {:7.3}, bound {:9.3}, within bound: {}",
            r.sample_size,
            r.digital_area2.area_f64(),
            exact.to_string().parse::<f64>().unwrap() - r.digital_area2.area_f64(),
            digipeel::render::rational_f64(&(&r.bound_rhs + &r.bound_additive)),
            r.within_bound(&exact)
        );
    }

    // holes are eroded just like the outer boundary
    let ring = parse_polygon("POLYGON\n0 0\n20 0\n20 20\n0 20\nHOLE\n8 8\n12 8\n12 12\n8 12\n").unwrap();
    let r = approx_peel(&ApproxInstance::new(ring, rat_frac(1, 1)).unwrap()).unwrap();
    println!(
        "square with a hole: {} samples, best convex piece area {}",
        r.sample_size,
        r.digital_area2.area_f64()
    );
}
