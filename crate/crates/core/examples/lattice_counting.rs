//! Counting lattice points in triangles, with and without a rational apex.
//!
//! Run with `cargo run --example lattice_counting`.

use digipeel::geom::{rat, rat_frac, RationalPoint};
use digipeel::lattice::{
    count_apex_triangle, count_hull, count_lattice_triangle, lattice_on_segment, ApexTriangle, Triangle,
};
use digipeel::oracle::{oracle_count, oracle_count_apex};
use digipeel::{Hull, LatticePoint};

fn p(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

fn main() {
    println!("segment (0,0)-(4,6): {} points", lattice_on_segment(p(0, 0), p(4, 6)));

    for t in [
        Triangle::new(p(0, 0), p(3, 0), p(0, 3)),
        Triangle::new(p(-4, 1), p(7, 3), p(2, 9)),
        Triangle::new(p(0, 0), p(2, 4), p(4, 8)),
    ] {
        let fast = count_lattice_triangle(&t);
        let slow = oracle_count(&t).unwrap();
        println!(
            "triangle {:?} {:?} {:?}: Pick {fast}, enumeration {slow}",
            t.a, t.b, t.c
        );
    }

    let apex = ApexTriangle::new(RationalPoint::new(rat(2), rat_frac(3, 2)), p(0, 0), p(4, 0));
    println!(
        "apex (2, 3/2) over (0,0)-(4,0): row scan {}, enumeration {}",
        count_apex_triangle(&apex),
        oracle_count_apex(&apex).unwrap()
    );

    let hull = digipeel::geom::convex_hull(&[p(0, 0), p(5, 0), p(5, 3), p(0, 3)]);
    if let Hull::Polygon(v) = &hull {
        println!(
            "5x3 rectangle with corners {v:?} holds {} lattice points",
            count_hull(&hull)
        );
    }
}
