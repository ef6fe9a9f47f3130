//! Drawing an instance and its two optimal subsets as SVG.
//!
//! Run with `cargo run --release --example render_svg > pair.svg`.

use digipeel::cli::generate;
use digipeel::io::parse_points;
use digipeel::peel2::solve_peel2;
use digipeel::render::{lattice_xy, Scene};
use digipeel::ValidityContext;

fn main() {
    let set = parse_points(&generate(2, 18, 8).unwrap()).unwrap();
    let pair = solve_peel2(&ValidityContext::digital(set.clone())).unwrap();
    let svg = Scene::new(lattice_xy(set.points()))
        .with_hull(lattice_xy(&pair.first.hull.vertices()))
        .with_hull(lattice_xy(&pair.second.hull.vertices()))
        .with_grid(true)
        .to_svg();
    eprintln!("union area {} ({:?})", pair.union_area2, pair.kind);
    print!("{svg}");
}
