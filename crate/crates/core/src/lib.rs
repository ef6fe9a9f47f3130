//! Largest digital convex subsets of lattice point sets, exactly.
//!
//! Given a finite set `S` of lattice points, [`peel1::solve_peel`] finds the
//! largest digital convex subset `K ⊆ S` (`conv(K) ∩ Z² = K`), and
//! [`peel2::solve_peel2`] the largest union of two such subsets, measured by
//! the area of the union of their hulls. [`approx`] samples a polygon on a
//! fine lattice to approximate the continuous problem. All arithmetic is
//! exact; areas are carried doubled so lattice polygons stay integral.

pub mod approx;
pub mod cli;
pub mod convexity;
pub mod error;
pub mod geom;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod peel1;
pub mod peel2;
pub mod range;
pub mod render;
pub mod report;
pub mod solution;
pub mod valid;

pub use error::{Error, Result};
pub use geom::{Area2, Hull, LatticePoint, RationalPoint};
pub use range::PointSet;
pub use solution::{Objective, PairKind, PairSolution, Solution};
pub use valid::ValidityContext;
