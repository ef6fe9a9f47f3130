//! The `digipeel` command line: parse files, run a solver, print JSON or SVG.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 infeasible or empty
//! input, 4 oracle mismatch. Errors are printed to stderr as JSON.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::approx::{approx_peel, approx_peel2, ApproxInstance};
use crate::convexity::is_digital_convex;
use crate::error::{Error, Result};
use crate::geom::{convex_hull, LatticePoint, COORD_BOUND};
use crate::io::{format_points, parse_points, parse_polygon, parse_rational};
use crate::lattice::count_hull;
use crate::oracle::{oracle_island, oracle_peel, oracle_peel2};
use crate::peel1::solve_peel;
use crate::peel2::solve_peel2;
use crate::range::PointSet;
use crate::render::{lattice_xy, rational_f64, Scene};
use crate::report::{to_json, ApproxJson, CheckJson, ErrorJson, SolutionJson};
use crate::solution::Objective;
use crate::valid::ValidityContext;

#[derive(Debug, Parser)]
#[command(
    name = "digipeel",
    version,
    about = "Largest digital convex subsets of lattice point sets"
)]
pub struct Cli {
    /// Worker threads for the solvers (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// area or count (peel and island only).
    #[arg(long, global = true, default_value = "area")]
    pub objective: Objective,
    /// Cross-check against brute force when the instance is small enough.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Include `elapsed_ms` in JSON output.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is the point set digital convex?
    Check { points: PathBuf },
    /// Largest digital convex subset.
    Peel { points: PathBuf },
    /// Largest union of two digital convex subsets.
    Peel2 { points: PathBuf },
    /// Largest subset whose hull avoids the forbidden points.
    Island {
        points: PathBuf,
        #[arg(long)]
        forbidden: PathBuf,
    },
    /// Approximate the largest convex polygon inside a polygon.
    Approx {
        polygon: PathBuf,
        /// Lattice spacing, an integer or p/q.
        #[arg(long)]
        epsilon: String,
        /// Also solve the two-set problem on the same sample.
        #[arg(long)]
        two: bool,
    },
    /// Random instance: n distinct points in [0, box]².
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long = "box")]
        size: i64,
    },
    /// SVG of a point file or of a result JSON.
    Render {
        input: PathBuf,
        /// Result JSON to draw over a point file.
        #[arg(long)]
        result: Option<PathBuf>,
        /// Draw the unit lattice.
        #[arg(long)]
        grid: bool,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(e: ErrorJson) -> Self {
        Self {
            code: e.exit_code,
            stdout: String::new(),
            stderr: to_json(&e),
        }
    }
}

enum Failure {
    Error(Error),
    Mismatch(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

fn read_points(path: &Path) -> Result<PointSet> {
    parse_points(&read(path)?)
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::fail(ErrorJson::new("usage", text.trim_end(), 1)),
            };
        }
    };
    let result = if cli.workers > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => return Outcome::fail(ErrorJson::new("usage", e, 1)),
        }
    } else {
        execute(&cli)
    };
    let text = match result {
        Ok(text) => text,
        Err(Failure::Error(e)) => return Outcome::fail(ErrorJson::from_error(&e)),
        Err(Failure::Mismatch(text, msg)) => {
            let e = ErrorJson::new("oracle_mismatch", msg, 4);
            return Outcome {
                code: 4,
                stdout: text,
                stderr: to_json(&e),
            };
        }
    };
    match &cli.out {
        None => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code: 0,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::fail(ErrorJson::new(
                "output",
                format!("cannot write {}: {e}", path.display()),
                2,
            )),
        },
    }
}

fn elapsed(cli: &Cli, start: Instant) -> Option<u64> {
    cli.timing.then(|| start.elapsed().as_millis() as u64)
}

/// Marks the JSON with the cross-check result, or fails on disagreement.
fn cross_check<T: PartialEq + std::fmt::Debug>(json: &mut SolutionJson, oracle: Result<T>, ours: T) -> Run<()> {
    match oracle {
        Err(Error::SizeGuard { .. }) => json.oracle = Some("skipped".into()),
        Err(e) => return Err(e.into()),
        Ok(expected) if expected == ours => json.oracle = Some("match".into()),
        Ok(expected) => {
            json.oracle = Some("mismatch".into());
            return Err(Failure::Mismatch(
                to_json(json),
                format!("solver {ours:?}, brute force {expected:?}"),
            ));
        }
    }
    Ok(())
}

fn execute(cli: &Cli) -> Run<String> {
    let start = Instant::now();
    match &cli.command {
        Command::Check { points } => {
            let set = read_points(points)?;
            let json = CheckJson {
                problem: "check".into(),
                digital_convex: is_digital_convex(set.points()),
                count: set.len(),
                hull_lattice_points: count_hull(&convex_hull(set.points())),
            };
            Ok(to_json(&json))
        }
        Command::Peel { points } => {
            let set = read_points(points)?;
            let s = solve_peel(&ValidityContext::digital(set.clone()), cli.objective)?;
            let mut json = SolutionJson::single("peel", &s, cli.objective);
            json.elapsed_ms = elapsed(cli, start);
            if cli.oracle {
                let o = oracle_peel(&set, cli.objective).map(|o| o.key(cli.objective));
                cross_check(&mut json, o, s.key(cli.objective))?;
            }
            Ok(to_json(&json))
        }
        Command::Peel2 { points } => {
            let set = read_points(points)?;
            let pair = solve_peel2(&ValidityContext::digital(set.clone()))?;
            let mut json = SolutionJson::pair("peel2", &pair);
            json.elapsed_ms = elapsed(cli, start);
            if cli.oracle {
                let o = oracle_peel2(&set).map(|o| o.union_area2);
                cross_check(&mut json, o, pair.union_area2.clone())?;
            }
            Ok(to_json(&json))
        }
        Command::Island { points, forbidden } => {
            let set = read_points(points)?;
            let forbidden = read_points(forbidden)?;
            let s = solve_peel(&ValidityContext::island(set.clone(), forbidden.clone()), cli.objective)?;
            let mut json = SolutionJson::single("island", &s, cli.objective);
            json.elapsed_ms = elapsed(cli, start);
            if cli.oracle {
                let o = oracle_island(&set, &forbidden, cli.objective).map(|o| o.key(cli.objective));
                cross_check(&mut json, o, s.key(cli.objective))?;
            }
            Ok(to_json(&json))
        }
        Command::Approx { polygon, epsilon, two } => {
            let poly = parse_polygon(&read(polygon)?)?;
            let eps = parse_rational(epsilon).map_err(|msg| Error::Parse { line: 0, msg })?;
            let inst = ApproxInstance::new(poly, eps.clone())?;
            let report = approx_peel(&inst)?;
            let mut json = ApproxJson::new(&report);
            if *two {
                if let Some((pair, _)) = approx_peel2(&inst)? {
                    json = json.with_pair(&pair, &eps);
                }
            }
            json.elapsed_ms = elapsed(cli, start);
            Ok(to_json(&json))
        }
        Command::Gen { seed, n, size } => Ok(generate(*seed, *n, *size)?),
        Command::Render { input, result, grid } => {
            let text = read(input)?;
            let mut scene = if text.trim_start().starts_with('{') {
                scene_from_json(&text)?
            } else {
                Scene::new(lattice_xy(parse_points(&text)?.points()))
            };
            if let Some(path) = result {
                let overlay = scene_from_json(&read(path)?)?;
                scene.hulls = overlay.hulls;
            }
            Ok(scene.with_grid(*grid).to_svg())
        }
    }
}

/// `n` distinct points in `[0, size]²`, listed in lexicographic order.
pub fn generate(seed: u64, n: usize, size: i64) -> Result<String> {
    if !(0..=COORD_BOUND).contains(&size) {
        return Err(Error::CoordinateOutOfBounds { x: size, y: size });
    }
    let side = size as u64 + 1;
    let cells = side
        .checked_mul(side)
        .filter(|&c| c <= usize::MAX as u64)
        .ok_or(Error::SizeGuard {
            size: usize::MAX,
            limit: usize::MAX,
        })?;
    if n as u64 > cells {
        return Err(Error::SizeGuard {
            size: n,
            limit: cells as usize,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<LatticePoint> = sample(&mut rng, cells as usize, n)
        .into_iter()
        .map(|k| LatticePoint::new((k as u64 / side) as i64, (k as u64 % side) as i64))
        .collect();
    let set = PointSet::new(PointSet::new(points)?.sorted())?;
    Ok(format!(
        "# digipeel gen --seed {seed} --n {n} --box {size}\n{}",
        format_points(&set)
    ))
}

fn coordinate(v: &serde_json::Value) -> Option<f64> {
    match v {
        serde_json::Value::Number(n) => n.as_f64(),
        serde_json::Value::String(s) => parse_rational(s).ok().map(|r| rational_f64(&r)),
        _ => None,
    }
}

fn polyline(v: Option<&serde_json::Value>) -> Vec<(f64, f64)> {
    let Some(arr) = v.and_then(|v| v.as_array()) else {
        return vec![];
    };
    arr.iter()
        .filter_map(|p| {
            let xy = p.as_array()?;
            Some((coordinate(xy.first()?)?, coordinate(xy.get(1)?)?))
        })
        .collect()
}

/// Points and hulls from any result JSON this tool writes.
fn scene_from_json(text: &str) -> Result<Scene> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let mut points = polyline(v.get("points"));
    points.extend(polyline(v.get("points2")));
    let mut scene = Scene::new(points);
    for key in ["hull", "hull2"] {
        let h = polyline(v.get(key));
        if !h.is_empty() {
            scene = scene.with_hull(h);
        }
    }
    if let Some(two) = v.get("two") {
        scene.hulls = vec![polyline(two.get("hull")), polyline(two.get("hull2"))];
    }
    Ok(scene)
}
