//! JSON shapes written by the command-line tool. Exact areas are strings
//! (`"p/q"` or an integer) so nothing is lost to floating point.

use serde::{Deserialize, Serialize};

use crate::approx::ApproxReport;
use crate::error::Error;
use crate::geom::{LatticePoint, Rational, RationalPoint};
use crate::solution::{Objective, PairKind, PairSolution, Solution};

fn xy(points: &[LatticePoint]) -> Vec<[i64; 2]> {
    points.iter().map(|p| [p.x, p.y]).collect()
}

fn xy_rational(points: &[RationalPoint]) -> Vec<[String; 2]> {
    points.iter().map(|p| [p.x.to_string(), p.y.to_string()]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionJson {
    pub problem: String,
    pub twice_area: String,
    pub count: usize,
    pub hull: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hull2: Option<Vec<[i64; 2]>>,
    pub points: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points2: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub objective: Option<Objective>,
    /// `"match"` or `"skipped"` when a cross-check was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SolutionJson {
    pub fn single(problem: &str, s: &Solution, objective: Objective) -> Self {
        Self {
            problem: problem.to_string(),
            twice_area: s.area2.to_string(),
            count: s.count,
            hull: xy(&s.hull.vertices()),
            hull2: None,
            points: xy(&s.points),
            points2: None,
            kind: None,
            objective: Some(objective),
            oracle: None,
            elapsed_ms: None,
        }
    }

    pub fn pair(problem: &str, p: &PairSolution) -> Self {
        let kind = match p.kind {
            PairKind::Disjoint => "disjoint",
            PairKind::Intersecting => "intersecting",
            PairKind::Single => "single",
        };
        Self {
            problem: problem.to_string(),
            twice_area: p.union_area2.to_string(),
            count: p.count(),
            hull: xy(&p.first.hull.vertices()),
            hull2: Some(xy(&p.second.hull.vertices())),
            points: xy(&p.first.points),
            points2: Some(xy(&p.second.points)),
            kind: Some(kind.to_string()),
            objective: None,
            oracle: None,
            elapsed_ms: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub problem: String,
    pub digital_convex: bool,
    pub count: usize,
    /// Lattice points in the closed hull of the input.
    pub hull_lattice_points: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaTermsJson {
    pub erosion: String,
    pub sampling: String,
    pub overshoot: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairApproxJson {
    pub twice_area: String,
    pub hull: Vec<[String; 2]>,
    pub hull2: Vec<[String; 2]>,
}

/// Approximation results; coordinates are in the polygon's own units.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxJson {
    pub problem: String,
    pub epsilon: String,
    pub sample_size: usize,
    pub twice_area: String,
    pub digital_area: String,
    pub count: usize,
    pub hull: Vec<[String; 2]>,
    pub diameter_squared: String,
    pub bound_rhs: String,
    pub bound_additive: String,
    pub lemma_terms: LemmaTermsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two: Option<PairApproxJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub fn scale_back(points: &[LatticePoint], epsilon: &Rational) -> Vec<RationalPoint> {
    let r = |v: i64| Rational::from_integer(v.into()) * epsilon;
    points.iter().map(|p| RationalPoint::new(r(p.x), r(p.y))).collect()
}

impl ApproxJson {
    pub fn new(r: &ApproxReport) -> Self {
        Self {
            problem: "approx".to_string(),
            epsilon: r.epsilon.to_string(),
            sample_size: r.sample_size,
            twice_area: r.digital_area2.to_string(),
            digital_area: r.digital_area().to_string(),
            count: r.solution.count,
            hull: xy_rational(&r.hull_original()),
            diameter_squared: r.diameter_squared.to_string(),
            bound_rhs: r.bound_rhs.to_string(),
            bound_additive: r.bound_additive.to_string(),
            lemma_terms: LemmaTermsJson {
                erosion: r.lemma_terms.erosion.to_string(),
                sampling: r.lemma_terms.sampling.to_string(),
                overshoot: r.lemma_terms.overshoot.to_string(),
            },
            two: None,
            elapsed_ms: None,
        }
    }

    pub fn with_pair(mut self, pair: &PairSolution, epsilon: &Rational) -> Self {
        self.two = Some(PairApproxJson {
            twice_area: (&pair.union_area2.0 * epsilon * epsilon).to_string(),
            hull: xy_rational(&scale_back(&pair.first.hull.vertices(), epsilon)),
            hull2: xy_rational(&scale_back(&pair.second.hull.vertices(), epsilon)),
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub error: String,
    pub message: String,
    pub exit_code: i32,
}

impl ErrorJson {
    pub fn new(kind: &str, message: impl ToString, exit_code: i32) -> Self {
        Self {
            error: kind.to_string(),
            message: message.to_string(),
            exit_code,
        }
    }

    pub fn from_error(e: &Error) -> Self {
        let (kind, code) = match e {
            Error::EmptyInput => ("empty", 3),
            Error::Infeasible => ("infeasible", 3),
            Error::SizeGuard { .. } => ("size_guard", 2),
            Error::Parse { .. } => ("parse", 2),
            Error::NonPositiveEpsilon => ("epsilon", 2),
            Error::Io(_) => ("io", 2),
            _ => ("input", 2),
        };
        Self::new(kind, e, code)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_shape() {
        let s = Solution::from_points(vec![
            LatticePoint::new(0, 0),
            LatticePoint::new(1, 0),
            LatticePoint::new(0, 1),
        ]);
        let j = SolutionJson::single("peel", &s, Objective::Area);
        let text = to_json(&j);
        assert!(text.contains("\"twice_area\": \"1\""));
        assert!(!text.contains("hull2"));
        assert!(!text.contains("elapsed_ms"));
        let back: SolutionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
    }

    #[test]
    fn pair_shape() {
        let a = Solution::from_points(vec![
            LatticePoint::new(0, 0),
            LatticePoint::new(1, 0),
            LatticePoint::new(0, 1),
        ]);
        let j = SolutionJson::pair("peel2", &PairSolution::single(a));
        assert_eq!(j.kind.as_deref(), Some("single"));
        assert_eq!(j.hull2.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn error_codes() {
        assert_eq!(ErrorJson::from_error(&Error::EmptyInput).exit_code, 3);
        assert_eq!(
            ErrorJson::from_error(&Error::Parse {
                line: 2,
                msg: "x".into()
            })
            .exit_code,
            2
        );
    }
}
