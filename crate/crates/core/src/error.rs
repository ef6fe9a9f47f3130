use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate polygon")]
    DegeneratePolygon,
    #[error("polygon is not strictly convex and counterclockwise")]
    NotConvex,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("{0}")]
    Io(String),
    #[error("degenerate query: triangle vertices are collinear")]
    DegenerateQuery,
    #[error("point {0} is not in the indexed set")]
    UnknownPoint(String),
    #[error("empty input")]
    EmptyInput,
    #[error("duplicate point ({x}, {y})")]
    DuplicatePoint { x: i64, y: i64 },
    #[error("coordinate ({x}, {y}) exceeds the bound 2^30")]
    CoordinateOutOfBounds { x: i64, y: i64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("edges do not properly cross: not rooted")]
    NotRooted,
    #[error("no admissible pair of fans for this root")]
    Infeasible,
    #[error("size guard exceeded: {size} > {limit}")]
    SizeGuard { size: usize, limit: usize },
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
}
