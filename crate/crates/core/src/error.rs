use thiserror::Error;

/// Contract violations raised by the geometry and group layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("height coordinate must be positive and finite, got {0}")]
    InvalidHeight(f64),
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("tangent vectors are based at different points")]
    BaseMismatch,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("radius must be non-negative, got {0}")]
    NegativeRadius(f64),
    #[error("operator is singular on the polar axis (theta = {theta}) for n = {n}")]
    PolarAxis { n: usize, theta: f64 },
    #[error("radius must be positive for this operator, got {0}")]
    AtPole(f64),
}

/// Failures of the adaptive quadrature driver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("integrand returned a non-finite value at x = {0}")]
    NonFinite(f64),
    #[error("subdivision limit reached; estimated error {error:e} for value {value:e}")]
    SubdivisionLimit { value: f64, error: f64 },
}

/// Failures of the radial and two-dimensional elliptic solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("no solution: flux law saturates at radius {radius}")]
    NoSolution { radius: f64 },
    #[error("not converged after {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Malformed or unreadable campaign configuration.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid config json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error("unknown campaign {0:?}")]
    UnknownCampaign(String),
}
