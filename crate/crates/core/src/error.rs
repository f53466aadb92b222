use thiserror::Error;

/// Errors raised by the verification library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("spinor parameter is not normalized: |det B(k) - 1| = {residual:e}")]
    NotNormalized { residual: f64 },

    #[error("matrix is not in the full Lorentz group: metric residual {residual:e}")]
    NotLorentz { residual: f64 },

    #[error("element is not a member of covering group {group}: {reason}")]
    Membership { group: String, reason: String },

    #[error("groups {src} and {dst} are not related by the block-phase similarity witness")]
    UnsupportedPair { src: String, dst: String },

    #[error("spatial spinor is undefined for the zero vector")]
    UndefinedSpinor,

    #[error("point lies on the singular axis (rho = {rho:e})")]
    Singular { rho: f64 },

    #[error("expected a {expected} spinor, got {got}")]
    ModelMismatch { expected: String, got: String },

    #[error("spinor product has a nonvanishing trace part {trace:e}")]
    InconsistentSpinor { trace: f64 },

    #[error("half-space {requested} does not contain b3 = {b3}")]
    HalfSpaceMismatch { requested: String, b3: f64 },

    #[error("coordinates {coords:?} are outside the {domain} domain of the {chart} chart")]
    OutOfDomain { chart: String, domain: String, coords: [f64; 3] },

    #[error("lambda^2 = {lambda_sq} <= 0: evanescent regime has no oscillatory separation")]
    Evanescent { lambda_sq: f64 },

    #[error("truncation must keep between 2 and 150 terms, got {0}")]
    BadTruncation(usize),

    #[error("|xi| = {xi} exceeds the validated radius {radius} of the truncated series")]
    RadiusExceeded { xi: f64, radius: f64 },

    #[error("point ({0}, {1}) is too close to the edge of the evaluation domain for finite differences")]
    BoundaryProximity(f64, f64),

    #[error("quadrature box must be symmetric about the origin: {0}")]
    AsymmetricBox(String),

    #[error("quadrature needs an even, nonzero node count, got {0}")]
    BadNodeCount(usize),

    #[error("parity samples are inconsistent: {0}")]
    InconsistentParity(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
