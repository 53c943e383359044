use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("product of two logarithmic series leaves the representable space")]
    LogTimesLog,
    #[error("division by a series that vanishes up to its truncation")]
    DivisionByZeroSeries,
    #[error("operation requires a nonzero series")]
    ZeroSeries,
    #[error("rational power requires a monic series (leading term 1·q^0)")]
    NotMonic,
    #[error("composition requires a series with positive leading exponent")]
    NonPositiveLead,
    #[error("derivative of h vanishes up to truncation")]
    ZeroDerivative,
    #[error("Möbius map with c ≠ 0 applied to a logarithmic series")]
    LogInDenominator,
    #[error("logarithmic part of a Schwarzian input must be a constant")]
    NonConstantLogPart,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("r = (k+1)/6 must be positive, got {0}")]
    NonPositiveR(String),
    #[error("k = {k} is inconsistent with the solving parameter r = {r}")]
    InconsistentKR { k: String, r: String },
    #[error("order {order} too small: at least {needed} required")]
    OrderTooSmall { order: usize, needed: usize },
    #[error("matrix is not congruent to the identity modulo 5")]
    NotInGamma5,
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("tail bound |q|^terms < tol/10 violated at Im τ = {0}")]
    TailBoundViolated(String),
    #[error("point is not in the upper half-plane")]
    NonUpperHalfPlane,
    #[error("Möbius transformation hits a pole")]
    PoleHit,
    #[error("evaluation points are degenerate (coinciding values)")]
    DegeneratePoints,
    #[error("series known only to q^{known_to}, evaluation needs q^{needed}")]
    InsufficientSeries { known_to: String, needed: String },
    #[error("unknown series name `{0}`")]
    UnknownSeries(String),
    #[error("parameter out of supported range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
