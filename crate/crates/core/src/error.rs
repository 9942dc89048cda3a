use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("zero divisor: {0} lies on a nodal line and has no inverse")]
    ZeroDivisor(String),

    #[error("amplitude undefined: nu = {nu} is not positive")]
    AmplitudeUndefined { nu: f64 },

    #[error("outside sector: v+ = {v_plus}, v- = {v_minus} (both must be positive)")]
    OutsideSector { v_plus: f64, v_minus: f64 },

    #[error("overflow evaluating {0}")]
    Overflow(&'static str),

    #[error("degenerate coefficients: coefficient {index} in the ratio tail is zero")]
    DegenerateCoefficients { index: usize },

    #[error("direction mismatch: derivative along (1,0) is {along_x}, along (0,1) is {along_delta}")]
    DirectionMismatch { along_x: String, along_delta: String },

    #[error("singular path: {0}")]
    SingularPath(String),

    #[error("root finder did not converge after {iterations} iterations")]
    ConvergenceFailure { iterations: usize },

    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable short name, used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::ZeroDivisor(_) => "ZeroDivisor",
            Error::AmplitudeUndefined { .. } => "AmplitudeUndefined",
            Error::OutsideSector { .. } => "OutsideSector",
            Error::Overflow(_) => "Overflow",
            Error::DegenerateCoefficients { .. } => "DegenerateCoefficients",
            Error::DirectionMismatch { .. } => "DirectionMismatch",
            Error::SingularPath(_) => "SingularPath",
            Error::ConvergenceFailure { .. } => "ConvergenceFailure",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::Parse(_) => "ParseError",
        }
    }
}
