use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    #[error("matrix is not invertible from the supplied quadratic relation")]
    NotInvertible,

    #[error("relation {relation} fails at {site}")]
    RelationFailure { relation: String, site: String },

    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: String },

    #[error("crossing calibration failed: {0}")]
    CalibrationFailure(String),

    #[error("side condition failed: {0}")]
    ConditionFailure(String),

    #[error("constructions disagree: {0}")]
    InternalMismatch(String),

    #[error("murphy element mismatch: {0}")]
    MurphyMismatch(String),

    #[error("not in the expected span: {0}")]
    SpanFailure(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
