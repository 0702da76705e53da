use thiserror::Error;

/// Errors raised by the algebra engine and the certified pipelines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("invalid tower: {0}")]
    InvalidTower(String),

    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),

    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("boundary undefined: f(1) = {0} is not a unit of the base ring")]
    BoundaryUndefined(String),

    #[error("improper ideal: the ideal is the unit ideal")]
    ImproperIdeal,

    #[error("level mismatch: {0}")]
    LevelMismatch(String),

    #[error("element not in ideal: {0}")]
    NotInIdeal(String),

    #[error("generators do not surject modulo the square: witness {0}")]
    NotSurjectiveModSquare(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("incompatible boundary data: {0}")]
    IncompatibleBoundary(String),

    #[error("not an Euler class datum: height {height} differs from generator count {p}")]
    NotEulerDatum { height: usize, p: usize },

    #[error("vector is not in the module: {0}")]
    NotInModule(String),

    #[error("localized maps disagree on the overlap: {0}")]
    LocalizationMismatch(String),

    #[error("elements are not comaximal: {0}")]
    NotComaximal(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("search budget exhausted at stage `{stage}`: {detail}")]
    BudgetExceeded { stage: String, detail: String },

    #[error("certificate verification failed: {0}")]
    CertificateInvalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the batch front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) | Error::Json(_) => 1,
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        }
    }
}
