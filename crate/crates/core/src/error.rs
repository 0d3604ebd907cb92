use thiserror::Error;

/// Every failure the library reports. `code()` gives a stable identifier for
/// machine-readable output.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("invalid transvectant order {0}")]
    InvalidOrder(u32),
    #[error("cross-check mismatch for {quantity}: {detail}")]
    CrossCheckMismatch { quantity: String, detail: String },
    #[error("not a square")]
    NotASquare,
    #[error("irreducible")]
    Irreducible,
    #[error("no split: {0}")]
    NoSplit(String),
    #[error("criterion inapplicable: {0}")]
    CriterionInapplicable(String),
    #[error("zero form")]
    ZeroForm,
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("F is identically zero")]
    FIsIdenticallyZero,
    #[error("zero line")]
    ZeroLine,
    #[error("zero binary cubic")]
    ZeroBinaryCubic,
    #[error("degenerate tangent: {0}")]
    DegenerateTangent(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("form is not singular")]
    NotSingular,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("form is not completely reducible")]
    NotReducible,
    #[error("no builder registered for identity {0}")]
    BuilderFailure(String),
    #[error("factorization residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::InvalidOrder(_) => "InvalidOrder",
            Error::CrossCheckMismatch { .. } => "CrossCheckMismatch",
            Error::NotASquare => "NotASquare",
            Error::Irreducible => "Irreducible",
            Error::NoSplit(_) => "NoSplit",
            Error::CriterionInapplicable(_) => "CriterionInapplicable",
            Error::ZeroForm => "ZeroForm",
            Error::Inapplicable(_) => "Inapplicable",
            Error::FIsIdenticallyZero => "FIsIdenticallyZero",
            Error::ZeroLine => "ZeroLine",
            Error::ZeroBinaryCubic => "ZeroBinaryCubic",
            Error::DegenerateTangent(_) => "DegenerateTangent",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotSingular => "NotSingular",
            Error::NotApplicable(_) => "NotApplicable",
            Error::NotReducible => "NotReducible",
            Error::BuilderFailure(_) => "BuilderFailure",
            Error::ResidualTooLarge { .. } => "ResidualTooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
