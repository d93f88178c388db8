use thiserror::Error;

/// Errors produced across the library.
///
/// Each variant maps to one stable CLI exit code; see [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("numeric evaluation overflowed at beta = {beta}")]
    EvaluationOverflow { beta: f64 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("membership enumeration exceeded the cap of {cap} candidate products")]
    BoundExceeded { cap: usize },

    #[error("matrix is not in O(n,1): (A^T J A - J)[{row}][{col}] = {residual}")]
    NotLorentz {
        row: usize,
        col: usize,
        residual: String,
    },

    #[error("matrix is not an involution")]
    NotInvolutive,

    #[error("matrix is central (+I or -I) and has no reflection normal form")]
    Central,

    #[error("not a block matrix of rotation and boost: {0}")]
    NotBlock(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("boost parameter is zero")]
    ZeroBoost,

    #[error("beta must be nonzero")]
    ZeroBeta,

    #[error("band limit {requested} exceeds the cap {cap}")]
    BandLimitTooLarge { requested: u32, cap: u32 },

    #[error("value is not exactly representable: {0}")]
    NotExact(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("internal consistency check failed: {0}")]
    Certificate(String),
}

impl Error {
    /// Process exit code for this error. The table is part of the public
    /// interface and must not be renumbered.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::NotLorentz { .. } => 3,
            Error::CapExceeded { .. } => 4,
            Error::ZeroBoost => 5,
            Error::Shape(_) => 6,
            Error::BoundExceeded { .. } => 7,
            Error::ZeroBeta => 8,
            Error::BandLimitTooLarge { .. } => 9,
            Error::NotAUnit(_) | Error::EvaluationOverflow { .. } | Error::NotExact(_) => 10,
            Error::NotInvolutive | Error::Central | Error::NotBlock(_) => 11,
            Error::Unsupported(_) => 12,
            Error::Certificate(_) => 13,
        }
    }

    /// Short machine-readable name used in CLI error payloads.
    pub fn code_name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::NotAUnit(_) => "NotAUnit",
            Error::EvaluationOverflow { .. } => "EvaluationOverflow",
            Error::Shape(_) => "ShapeError",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NotLorentz { .. } => "NotLorentz",
            Error::NotInvolutive => "NotInvolutive",
            Error::Central => "Central",
            Error::NotBlock(_) => "NotBlock",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::ZeroBoost => "ZeroBoost",
            Error::ZeroBeta => "ZeroBeta",
            Error::BandLimitTooLarge { .. } => "BandLimitTooLarge",
            Error::NotExact(_) => "NotExact",
            Error::Unsupported(_) => "Unsupported",
            Error::Certificate(_) => "CertificateFailed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
