use thiserror::Error;

use crate::rational::ParseRationalError;

/// Errors raised by the library.
///
/// Display strings are stable; the CLI and the C ABI surface them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("space mismatch")]
    SpaceMismatch,
    #[error("point outside its space: {0}")]
    PointOutOfSpace(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("empty compactum")]
    EmptyCompactum,
    #[error("not normal")]
    NotNormal,
    #[error("cuts not decreasing")]
    CutsNotDecreasing,
    #[error("invalid levels: {0}")]
    InvalidLevels(String),
    #[error("level {0} outside [0,1]")]
    LevelOutOfRange(String),
    #[error("invalid time warp: {0}")]
    InvalidWarp(String),
    #[error("empty interval")]
    EmptyInterval,
    #[error("map does not expose a mixing oracle")]
    NoMixingOracle,
    #[error("certificate requires an isometry")]
    NotIsometry,
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("invalid uniformity: {0}")]
    InvalidUniformity(String),
    #[error("relational entourage requires a finite uniformity on the same space")]
    RelationalUnsupported,
    #[error("construction failed post-check: {0}")]
    PostCheckFailed(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short stable identifier, for machine-readable error lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SpaceMismatch => "space-mismatch",
            Error::PointOutOfSpace(_) => "point-out-of-space",
            Error::InvalidSpace(_) => "invalid-space",
            Error::InvalidMap(_) => "invalid-map",
            Error::EmptyCompactum => "empty-compactum",
            Error::NotNormal => "not-normal",
            Error::CutsNotDecreasing => "cuts-not-decreasing",
            Error::InvalidLevels(_) => "invalid-levels",
            Error::LevelOutOfRange(_) => "level-out-of-range",
            Error::InvalidWarp(_) => "invalid-warp",
            Error::EmptyInterval => "empty-interval",
            Error::NoMixingOracle => "no-mixing-oracle",
            Error::NotIsometry => "not-isometry",
            Error::NonPositiveEpsilon => "non-positive-epsilon",
            Error::InvalidUniformity(_) => "invalid-uniformity",
            Error::RelationalUnsupported => "relational-unsupported",
            Error::PostCheckFailed(_) => "post-check-failed",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Parse(_) => "parse",
        }
    }
}

impl From<ParseRationalError> for Error {
    fn from(e: ParseRationalError) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
