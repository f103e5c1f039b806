use crate::gf2k::Degree;

/// Errors raised by the arithmetic and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("operands live in different fields ({0} and {1})")]
    DegreeMismatch(Degree, Degree),
    #[error("unsupported field degree {0} (expected one of 1, 2, 4, 6)")]
    UnsupportedDegree(u32),
    #[error("no embedding of {from} into {to}")]
    NoEmbedding { from: Degree, to: Degree },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("quotient map has a pole at {0}")]
    Pole(String),
    #[error("not a Hurwitz quaternion: {0}")]
    NotHurwitz(String),
    #[error("unknown curve name {0:?}")]
    UnknownCurve(String),
    #[error("model inconsistency: {0}")]
    Model(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}
