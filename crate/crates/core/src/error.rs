use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),

    #[error("parts are not strictly decreasing: {0:?}")]
    NotStrictlyDecreasing(Vec<u32>),

    #[error("padded partition has no rows")]
    EmptyPadded,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("size mismatch: |{0}| != |{1}|")]
    SizeMismatch(String, String),

    #[error("truncation caps differ: {0:?} vs {1:?}")]
    CapMismatch((u32, u32, u32), (u32, u32, u32)),

    #[error("series has zero constant term and is not invertible")]
    NotInvertible,

    #[error("pair is outside the involution domain: {0}")]
    OutsideDomain(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
