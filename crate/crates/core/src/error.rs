use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term must be +1 or -1")]
    NonUnitConstant,

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, value: usize, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value: i64::try_from(value).unwrap_or(i64::MAX),
            reason,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
