use thiserror::Error;

use crate::series::SeriesId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index k={k} is below the first defined term (k >= {start}) of {id:?}")]
    IndexBelowStart { id: SeriesId, k: i64, start: u32 },

    #[error("zero base with negative exponent")]
    ZeroToNegativePower,

    #[error("order {given} is below the minimum {min} for {context}")]
    OrderTooSmall {
        context: &'static str,
        given: u32,
        min: u32,
    },

    #[error("unsupported oracle expression")]
    UnsupportedExpression,

    #[error("oracle degree {0} exceeds the practical cap of 60")]
    DegreeTooLarge(u32),

    #[error("hypothesis check failed for {id:?} at k={k}: {detail}")]
    HypothesisFailed {
        id: SeriesId,
        k: u32,
        detail: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
