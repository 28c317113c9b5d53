use thiserror::Error;

/// Errors produced by graph construction, embedding evaluation, bounds and oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the admissible range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid anti-matching: {0}")]
    InvalidAntiMatching(String),

    #[error("hypercube dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("order {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("search guard exceeded: {0}")]
    GuardExceeded(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: u64, min: u64, max: u64) -> Result<()> {
    if value < min || value > max {
        return Err(Error::OutOfRange {
            what,
            value,
            min,
            max,
        });
    }
    Ok(())
}
