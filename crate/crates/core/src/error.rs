use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..{degree}: {detail}")]
    NotABijection { degree: usize, detail: String },

    #[error("{what} = {value} is outside the supported range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid involution class: n = {n}, i = {i}, j = {j}")]
    InvalidClass { n: usize, i: usize, j: usize },

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A structural invariant that must hold by construction was violated.
    #[error("integrity violation [{invariant}]: {detail}")]
    Integrity {
        invariant: &'static str,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn integrity(invariant: &'static str, detail: impl Into<String>) -> Error {
    Error::Integrity {
        invariant,
        detail: detail.into(),
    }
}

pub(crate) fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        Err(Error::OutOfRange {
            what,
            value,
            min,
            max,
        })
    } else {
        Ok(())
    }
}
