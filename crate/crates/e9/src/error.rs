//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse weight label `{input}`: {reason}")]
    ParseLabel { input: String, reason: String },

    #[error("cannot parse rational `{input}`: {reason}")]
    ParseRational { input: String, reason: String },

    #[error("cannot parse vector `{input}`: {reason}")]
    ParseVector { input: String, reason: String },

    #[error("not a dominant integral weight: {0}")]
    NotDominant(String),

    #[error("delta residue of `{0}` is not a nonpositive half-integer multiple of the null root")]
    DeltaResidue(String),

    #[error("label `{0}` is not initial (its depth differs from its delta shift)")]
    NotInitial(String),

    #[error("k-value of `{0}` is not an integer")]
    NonIntegerK(String),

    #[error("cache file `{path}`: {reason}")]
    Cache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
