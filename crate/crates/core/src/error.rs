use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("expected a homogeneous symmetric function, found degrees {0:?}")]
    NonHomogeneous(Vec<usize>),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("parameters (e={e}, d={d}) are outside the principal and complementary series")]
    NonAdmissible { e: String, d: String },
    #[error("the empty diagram has no image in the Thoma simplex")]
    EmptyDiagram,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A failed exact identity, with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub witness: String,
}

impl Violation {
    pub fn new(identity: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation {
            identity: identity.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: {}", self.identity, self.witness)
    }
}

impl std::error::Error for Violation {}

/// Outcome of an exact verification.
pub type Verdict = std::result::Result<(), Violation>;
