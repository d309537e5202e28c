use thiserror::Error;

use crate::criteria::CriteriaError;
use crate::curve::CurveError;
use crate::linalg::LinalgError;
use crate::p1::P1Error;
use crate::poly::{ParseError, PolyError};

/// Any failure surfaced by the public API.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    P1(#[from] P1Error),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Whether the error is the caller's fault rather than a failed check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Inconsistent(_) | Error::Curve(CurveError::InternalInconsistency { .. }))
    }
}
