//! Crate-wide error type for geometric operations.

use thiserror::Error;

use crate::linalg::LinalgError;
use crate::ring::RingError;

/// Errors raised by plane constructions, checks and coordinatization.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeoError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// No coordinate of a vector is invertible.
    #[error("{0} has no invertible coordinate")]
    NotUnimodular(String),
    /// A precondition on apartness, incidence or position does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The relation cannot be decided for this ring and input.
    #[error("undecidable: {0}")]
    Undecidable(String),
    /// The operation enumerates the ring and needs it to be finite.
    #[error("requires finite ring: {0} is infinite")]
    RequiresFinite(String),
    /// A matrix that should act on the plane sends a point outside it.
    #[error("matrix {matrix} sends {point} to {image}, which has no invertible coordinate")]
    NotAnAction { matrix: String, point: String, image: String },
    /// A synthetic construction met a missing intersection or line.
    #[error("construction failed: {0}")]
    Construction(String),
    /// Input data does not describe a valid object.
    #[error("invalid input: {0}")]
    Invalid(String),
}
