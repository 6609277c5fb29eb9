//! Error type shared across the crate.

use thiserror::Error;

use crate::validate::ValidationReport;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not an orthoalgebra:\n{0}")]
    NotAnOrthoAlgebra(ValidationReport),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("subalgebra is not closed: {0}")]
    NotClosed(String),
    #[error("element {0} is not basic")]
    NotBasic(usize),
    #[error("poset ideal too large: would need a partition lattice on {0} > 6 points")]
    TooLarge(usize),
    #[error("orthoalgebra has only small blocks")]
    OnlySmallBlocks,
    #[error("orthoalgebra is trivial (at most 2 elements)")]
    Trivial,
    #[error("orthodomain does not have enough directions")]
    NotEnoughDirections,
    #[error("orthoalgebra is not proper")]
    NotProper,
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("morphism is not proper")]
    NotProperMorphism,
    #[error("{0}")]
    Mismatch(String),
}
