use thiserror::Error;

use crate::lattice::{PlanePoint, SpectralPoint};

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {0} is not supported, type B needs rank at least 2")]
    InvalidRank(u32),

    #[error("node {node} is outside 1..={rank}")]
    NodeOutOfRange { node: u32, rank: u32 },

    #[error("{0} is not in X")]
    NotInX(SpectralPoint),

    #[error("{0} is not the image of a point of W")]
    NotInImage(PlanePoint),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("monomial is not dominant: {0}")]
    NotDominant(String),

    #[error("{second} is not in extended snake position to {first}")]
    NotExtendedSnake { first: SpectralPoint, second: SpectralPoint },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("lowering precondition fails at {0}")]
    CannotLower(SpectralPoint),

    #[error("invalid string: {0}")]
    InvalidString(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("diagram is not generic")]
    NotGeneric,

    #[error("diagram is already generic")]
    AlreadyGeneric,

    #[error("inconsistent letter data: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
