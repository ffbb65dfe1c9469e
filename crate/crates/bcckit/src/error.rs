use thiserror::Error;

use crate::elements::{ElemSet, Element};

/// Everything that can go wrong when building or querying a matroid object.
#[derive(Debug, Error)]
pub enum Error {
    #[error("element {0} is not in the ground set")]
    UnknownElement(Element),
    #[error("ground set of size {0} exceeds the cap of 20")]
    CapExceeded(usize),
    #[error("element id {0} is too large for the set representation")]
    IdTooLarge(u32),
    #[error("uniform matroid needs m <= n, got m={m}, n={n}")]
    InvalidUniform { m: usize, n: usize },
    #[error("invalid circuit family: {0}")]
    InvalidCircuits(String),
    #[error("ground sets must be disjoint")]
    GroundsNotDisjoint,
    #[error("invalid connection: {0}")]
    InvalidConnection(String),
    #[error("matroid has a loop")]
    LoopPresent,
    #[error("matroid is not simple")]
    NotSimple,
    #[error("matroid is not connected")]
    NotConnected,
    #[error("matroid has rank zero")]
    RankZero,
    #[error("element {0} is a coloop, so the deletion-contraction identity does not apply")]
    ColoopPivot(Element),
    #[error("{0} is not a face of the complex")]
    NotAFace(ElemSet),
    #[error("the void complex has no f-vector or h-vector")]
    VoidComplex,
    #[error("h-vector is empty or all zero")]
    EmptyHVector,
    #[error("vector lengths do not match: {0}")]
    LengthMismatch(String),
    #[error("{0} is not a circuit of the matroid")]
    NotACircuit(ElemSet),
    #[error("column {0} of the arrangement matrix is zero")]
    ZeroColumn(usize),
    #[error("arrangement matrix is not essential: rank {rank} with {rows} rows")]
    NotEssential { rank: usize, rows: usize },
    #[error("complex has dimension {0}, expected at most 1")]
    DimensionTooHigh(i32),
    #[error("shape criterion needs Cohen-Macaulayness granted by the caller")]
    CmNotGranted,
    #[error("ordering is not a permutation of the ground set")]
    BadOrdering,
    #[error("exhaustive order sweep only runs on ground sets of size at most {limit}, got {size}")]
    SweepTooLarge { size: usize, limit: usize },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
