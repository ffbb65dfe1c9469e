//! bcckit: exact combinatorics for broken circuit complexes of ordered
//! matroids.
//!
//! The crate builds matroids from uniform, graphic, linear and circuit data,
//! forms broken circuit complexes under element orderings, computes f- and
//! h-vectors three independent ways, decides complete intersection and
//! Gorenstein properties of the associated face rings, decomposes matroids
//! into parallel connections of uniform blocks, synthesizes orders whose
//! minimal broken circuits are pairwise disjoint, and extracts Orlik-Terao
//! circuit relations from arrangement matrices.  Everything is exact integer
//! or rational arithmetic; there is no floating point in the crate.

#![forbid(unsafe_code)]

pub mod classify;
pub mod complex;
pub mod constructions;
pub mod corpus;
pub mod elements;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod matroid;
pub mod orlik_terao;
pub mod ratmat;
pub mod suite;
pub(crate) mod util;

pub use elements::{ElemSet, Element, MAX_GROUND};
pub use error::Error;
pub use matroid::{Matroid, MatroidJson};
