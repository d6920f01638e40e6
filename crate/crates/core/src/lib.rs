//! Fence posets, their lattices of order ideals, rank generating functions,
//! and chain decompositions.
//!
//! A *fence* is a poset whose Hasse diagram is a path with ascending and
//! descending runs prescribed by a composition.  The order ideals of a fence
//! form a distributive lattice whose rank sequence this crate computes three
//! independent ways (brute-force enumeration, a toggle recursion, and an
//! explicit subset-sum formula) and decomposes into saturated chains by
//! several constructions (grid decomposition for two segments, core grouping
//! for three segments and for d-divided posets, lexicographic greedy chains,
//! and lifting along a long segment).  A verification harness sweeps
//! composition families and reports unimodality, interlacing shape, and
//! centered-decomposition results per instance.

pub mod chains;
pub mod composition;
pub mod conjecture;
pub mod error;
pub mod export;
pub mod lattice;
pub mod polynomial;
pub mod poset;

pub use composition::Composition;
pub use error::Error;
pub use lattice::IdealLattice;
pub use polynomial::RankPolynomial;
pub use poset::{Ideal, LabeledPoset, Word};

/// Widest poset the dense bit representation supports.
pub const MASK_LIMIT: usize = 63;

/// Default cap on the element count for ideal enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
