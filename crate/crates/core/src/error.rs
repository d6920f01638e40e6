//! Error type shared by the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition has no parts")]
    EmptyComposition,

    #[error("part {index} is zero; only a trailing zero is permitted")]
    ZeroPart { index: usize },

    #[error("cannot parse composition entry {position} ({token:?})")]
    ParseComposition { position: usize, token: String },

    #[error("poset has {n} elements, enumeration limit is {limit}")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("invalid cover relation ({lower}, {upper}) on {n} elements")]
    InvalidCover {
        lower: usize,
        upper: usize,
        n: usize,
    },

    #[error("cover relations contain a cycle")]
    CyclicCovers,

    #[error("cover ({lower}, {upper}) is implied by other covers")]
    RedundantCover { lower: usize, upper: usize },

    #[error("labels must be a bijection onto 1..={n}")]
    InvalidLabels { n: usize },

    #[error("d-divided poset requires n >= 1 and d >= 1, got n={n}, d={d}")]
    InvalidDDivided { n: usize, d: usize },

    #[error("segment lengths must be positive, got ({a}, {b}, {c})")]
    InvalidThreeSegment { a: u32, b: u32, c: u32 },

    #[error("subset is not an order ideal")]
    NotAnIdeal,

    #[error(
        "core construction needs the first segment at least as long as the third (a={a}, c={c})"
    )]
    FirstSegmentShorter { a: u32, c: u32 },

    #[error("explicit rank formula needs an odd segment count, got {s}")]
    EvenSegmentCount { s: usize },

    #[error("zero polynomial has no maxima indices")]
    ZeroPolynomial,

    #[error("maxima-addition precondition failed: {reason}")]
    MiPrecondition { reason: String },

    #[error("segment index {t} out of range for {s} segments")]
    SegmentIndex { t: usize, s: usize },

    #[error("segment {t} must be strictly longer than the rest combined")]
    DominanceRequired { t: usize },

    #[error("input chain decomposition is not a nested CD: {reason}")]
    NotAnNcd { reason: String },

    #[error("construction produced an invalid decomposition: {reason}")]
    ConstructionFailed { reason: String },

    #[error("lattice too large for exhaustive search ({size} ideals, cap {cap})")]
    SearchTooLarge { size: usize, cap: usize },

    #[error("labeling scope needs at most {cap} elements, poset has {n}")]
    ScopeTooLarge { n: usize, cap: usize },
}
