//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by root-system construction, straightening, and the
/// canonical-basis solver.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Unrecognized or inadmissible Cartan type, e.g. "E9" or "B1".
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    /// A weight vector whose length does not match the rank of the root system.
    #[error("rank mismatch: weight has {got} coordinates, root system has rank {expected}")]
    RankMismatch { got: usize, expected: usize },

    /// An operation that requires a dominant weight received a non-dominant one.
    #[error("weight {0} is not dominant")]
    NotDominant(String),

    /// A simple-reflection index outside 1..=rank.
    #[error("reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// The level must satisfy ell >= 1.
    #[error("level parameter must be >= 1, got {0}")]
    InvalidLevel(i64),

    /// Precondition of a partial operation failed (message explains which).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The rewrite-step budget ran out while straightening.
    #[error("rewrite fuel exhausted after {0} steps")]
    FuelExhausted(u64),

    /// A monomial map that was required to be Weyl-invariant is not.
    #[error("monomial map is not Weyl-invariant at weight {0}")]
    NotInvariant(String),

    /// The triangular solve met a right-hand side that is not bar-antisymmetric
    /// with zero constant term; this contradicts bar triangularity.
    #[error("canonical-basis solve inconsistent at weight {0}: {1}")]
    Inconsistent(String, String),

    /// A ket landing on a reflection wall where the requested object vanishes.
    #[error("weight {0} lies on a wall; the requested ket is zero")]
    WallWeight(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
