//! Error type shared across the crate.
//!
//! Every fallible operation reports *why* it failed in terms of the algebraic
//! contract that was violated (non-associativity, a functional that is not a
//! character, a subspace that is not an ideal, ...) rather than in terms of
//! the numerics underneath.  Numerical residuals are attached where they help
//! diagnose near-misses.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Error)]
pub enum Error {
    /// The structure-constant table fails the associativity law
    /// `(e_i e_j) e_k = e_i (e_j e_k)` beyond the allowed tolerance.
    #[error("table is not associative: worst triple (e{i}, e{j}, e{k}) has residual {residual:.3e}")]
    NonAssociativeTable {
        i: usize,
        j: usize,
        k: usize,
        residual: f64,
    },

    /// An element, covector, or table has the wrong dimension for the algebra at hand.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The functional `phi` defining an `A_phi` algebra must be nonzero.
    #[error("defining functional is zero")]
    ZeroFunctional,

    /// A Cayley table does not describe a group.
    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),

    /// A covector that was required to be a character fails multiplicativity.
    #[error("functional is not a character: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    CharacterNotVerified { residual: f64, tol: f64 },

    /// A subspace that was required to be a two-sided ideal is not one.
    #[error("subspace is not a two-sided ideal: closure residual {residual:.3e}")]
    NotAnIdeal { residual: f64 },

    /// A subspace that was required to be multiplicatively closed is not.
    #[error("subspace is not closed under multiplication: residual {residual:.3e}")]
    SubspaceNotClosed { residual: f64 },

    /// The operation needs a nonempty character space, but `Delta(A)` is empty.
    #[error("character space is empty")]
    NoCharacters,

    /// The character solver could not reach a verified, complete character set.
    #[error("character solver did not converge: {0}")]
    SolverDidNotConverge(String),

    /// `separating_element` was called with two copies of the same character.
    #[error("characters are equal; no separating element exists")]
    CharactersEqual,

    /// A map that was required to be an algebra homomorphism is not one.
    #[error("map is not an algebra homomorphism: residual {residual:.3e}")]
    NotAHomomorphism { residual: f64 },

    /// A map that was required to be surjective has deficient rank.
    #[error("map is not surjective: rank {rank} < {needed}")]
    NotSurjective { rank: usize, needed: usize },

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A postcondition failed to verify; the computed object is not returned.
    #[error("postcondition violated: {0}")]
    Postcondition(String),

    /// Input text or JSON does not match the documented schema.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An underlying LAPACK routine failed (should not happen on finite input).
    #[error("linear algebra backend error: {0}")]
    Linalg(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidInput(e.to_string())
    }
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Linalg(e.to_string())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
