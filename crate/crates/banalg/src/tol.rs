//! Tolerance policy.
//!
//! All decisions in this crate ("is this a character", "does this witness
//! exist") reduce to comparing a residual against a threshold.  The constants
//! here fix those thresholds once, by role, so that every module applies the
//! same policy.  Rationale per constant:
//!
//! * Verification thresholds scale with the size of the structure constants,
//!   so an algebra with large entries is not penalised: the effective bound is
//!   `tol * (1 + max |c_ijk|)`, see [`scaled`].
//! * Rank cutoffs for SVD-based feasibility and nullspace computations are
//!   relative to the largest singular value.
//! * Character deduplication uses a much coarser gate than verification, so
//!   two polished copies of one true character always merge.

/// Default decision tolerance, user-overridable (`--tol`).
pub const DEFAULT_TOL: f64 = 1e-8;

/// Relative associativity tolerance for structure-constant tables.
pub const ASSOC_REL_TOL: f64 = 1e-10;

/// Relative SVD cutoff: singular values below `RANK_REL_TOL * sigma_max`
/// are treated as zero for rank, nullspace, and least-squares pseudoinverses.
pub const RANK_REL_TOL: f64 = 1e-10;

/// Two characters within this distance in the sup norm are the same character.
pub const DEDUPE_TOL: f64 = 1e-6;

/// Residual bound for ideal / multiplicative-closure membership checks.
pub const IDEAL_CLOSURE_TOL: f64 = 1e-9;

/// Residual bound for algebra-homomorphism checks on basis pairs.
pub const HOMOMORPHISM_TOL: f64 = 1e-9;

/// Orthonormal bases must have a Gram matrix within this of the identity.
pub const GRAM_TOL: f64 = 1e-10;

/// A verified character set must have full row rank at this SVD tolerance.
pub const CHARSET_RANK_TOL: f64 = 1e-8;

/// Residual bound for the algebraic postconditions of identity combination.
pub const COMBINE_POST_TOL: f64 = 1e-9;

/// Sup-norm matching tolerance between solver output and the independent oracle.
pub const ORACLE_MATCH_TOL: f64 = 1e-6;

/// Scale a base tolerance by the magnitude of the data it is applied to.
///
/// `scale` is typically `max |c_ijk|` for an algebra, or the norm of an
/// input element; the returned bound is `tol * (1 + scale)`.
pub fn scaled(tol: f64, scale: f64) -> f64 {
    tol * (1.0 + scale)
}
