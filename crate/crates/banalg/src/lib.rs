//! Character spaces and point-amenability certificates for finite-dimensional
//! complex associative algebras.
//!
//! The crate decides, with explicit witnesses, the pointwise amenability
//! notions attached to a character `phi` of an algebra `A`:
//!
//! * Delta-weak identities: a single `u` with `psi(u) = 1` for every
//!   character `psi` of `A`;
//! * Delta-weak `phi`-amenability: a functional certificate that `ker(phi)`
//!   has an identity-like element against all other characters;
//! * `phi`-amenability in the two one-sided conventions, and its kernel
//!   reformulation (a right identity of `ker(phi)`).
//!
//! In finite dimensions every "approximate / net" notion collapses to a
//! single element witness, so each decision is a finite feasibility problem:
//! we solve a linear (or, for the character space itself, quadratic) system
//! and verify the witness against the defining equations.  Answers are
//! *decisions with evidence*: a `yes` carries a checked witness, a `no`
//! carries the residual of the best least-squares candidate.
//!
//! Entry points: [`algebra::Algebra`] for constructions,
//! [`characters::character_space`] for `Delta(A)`, the [`amenability`]
//! module for the decision procedures, and [`verify`] for the bundled
//! fixture corpus and cross-checks.

pub mod algebra;
pub mod amenability;
pub mod characters;
pub mod error;
pub mod json;
pub mod linalg;
pub mod tol;
pub mod verify;

pub use algebra::{Algebra, Element, LinearMap, Side, SubspaceBasis};
pub use amenability::{
    combine_identities, delta_weak_identity, delta_weak_phi_amenable,
    extend_character_from_ideal, extend_witness_check, kernel_basis, phi_amenable,
    right_identity_in_kernel, Convention, DecisionReport, ExtensionReport,
};
pub use characters::{character_space, Character, CharacterSet, PhiSpec};
pub use error::{Error, Result};
