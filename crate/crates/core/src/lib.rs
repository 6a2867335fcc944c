//! Exact-arithmetic computer algebra for crossed modules of Lie algebras.
//!
//! The library constructs and validates finite-dimensional crossed modules
//! `∂ : L1 -> L0` over ℚ or 𝔽ₚ (p an odd prime), computes the centre
//! `Z*(L*)` as a braided crossed module, the homotopy invariants π₀/π₁,
//! Chevalley-Eilenberg cohomology of π₀ with coefficients in π₁, Guin's
//! nonabelian H⁰/H¹, and the associated Lie 2-algebra layer. Everything is
//! verified on basis tuples with exact arithmetic; there is no floating
//! point anywhere.

pub mod catalog;
pub mod centre;
pub mod cohomology;
pub mod crossed;
pub mod guin;
pub mod lie;
pub mod lie2cat;
pub mod linalg;
pub mod matrix;
pub mod model;
pub mod scalar;

pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("fields of characteristic 2 are not supported")]
    CharacteristicTwo,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("values from different fields were mixed")]
    MixedFields,
    #[error("not an ideal: bracket of basis element {algebra_index} with ideal basis vector {ideal_index} leaves the subspace")]
    NotAnIdeal {
        algebra_index: usize,
        ideal_index: usize,
    },
    #[error("element is not in the centre Z0")]
    ElementNotInCentre,
    #[error("pair is not in the derivation carrier")]
    ElementNotInCarrier,
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("class is not in the restricted centre Z_pi1(pi0)")]
    NotInRestrictedCentre,
    #[error("morphisms are not composable: target {lhs_target:?} != source {rhs_source:?}")]
    NonComposable {
        lhs_target: String,
        rhs_source: String,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
}
