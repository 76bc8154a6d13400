//! Exact symbolic linear algebra for complex representations of the braid
//! group B3: the Burau representation, the two-parameter families of
//! two-dimensional representations, and the splitting of the Burau tensor
//! square into a character and an irreducible three-dimensional piece.
//!
//! Every identity is checked by exact equality over `Q(z)`, `Q`, or `Q(ω)`;
//! a complex floating-point field is available for numerical cross-checks.

pub mod analysis;
pub mod linalg;
pub mod reps;
pub mod scalar;

pub use linalg::{KernelBasis, LinalgError, Matrix};
pub use scalar::{FieldTag, Omega, Poly, RatFunc, Scalar, ScalarError};
pub use analysis::{
    common_invariant_lines, decompose, intertwiners, is_irreducible, is_isomorphic, split_once, spectrum_of_triangular,
    verify_braid_relations, AnalysisError, DecompositionReport, InvariantLine, Irreducibility, IsoOptions,
    Isomorphism, Side, VerificationReport,
};
pub use reps::{FamilySpec, Meta, RepError, Representation};
