//! Exact-arithmetic toolkit for matrix pencils and triangular tensor
//! network varieties with one physical dimension equal to 2.
//!
//! The crate is organized in five layers:
//!
//! * [`field`] — exact scalars: arbitrary-precision rationals, prime
//!   fields, univariate Laurent polynomials in a formal parameter ε,
//!   binary forms in two variables and univariate quotient rings.
//! * [`tensor`] — dense tensors with exact entries, contraction,
//!   flattenings and conciseness.
//! * [`pencil`] — matrix pencils, canonical blocks, complete Kronecker
//!   invariants computed exactly, and symbolic ε-degeneration checks.
//! * [`network`] — weighted graphs, graph tensors, the contraction map
//!   and its Jacobian-rank dimension oracle, closed-form dimension and
//!   defect formulas, normal-form samplers and graph augmentation.
//! * [`membership`] — necessary-condition and characterization tests:
//!   root-multiplicity profiles, rank-drop loci, Ruppert reducibility,
//!   bridge-map ranks and annihilator dimensions.
//!
//! Everything is exact: no floating point is used anywhere.

pub mod field;
pub mod json;
pub mod linalg;
pub mod membership;
pub mod network;
pub mod pencil;
pub mod rng;
pub mod tensor;

pub use field::{
    BinaryForm, Field, LaurentPoly, MultiplicityProfile, PrimeField, QuotientRingElement,
    Rational, Ring,
};
pub use linalg::Matrix;
pub use pencil::{KroneckerForm, MatrixPencil};
pub use tensor::DenseTensor;
