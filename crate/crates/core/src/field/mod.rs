//! Exact scalar arithmetic.
//!
//! All higher layers are generic over the [`Ring`] / [`Field`] traits
//! defined here. The concrete scalars are:
//!
//! * [`Rational`] — arbitrary-precision rationals, eagerly normalized;
//! * [`PrimeField`] — integers modulo a large prime, used by the
//!   randomized rank oracle;
//! * [`LaurentPoly`] — finitely supported Laurent polynomials in a
//!   formal parameter ε, used for symbolic degeneration curves;
//! * [`QuotientRingElement`] — elements of ℚ[μ]/(μᵏ − c), used for
//!   algebraic constants such as μ = (1+λ³)^{1/3};
//! * [`BinaryForm`] — homogeneous two-variable forms, carrying the
//!   squarefree and root-multiplicity machinery.

mod binary_form;
mod laurent;
mod partition;
mod poly;
mod prime;
mod quotient;
mod rational;

pub use binary_form::{BinaryForm, MultiplicityProfile};
pub use laurent::LaurentPoly;
pub use partition::{enumerate_coarsenings, merge_coarsening, Partition};
pub use poly::Poly;
pub use prime::{PrimeField, DEFAULT_MODULUS};
pub use quotient::QuotientRingElement;
pub use rational::Rational;

use std::fmt::Debug;

/// Errors produced by the scalar layer.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// Attempted to decompose the identically zero form.
    #[error("zero-form: squarefree decomposition of the zero form is undefined")]
    ZeroForm,
    /// A Laurent polynomial has a pole at ε = 0.
    #[error("pole-at-zero: Laurent polynomial has a pole of order {order} at 0")]
    PoleAtZero { order: usize },
    /// Partitions with different totals were compared.
    #[error("partition totals differ: {0} vs {1}")]
    PartitionTotalMismatch(usize, usize),
    /// Division by a non-invertible element.
    #[error("element is not invertible")]
    NotInvertible,
}

/// A commutative ring with exact arithmetic.
///
/// Operations take references; all implementations are immutable values,
/// safe to use from concurrent callers.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    /// Integer-exponent power by repeated squaring.
    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}
