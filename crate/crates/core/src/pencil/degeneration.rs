//! Symbolic degeneration checks.
//!
//! Two tools live here. [`verify_epsilon_limit`] certifies an explicit
//! degeneration: given curves g_i(ε) with exact Laurent entries, it
//! computes (g_0(ε)⊗g_1(ε)⊗g_2(ε))·source entrywise in the Laurent ring,
//! demands non-negative order everywhere, takes the limit at ε → 0 and
//! compares with the target exactly. [`paper_degeneration_check`] is the
//! specialized eigenvalue-count inequality for degenerations whose
//! source has no singular blocks; the general two-sided criterion on
//! Kronecker invariants is intentionally not implemented.

use crate::field::{BinaryForm, LaurentPoly, Rational, Ring};
use crate::linalg::Matrix;
use crate::tensor::DenseTensor;

use super::invariants::invariants_from_form;
use super::{Certificate, KroneckerForm, PencilError};

/// Failure report from an ε-degeneration verification.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum EpsilonError {
    #[error("entry {index:?} has a pole of order {order} at ε = 0")]
    Pole { index: Vec<usize>, order: usize },
    #[error("limit at entry {index:?} is {got}, expected {expected}")]
    LimitMismatch { index: Vec<usize>, got: String, expected: String },
    #[error("curve {0} is {1}×{2} but factor {0} has dimension {3}")]
    CurveShape(usize, usize, usize, usize),
}

/// Applies the curves to the source, checks that every entry is regular
/// at ε = 0, and that the limit equals the target.
pub fn verify_epsilon_limit(
    curves: &[Matrix<LaurentPoly<Rational>>],
    source: &DenseTensor<LaurentPoly<Rational>>,
    target: &DenseTensor<Rational>,
) -> Result<(), EpsilonError> {
    assert_eq!(curves.len(), source.order(), "one curve per tensor factor");
    let mut acted = source.clone();
    for (slot, g) in curves.iter().enumerate() {
        if g.ncols() != acted.shape()[slot] {
            return Err(EpsilonError::CurveShape(
                slot,
                g.nrows(),
                g.ncols(),
                acted.shape()[slot],
            ));
        }
        acted = acted.mode_apply(g, slot);
    }
    assert_eq!(acted.shape(), target.shape(), "source and target shapes must agree");
    let shape = acted.shape().to_vec();
    for (flat, entry) in acted.entries().iter().enumerate() {
        let index = unflatten(flat, &shape);
        let limit = entry
            .limit_at_zero()
            .map_err(|e| match e {
                crate::field::FieldError::PoleAtZero { order } => {
                    EpsilonError::Pole { index: index.clone(), order }
                }
                _ => unreachable!("limit_at_zero only reports poles"),
            })?;
        let expected = target.get(&index);
        if &limit != expected {
            return Err(EpsilonError::LimitMismatch {
                index,
                got: limit.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    Ok(())
}

fn unflatten(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0usize; shape.len()];
    for (i, &n) in shape.iter().enumerate().rev() {
        idx[i] = flat % n;
        flat /= n;
    }
    idx
}

/// The specialized degeneration inequality for a source with no singular
/// blocks: for every eigenvalue ζ of the source and every j ≥ 1,
/// d_{1,ζ}(from) ≤ j·k1 + d_{1,ζ}(to). Only j = 1 binds.
///
/// Errors when the source has singular blocks — the general criterion is
/// out of scope by design.
pub fn paper_degeneration_check(
    from: &KroneckerForm,
    to: &KroneckerForm,
    k1: usize,
) -> Result<bool, PencilError> {
    if !from.left_indices.is_empty() || !from.right_indices.is_empty() {
        return Err(PencilError::SingularSource);
    }
    let from_inv = invariants_from_form(from, 0, 0);
    let to_inv = invariants_from_form(to, 0, 0);

    // Refine certificates so shared eigenvalues can be matched exactly.
    for (cert, counts) in &from_inv.d {
        let d1_from = counts.get(&1).copied().unwrap_or(0);
        let pieces = match cert {
            Certificate::Explicit(f) => split_against(f, &to_inv.d),
            Certificate::Generic { roots } => vec![(None, *roots)],
        };
        for (to_cert, _root_count) in pieces {
            let d1_to = match &to_cert {
                Some(f) => to_inv.d_at(f, 1),
                None => 0,
            };
            if d1_from > k1 + d1_to {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Splits a source certificate along the target's certificates: returns
/// (matching target certificate if any, number of shared roots) pieces
/// covering all roots of `f`.
fn split_against(
    f: &BinaryForm,
    targets: &[(Certificate, std::collections::BTreeMap<usize, usize>)],
) -> Vec<(Option<BinaryForm>, usize)> {
    let mut remaining = f.normalized();
    let mut out = Vec::new();
    for (cert, _) in targets {
        let Certificate::Explicit(g) = cert else { continue };
        if remaining.degree() == 0 {
            break;
        }
        let d = remaining.gcd(g);
        if d.degree() >= 1 {
            out.push((Some(g.clone()), d.degree()));
            remaining = remaining.div_exact(&d);
        }
    }
    if remaining.degree() >= 1 {
        out.push((None, remaining.degree()));
    }
    out
}
