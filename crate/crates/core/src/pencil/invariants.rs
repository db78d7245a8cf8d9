//! Degeneration-related invariant counts for pencils embedded in a
//! larger ambient space.
//!
//! For a pencil P regarded inside ℂ²⊗ℂ^N1⊗ℂ^N2, the padding blocks are
//! explicit: N1−n1 copies of R_0 (one extra zero row each) and N2−n2
//! copies of L_0 (one extra zero column each). On top of the Kronecker
//! data this yields the block counts d_{p,ζ}, ℓ_p, r_p used by the
//! specialized degeneration inequalities.

use std::collections::BTreeMap;

use crate::field::BinaryForm;

use super::{Certificate, KroneckerForm, MatrixPencil, PencilError};

/// Block counts of an embedded pencil: Jordan counts per certificate and
/// size, plus left/right singular counts per size (padding included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PokrzywaInvariants {
    /// For each eigenvalue certificate: map size p → number of Jordan
    /// blocks of size p at each root of the certificate.
    pub d: Vec<(Certificate, BTreeMap<usize, usize>)>,
    /// ℓ_p: number of left singular blocks L_p per index p.
    pub l: BTreeMap<usize, usize>,
    /// r_p: number of right singular blocks R_p per index p.
    pub r: BTreeMap<usize, usize>,
}

impl PokrzywaInvariants {
    pub fn total_left(&self) -> usize {
        self.l.values().sum()
    }

    pub fn total_right(&self) -> usize {
        self.r.values().sum()
    }

    /// d_{p,ζ} for the roots of a given certificate; 0 when the
    /// certificate does not appear. The query may be any divisor of a
    /// stored certificate — all roots of a class share the same counts.
    pub fn d_at(&self, cert: &BinaryForm, p: usize) -> usize {
        for (c, counts) in &self.d {
            if let Certificate::Explicit(f) = c {
                if f.multiplicity_of(cert) >= 1 {
                    return counts.get(&p).copied().unwrap_or(0);
                }
            }
        }
        0
    }

    pub fn has_singular_blocks(&self) -> bool {
        !self.l.is_empty() || !self.r.is_empty()
    }
}

/// Kronecker invariants of `t` embedded non-concisely in an ambient
/// space of shape (big1, big2): the padding contributes big1−n1 blocks
/// R_0 and big2−n2 blocks L_0.
pub fn pokrzywa_invariants(
    t: &MatrixPencil,
    ambient: (usize, usize),
) -> Result<PokrzywaInvariants, PencilError> {
    let (n1, n2) = (t.nrows(), t.ncols());
    let (big1, big2) = ambient;
    if n1 > big1 || n2 > big2 {
        return Err(PencilError::AmbientTooSmall { n1, n2, big1, big2 });
    }
    let form = t.kronecker_decompose();
    Ok(invariants_from_form(&form, big1 - n1, big2 - n2))
}

/// Same counts computed from an already known Kronecker form.
pub fn invariants_from_form(
    form: &KroneckerForm,
    extra_r0: usize,
    extra_l0: usize,
) -> PokrzywaInvariants {
    let mut d = Vec::new();
    for class in &form.jordan {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &s in &class.sizes {
            *counts.entry(s).or_insert(0) += 1;
        }
        d.push((class.certificate.clone(), counts));
    }
    let mut l: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in &form.left_indices {
        *l.entry(p).or_insert(0) += 1;
    }
    if extra_l0 > 0 {
        *l.entry(0).or_insert(0) += extra_l0;
    }
    let mut r: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in &form.right_indices {
        *r.entry(p).or_insert(0) += 1;
    }
    if extra_r0 > 0 {
        *r.entry(0).or_insert(0) += extra_r0;
    }
    PokrzywaInvariants { d, l, r }
}
