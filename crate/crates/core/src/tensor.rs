//! Dense order-d tensors with exact entries.
//!
//! Entries are stored flat in row-major order (last index fastest).
//! After a contraction the remaining slots of the first argument come
//! first, then the remaining slots of the second; higher layers
//! re-permute explicitly when they need another order.

use crate::field::{Field, Ring};
use crate::linalg::Matrix;
use crate::rng::{self, Stream};

/// Errors from tensor-shape bookkeeping.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("contraction pairs slot {slot1} (dim {dim1}) with slot {slot2} (dim {dim2})")]
    DimensionMismatch { slot1: usize, dim1: usize, slot2: usize, dim2: usize },
    #[error("flattening index set must be a nonempty proper subset of slots")]
    BadFlatteningSet,
    #[error("slot {0} out of range for order-{1} tensor")]
    SlotOutOfRange(usize, usize),
}

/// A dense tensor of arbitrary order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseTensor<R: Ring> {
    shape: Vec<usize>,
    entries: Vec<R>,
}

fn size_of(shape: &[usize]) -> usize {
    shape.iter().product()
}

impl<R: Ring> DenseTensor<R> {
    pub fn zeros(shape: Vec<usize>) -> Self {
        assert!(shape.iter().all(|&n| n > 0), "zero-length axes are not allowed");
        let n = size_of(&shape);
        DenseTensor { shape, entries: vec![R::zero(); n] }
    }

    pub fn from_entries(shape: Vec<usize>, entries: Vec<R>) -> Self {
        assert_eq!(size_of(&shape), entries.len(), "entry count must match shape");
        assert!(shape.iter().all(|&n| n > 0));
        DenseTensor { shape, entries }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.shape.len()
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut flat = 0;
        for (i, &x) in idx.iter().enumerate() {
            debug_assert!(x < self.shape[i]);
            flat = flat * self.shape[i] + x;
        }
        flat
    }

    pub fn get(&self, idx: &[usize]) -> &R {
        &self.entries[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: R) {
        let flat = self.flat_index(idx);
        self.entries[flat] = value;
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> DenseTensor<S> {
        DenseTensor { shape: self.shape.clone(), entries: self.entries.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape);
        DenseTensor {
            shape: self.shape.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape);
        DenseTensor {
            shape: self.shape.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|e| e.mul(c))
    }

    /// Reorders slots: `perm[k]` is the old slot that lands in position k.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.shape.len());
        let new_shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let mut out = DenseTensor::zeros(new_shape);
        let mut idx = vec![0usize; self.shape.len()];
        for (flat, e) in self.entries.iter().enumerate() {
            decode(flat, &self.shape, &mut idx);
            let new_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            let nf = out.flat_index(&new_idx);
            out.entries[nf] = e.clone();
        }
        out
    }

    /// Splits one slot into consecutive slots of the given dimensions
    /// (row-major within the slot). The product must match.
    pub fn split_slot(&self, slot: usize, dims: &[usize]) -> Self {
        assert_eq!(self.shape[slot], size_of(&dims.to_vec()), "split must preserve size");
        let mut new_shape = Vec::new();
        new_shape.extend_from_slice(&self.shape[..slot]);
        new_shape.extend_from_slice(dims);
        new_shape.extend_from_slice(&self.shape[slot + 1..]);
        DenseTensor { shape: new_shape, entries: self.entries.clone() }
    }

    /// Merges consecutive slots `[from, from+count)` into one (row-major).
    pub fn merge_slots(&self, from: usize, count: usize) -> Self {
        let merged: usize = self.shape[from..from + count].iter().product();
        let mut new_shape = Vec::new();
        new_shape.extend_from_slice(&self.shape[..from]);
        new_shape.push(merged);
        new_shape.extend_from_slice(&self.shape[from + count..]);
        DenseTensor { shape: new_shape, entries: self.entries.clone() }
    }

    /// Multilinear contraction over the given slot pairs; remaining
    /// slots of `self` come first, then remaining slots of `other`.
    pub fn contract(
        &self,
        other: &Self,
        pairs: &[(usize, usize)],
    ) -> Result<Self, TensorError> {
        for &(s1, s2) in pairs {
            if s1 >= self.order() {
                return Err(TensorError::SlotOutOfRange(s1, self.order()));
            }
            if s2 >= other.order() {
                return Err(TensorError::SlotOutOfRange(s2, other.order()));
            }
            if self.shape[s1] != other.shape[s2] {
                return Err(TensorError::DimensionMismatch {
                    slot1: s1,
                    dim1: self.shape[s1],
                    slot2: s2,
                    dim2: other.shape[s2],
                });
            }
        }
        let c1: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let c2: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        let free1: Vec<usize> = (0..self.order()).filter(|s| !c1.contains(s)).collect();
        let free2: Vec<usize> = (0..other.order()).filter(|s| !c2.contains(s)).collect();
        let mut out_shape: Vec<usize> = free1.iter().map(|&s| self.shape[s]).collect();
        out_shape.extend(free2.iter().map(|&s| other.shape[s]));
        let bound_dims: Vec<usize> = c1.iter().map(|&s| self.shape[s]).collect();

        // Scalar result is represented as a single-axis tensor of dim 1.
        let scalar = out_shape.is_empty();
        let mut out = DenseTensor::zeros(if scalar { vec![1] } else { out_shape.clone() });

        let mut idx1 = vec![0usize; self.order()];
        let mut idx2 = vec![0usize; other.order()];
        let out_size = out.entries.len();
        let mut out_idx = vec![0usize; out.shape.len()];
        for flat_out in 0..out_size {
            decode(flat_out, &out.shape, &mut out_idx);
            for (k, &s) in free1.iter().enumerate() {
                idx1[s] = if scalar { 0 } else { out_idx[k] };
            }
            for (k, &s) in free2.iter().enumerate() {
                idx2[s] = if scalar { 0 } else { out_idx[free1.len() + k] };
            }
            let mut acc = R::zero();
            let bound_size: usize = bound_dims.iter().product();
            let mut bound_idx = vec![0usize; bound_dims.len()];
            for flat_b in 0..bound_size {
                decode(flat_b, &bound_dims, &mut bound_idx);
                for (k, &b) in bound_idx.iter().enumerate() {
                    idx1[c1[k]] = b;
                    idx2[c2[k]] = b;
                }
                acc = acc.add(&self.get(&idx1).mul(other.get(&idx2)));
            }
            out.entries[flat_out] = acc;
        }
        Ok(out)
    }

    /// Applies a matrix (n_new × n_slot) to one slot.
    pub fn mode_apply(&self, m: &Matrix<R>, slot: usize) -> Self {
        assert_eq!(m.ncols(), self.shape[slot], "mode apply dimension mismatch");
        let mut new_shape = self.shape.clone();
        new_shape[slot] = m.nrows();
        let mut out: DenseTensor<R> = DenseTensor::zeros(new_shape);
        let mut idx = vec![0usize; self.order()];
        for (flat, e) in self.entries.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            decode(flat, &self.shape, &mut idx);
            let old = idx[slot];
            for new in 0..m.nrows() {
                let coeff = &m[(new, old)];
                if coeff.is_zero() {
                    continue;
                }
                idx[slot] = new;
                let nf = out.flat_index(&idx);
                out.entries[nf] = out.entries[nf].add(&coeff.mul(e));
            }
            idx[slot] = old;
        }
        out
    }

    /// Direct sum on a subset of slots: a block tensor supported on the
    /// two diagonal blocks. Slots not listed must agree in dimension and
    /// are shared (this is the ⊞ of pencils when `slots = {1, 2}`).
    pub fn block_sum_on(&self, other: &Self, slots: &[usize]) -> Self {
        assert_eq!(self.order(), other.order());
        let mut new_shape = self.shape.clone();
        for s in 0..self.order() {
            if slots.contains(&s) {
                new_shape[s] = self.shape[s] + other.shape[s];
            } else {
                assert_eq!(self.shape[s], other.shape[s], "shared slot dims must agree");
            }
        }
        let mut out = DenseTensor::zeros(new_shape);
        let mut idx = vec![0usize; self.order()];
        for (flat, e) in self.entries.iter().enumerate() {
            decode(flat, &self.shape, &mut idx);
            let nf = out.flat_index(&idx);
            out.entries[nf] = e.clone();
        }
        for (flat, e) in other.entries.iter().enumerate() {
            decode(flat, &other.shape, &mut idx);
            let shifted: Vec<usize> = idx
                .iter()
                .enumerate()
                .map(|(s, &x)| if slots.contains(&s) { x + self.shape[s] } else { x })
                .collect();
            let nf = out.flat_index(&shifted);
            out.entries[nf] = out.entries[nf].add(e);
        }
        out
    }

    /// The flattening with row index set I: a (Π_{i∈I} n_i) × (Π_{j∉I} n_j)
    /// matrix, both sides enumerated row-major in increasing slot order.
    pub fn flatten(&self, row_slots: &[usize]) -> Result<Flattening<R>, TensorError> {
        let d = self.order();
        let mut rows_sorted: Vec<usize> = row_slots.to_vec();
        rows_sorted.sort_unstable();
        rows_sorted.dedup();
        if rows_sorted.is_empty() || rows_sorted.len() == d {
            return Err(TensorError::BadFlatteningSet);
        }
        if rows_sorted.iter().any(|&s| s >= d) {
            return Err(TensorError::SlotOutOfRange(rows_sorted[rows_sorted.len() - 1], d));
        }
        let col_slots: Vec<usize> = (0..d).filter(|s| !rows_sorted.contains(s)).collect();
        let nrows: usize = rows_sorted.iter().map(|&s| self.shape[s]).product();
        let ncols: usize = col_slots.iter().map(|&s| self.shape[s]).product();
        let mut matrix = Matrix::zeros(nrows, ncols);
        let mut idx = vec![0usize; d];
        for (flat, e) in self.entries.iter().enumerate() {
            decode(flat, &self.shape, &mut idx);
            let mut r = 0;
            for &s in &rows_sorted {
                r = r * self.shape[s] + idx[s];
            }
            let mut c = 0;
            for &s in &col_slots {
                c = c * self.shape[s] + idx[s];
            }
            matrix[(r, c)] = e.clone();
        }
        Ok(Flattening { row_slots: rows_sorted, matrix })
    }
}

impl<F: Field> DenseTensor<F> {
    /// One flag per factor: true iff the factor-i flattening has rank n_i.
    pub fn is_concise(&self) -> Vec<bool> {
        (0..self.order())
            .map(|i| {
                if self.order() == 1 {
                    return !self.is_zero();
                }
                let fl = self.flatten(&[i]).expect("singleton is a proper subset");
                fl.matrix.rank() == self.shape[i]
            })
            .collect()
    }
}

/// A tensor flattening: the chosen row slots and the resulting matrix.
#[derive(Clone, Debug)]
pub struct Flattening<R: Ring> {
    pub row_slots: Vec<usize>,
    pub matrix: Matrix<R>,
}

fn decode(mut flat: usize, shape: &[usize], idx: &mut [usize]) {
    for (i, &n) in shape.iter().enumerate().rev() {
        idx[i] = flat % n;
        flat /= n;
    }
}

/// Deterministic random tensor with rational entries uniform on the
/// integers in [−10⁴, 10⁴].
pub fn random_rational_tensor(shape: Vec<usize>, seed: u64) -> DenseTensor<crate::field::Rational> {
    let mut rng = rng::stream(seed, Stream::Tensor, 0);
    let n = size_of(&shape);
    DenseTensor::from_entries(shape, (0..n).map(|_| rng::rational_entry(&mut rng)).collect())
}

/// Deterministic random tensor over F_p, entries uniform mod p.
pub fn random_prime_tensor(
    shape: Vec<usize>,
    seed: u64,
    p: u64,
) -> DenseTensor<crate::field::PrimeField> {
    let mut rng = rng::stream(seed, Stream::Tensor, 0);
    let n = size_of(&shape);
    DenseTensor::from_entries(shape, (0..n).map(|_| rng::prime_entry(&mut rng, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn id2() -> DenseTensor<Rational> {
        DenseTensor::from_entries(vec![2, 2], vec![r(1), r(0), r(0), r(1)])
    }

    #[test]
    fn identity_acts_trivially() {
        let v = DenseTensor::from_entries(vec![2], vec![r(3), r(-5)]);
        let out = id2().contract(&v, &[(1, 0)]).unwrap();
        assert_eq!(out.shape(), &[2]);
        assert_eq!(out.entries(), v.entries());
    }

    #[test]
    fn identity_composes_to_identity() {
        let out = id2().contract(&id2(), &[(1, 0)]).unwrap();
        assert_eq!(out, id2());
    }

    #[test]
    fn flatten_unit_tensor() {
        // e0⊗e0⊗e0 in shape (2,2,2), I = {1} → 2×4 with a single 1 at (0,0).
        let mut t = DenseTensor::zeros(vec![2, 2, 2]);
        t.set(&[0, 0, 0], r(1));
        let fl = t.flatten(&[1]).unwrap();
        assert_eq!((fl.matrix.nrows(), fl.matrix.ncols()), (2, 4));
        assert_eq!(fl.matrix[(0, 0)], r(1));
        assert_eq!(fl.matrix.rank(), 1);
        assert_eq!(t.is_concise(), vec![false, false, false]);
    }

    #[test]
    fn flatten_rejects_trivial_sets() {
        let t = DenseTensor::<Rational>::zeros(vec![2, 2]);
        assert!(t.flatten(&[]).is_err());
        assert!(t.flatten(&[0, 1]).is_err());
    }

    #[test]
    fn random_tensor_is_deterministic_and_generically_concise() {
        let a = random_rational_tensor(vec![2, 3, 3], 1);
        let b = random_rational_tensor(vec![2, 3, 3], 1);
        assert_eq!(a, b);
        assert_eq!(a.is_concise(), vec![true, true, true]);
        let fl = a.flatten(&[1]).unwrap();
        assert_eq!(fl.matrix.rank(), 3);
        // Shape (1,...,1) is a single scalar.
        let s = random_rational_tensor(vec![1, 1, 1], 9);
        assert_eq!(s.entries().len(), 1);
    }

    #[test]
    fn contraction_is_multilinear() {
        let t1 = random_rational_tensor(vec![2, 3], 11);
        let t1b = random_rational_tensor(vec![2, 3], 12);
        let t2 = random_rational_tensor(vec![3, 2], 13);
        let alpha = r(3);
        let beta = r(-7);
        let lhs = t1.scale(&alpha).add(&t1b.scale(&beta)).contract(&t2, &[(1, 0)]).unwrap();
        let rhs = t1
            .contract(&t2, &[(1, 0)])
            .unwrap()
            .scale(&alpha)
            .add(&t1b.contract(&t2, &[(1, 0)]).unwrap().scale(&beta));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn flatten_is_a_permutation_of_entries() {
        let t = random_rational_tensor(vec![2, 3, 4], 5);
        let fl = t.flatten(&[0, 2]).unwrap();
        let mut from_matrix: Vec<Rational> = Vec::new();
        for i in 0..fl.matrix.nrows() {
            from_matrix.extend(fl.matrix.row(i).iter().cloned());
        }
        let mut original = t.entries().to_vec();
        let mut sorted = from_matrix.clone();
        original.sort();
        sorted.sort();
        assert_eq!(original, sorted);
        // And the map is injective: same multiset + same length ⇒ permutation.
        assert_eq!(from_matrix.len(), t.entries().len());
    }

    #[test]
    fn mode_apply_matches_contract() {
        let t = random_rational_tensor(vec![2, 3, 2], 21);
        let m_entries: Vec<Rational> = (0..12).map(|k| r(k as i64 - 4)).collect();
        let m = Matrix::from_fn(4, 3, |i, j| m_entries[i * 3 + j].clone());
        let applied = t.mode_apply(&m, 1);
        // Same thing through contract: tensorize m as (4,3), contract slot 1.
        let mt = DenseTensor::from_entries(vec![4, 3], m_entries);
        let via_contract = t.contract(&mt, &[(1, 1)]).unwrap(); // slots: (2,2,4) then permute
        let back = via_contract.permute(&[0, 2, 1]);
        assert_eq!(applied, back);
    }

    #[test]
    fn kronecker_flattening_rank_is_multiplicative() {
        let a = random_rational_tensor(vec![2, 3], 31);
        let b = random_rational_tensor(vec![3, 2], 32);
        let am = a.flatten(&[0]).unwrap().matrix;
        let bm = b.flatten(&[0]).unwrap().matrix;
        let kron = am.kronecker(&bm);
        assert_eq!(kron.rank(), am.rank() * bm.rank());
    }
}
