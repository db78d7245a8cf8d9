//! Matrix pencils in ℂ²⊗ℂ^n1⊗ℂ^n2 with exact rational entries.
//!
//! A pencil is the matrix of linear forms v0·A + v1·B. Up to left/right
//! basis change it is a block sum of indecomposable pencils — left
//! singular blocks L_p (p×(p+1)), right singular blocks R_p ((p+1)×p)
//! and Jordan blocks J_p(z) at a generalized eigenvalue z — and the
//! multiset of blocks is a complete invariant. [`kronecker_decompose`]
//! computes it exactly:
//!
//! * minimal indices come from the rank sequence of layered block
//!   matrices (polynomial-nullspace dimension counting), never from a
//!   staircase reduction: ranks over ℚ need no pivot tolerances;
//! * the regular part comes from the invariant-factor chain of the
//!   polynomial matrix, with the two dehomogenizations x·A + B and
//!   A + y·B combined so the eigenvalue at (1:0) is not lost;
//! * eigenvalues are never isolated: Jordan structure is attached to
//!   squarefree certificate factors, with conjugate roots kept grouped.
//!
//! [`kronecker_decompose`]: MatrixPencil::kronecker_decompose

mod degeneration;
mod invariants;

pub use degeneration::{paper_degeneration_check, verify_epsilon_limit, EpsilonError};
pub use invariants::{pokrzywa_invariants, PokrzywaInvariants};

use std::collections::BTreeMap;

use crate::field::{BinaryForm, Field, Poly, Rational, Ring};
use crate::linalg::{lagrange_interpolate, smith_invariant_factors, Matrix};
use crate::tensor::DenseTensor;

/// Errors from pencil construction and decomposition.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PencilError {
    #[error("Jordan blocks need size p ≥ 1")]
    JordanSizeZero,
    #[error("generalized eigenvalue must be a nonzero vector")]
    ZeroEigenvalue,
    #[error("block sum count must be at least 1, got {0}")]
    EmptyBoxProduct(usize),
    #[error("no concise tensors: shape ({0},{1}) is outside n1 ≤ 2n2, n2 ≤ 2n1")]
    NoConciseTensors(usize, usize),
    #[error("certificate of degree {0} has no rational root; cannot reconstruct exactly")]
    IrrationalCertificate(usize),
    #[error("pencil of shape ({n1},{n2}) does not fit in ambient ({big1},{big2})")]
    AmbientTooSmall { n1: usize, n2: usize, big1: usize, big2: usize },
    #[error("degeneration check requires a source with no singular blocks; the general two-sided criterion is out of scope")]
    SingularSource,
}

/// The three kinds of indecomposable pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    /// L_p: p×(p+1), a0 on the diagonal, a1 on the superdiagonal.
    Left(usize),
    /// R_p: (p+1)×p, a0 on the diagonal, a1 on the subdiagonal.
    Right(usize),
    /// J_p(z): p×p with z on the diagonal and a1 on the superdiagonal.
    Jordan(usize, (Rational, Rational)),
}

/// A matrix pencil v0·A + v1·B with exact rational entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixPencil {
    a: Matrix<Rational>,
    b: Matrix<Rational>,
}

impl MatrixPencil {
    pub fn new(a: Matrix<Rational>, b: Matrix<Rational>) -> Self {
        assert_eq!((a.nrows(), a.ncols()), (b.nrows(), b.ncols()), "A and B must share shape");
        MatrixPencil { a, b }
    }

    /// The 0×0 pencil, neutral for the block sum.
    pub fn empty() -> Self {
        MatrixPencil { a: Matrix::zeros(0, 0), b: Matrix::zeros(0, 0) }
    }

    pub fn zeros(n1: usize, n2: usize) -> Self {
        MatrixPencil { a: Matrix::zeros(n1, n2), b: Matrix::zeros(n1, n2) }
    }

    pub fn a(&self) -> &Matrix<Rational> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<Rational> {
        &self.b
    }

    pub fn nrows(&self) -> usize {
        self.a.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.a.ncols()
    }

    /// An indecomposable block, exactly as displayed in the classical
    /// classification.
    pub fn make_block(kind: &Block) -> Result<Self, PencilError> {
        match kind {
            Block::Left(p) => {
                let mut a = Matrix::zeros(*p, p + 1);
                let mut b = Matrix::zeros(*p, p + 1);
                for i in 0..*p {
                    a[(i, i)] = Rational::one();
                    b[(i, i + 1)] = Rational::one();
                }
                Ok(MatrixPencil { a, b })
            }
            Block::Right(p) => {
                let mut a = Matrix::zeros(p + 1, *p);
                let mut b = Matrix::zeros(p + 1, *p);
                for i in 0..*p {
                    a[(i, i)] = Rational::one();
                    b[(i + 1, i)] = Rational::one();
                }
                Ok(MatrixPencil { a, b })
            }
            Block::Jordan(p, (z0, z1)) => {
                if *p == 0 {
                    return Err(PencilError::JordanSizeZero);
                }
                if z0.is_zero() && z1.is_zero() {
                    return Err(PencilError::ZeroEigenvalue);
                }
                let mut a = Matrix::zeros(*p, *p);
                let mut b = Matrix::zeros(*p, *p);
                for i in 0..*p {
                    a[(i, i)] = z0.clone();
                    b[(i, i)] = z1.clone();
                    if i + 1 < *p {
                        b[(i, i + 1)] = Rational::one();
                    }
                }
                Ok(MatrixPencil { a, b })
            }
        }
    }

    /// Block-diagonal sum sharing the 2-dimensional factor.
    pub fn block_sum(&self, other: &Self) -> Self {
        MatrixPencil { a: self.a.direct_sum(&other.a), b: self.b.direct_sum(&other.b) }
    }

    /// The block sum of q ≥ 1 copies of the pencil (T ⊠ I_q).
    pub fn box_times_identity(&self, q: usize) -> Result<Self, PencilError> {
        if q == 0 {
            return Err(PencilError::EmptyBoxProduct(q));
        }
        let mut acc = self.clone();
        for _ in 1..q {
            acc = acc.block_sum(self);
        }
        Ok(acc)
    }

    /// Evaluation of the matrix of linear forms at (v0, v1) = (x0, x1).
    pub fn eval(&self, x0: &Rational, x1: &Rational) -> Matrix<Rational> {
        self.a.scale(x0).add(&self.b.scale(x1))
    }

    /// Conjugation by invertible matrices: P·(v0 A + v1 B)·Q.
    pub fn conjugate(&self, p: &Matrix<Rational>, q: &Matrix<Rational>) -> Self {
        MatrixPencil { a: p.mul(&self.a).mul(q), b: p.mul(&self.b).mul(q) }
    }

    pub fn transpose(&self) -> Self {
        MatrixPencil { a: self.a.transpose(), b: self.b.transpose() }
    }

    /// The shape-(2, n1, n2) tensor whose slice at index 0 of the first
    /// slot is A and at index 1 is B. Lossless both ways for n1, n2 ≥ 1.
    pub fn to_tensor(&self) -> DenseTensor<Rational> {
        let (n1, n2) = (self.nrows(), self.ncols());
        assert!(n1 > 0 && n2 > 0, "degenerate pencils have no tensor form");
        let mut t = DenseTensor::zeros(vec![2, n1, n2]);
        for i in 0..n1 {
            for j in 0..n2 {
                t.set(&[0, i, j], self.a[(i, j)].clone());
                t.set(&[1, i, j], self.b[(i, j)].clone());
            }
        }
        t
    }

    pub fn from_tensor(t: &DenseTensor<Rational>) -> Self {
        assert_eq!(t.order(), 3, "pencil tensors have order 3");
        assert_eq!(t.shape()[0], 2, "first factor must be 2-dimensional");
        let (n1, n2) = (t.shape()[1], t.shape()[2]);
        let a = Matrix::from_fn(n1, n2, |i, j| t.get(&[0, i, j]).clone());
        let b = Matrix::from_fn(n1, n2, |i, j| t.get(&[1, i, j]).clone());
        MatrixPencil { a, b }
    }

    /// det(v0·A + v1·B) as a binary form of degree n (for square
    /// pencils), by exact evaluation–interpolation. The zero determinant
    /// comes back as the zero form of degree n.
    pub fn det_form(&self) -> BinaryForm {
        assert_eq!(self.nrows(), self.ncols(), "determinant needs a square pencil");
        let n = self.nrows();
        if n == 0 {
            return BinaryForm::constant(Rational::one());
        }
        // p(x) = det(x·A + B) has degree ≤ n; interpolate at x = 0..n.
        let points: Vec<(Rational, Rational)> = (0..=n as i64)
            .map(|x| {
                let x = Rational::from_integer(x);
                let val = self.a.scale(&x).add(&self.b).det();
                (x, val)
            })
            .collect();
        let p = lagrange_interpolate(&points);
        // Form coefficient of v0^(n−i)·v1^i is the x^(n−i) coefficient.
        let coeffs: Vec<Rational> = (0..=n).map(|i| p.coeff(n - i)).collect();
        BinaryForm::new(coeffs)
    }

    /// gcd of all k×k minors of the pencil as a binary form, equal to the
    /// product of the first k invariant factors. Returns `None` when the
    /// normal rank is below k (all k-minors vanish identically).
    pub fn minor_gcd(&self, k: usize) -> Option<BinaryForm> {
        assert!(k >= 1 && k <= self.nrows().min(self.ncols()));
        let (t_fac, s_fac) = self.invariant_factor_chains();
        if t_fac.len() < k {
            return None;
        }
        let mut acc = BinaryForm::constant(Rational::one());
        for i in 0..k {
            acc = acc.mul(&homogeneous_factor(&t_fac[i], &s_fac[i]));
        }
        Some(acc.normalized())
    }

    fn invariant_factor_chains(&self) -> (Vec<Poly<Rational>>, Vec<Poly<Rational>>) {
        // x·A + B over ℚ[x] (v1 = 1) and A + y·B over ℚ[y] (v0 = 1).
        let m1: Matrix<Poly<Rational>> = Matrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            Poly::from_coeffs(vec![self.b[(i, j)].clone(), self.a[(i, j)].clone()])
        });
        let m2: Matrix<Poly<Rational>> = Matrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            Poly::from_coeffs(vec![self.a[(i, j)].clone(), self.b[(i, j)].clone()])
        });
        let t_fac = smith_invariant_factors(&m1);
        let s_fac = smith_invariant_factors(&m2);
        assert_eq!(t_fac.len(), s_fac.len(), "normal rank must agree across charts");
        (t_fac, s_fac)
    }

    /// Rank over the function field ℚ(v0:v1).
    pub fn normal_rank(&self) -> usize {
        self.invariant_factor_chains().0.len()
    }

    /// The complete Kronecker invariants.
    pub fn kronecker_decompose(&self) -> KroneckerForm {
        let (n1, n2) = (self.nrows(), self.ncols());
        let (t_fac, s_fac) = self.invariant_factor_chains();
        let rho = t_fac.len();

        // Regular part: homogeneous invariant factors, refined into
        // pairwise coprime squarefree certificates.
        let invariant_forms: Vec<BinaryForm> = t_fac
            .iter()
            .zip(&s_fac)
            .map(|(t, s)| homogeneous_factor(t, s))
            .filter(|f| f.degree() >= 1)
            .collect();
        let mut squarefree_parts: Vec<BinaryForm> = Vec::new();
        for f in &invariant_forms {
            for (g, _) in f.squarefree_decompose().expect("nonzero invariant factor").factors {
                squarefree_parts.push(g);
            }
        }
        let basis = coprime_basis(&squarefree_parts);
        let mut jordan: Vec<JordanClass> = Vec::new();
        for h in basis {
            let mut sizes: Vec<usize> = invariant_forms
                .iter()
                .map(|f| f.multiplicity_of(&h))
                .filter(|&m| m > 0)
                .collect();
            sizes.sort_unstable_by(|x, y| y.cmp(x));
            if !sizes.is_empty() {
                jordan.push(JordanClass { certificate: Certificate::Explicit(h), sizes });
            }
        }
        jordan.sort_by(|x, y| x.sizes.cmp(&y.sizes));

        // Singular part: minimal indices from layered rank sequences.
        let left_indices = column_minimal_indices(&self.a, &self.b, n2 - rho);
        let right_indices =
            column_minimal_indices(&self.a.transpose(), &self.b.transpose(), n1 - rho);

        let form = KroneckerForm { left_indices, right_indices, jordan };
        debug_assert_eq!(form.rows(), n1, "row accounting");
        debug_assert_eq!(form.cols(), n2, "column accounting");
        form
    }
}

/// Combines the two dehomogenized invariant factors into the homogeneous
/// one: the x-chart polynomial carries every linear factor except v1,
/// whose multiplicity is the y-valuation in the other chart.
fn homogeneous_factor(t_fac: &Poly<Rational>, s_fac: &Poly<Rational>) -> BinaryForm {
    let v1_pow = s_fac.valuation().expect("invariant factor is nonzero");
    debug_assert_eq!(
        t_fac.degree().unwrap() + v1_pow,
        s_fac.degree().unwrap() + t_fac.valuation().unwrap(),
        "chart degrees must be consistent"
    );
    BinaryForm::homogenize(t_fac, v1_pow).normalized()
}

/// Refines a list of squarefree forms into pairwise coprime squarefree
/// forms whose products recover each input.
fn coprime_basis(forms: &[BinaryForm]) -> Vec<BinaryForm> {
    let mut basis: Vec<BinaryForm> = Vec::new();
    let mut queue: Vec<BinaryForm> =
        forms.iter().filter(|f| f.degree() >= 1).map(|f| f.normalized()).collect();
    while let Some(mut g) = queue.pop() {
        if g.degree() == 0 {
            continue;
        }
        let mut absorbed = false;
        for i in 0..basis.len() {
            let d = g.gcd(&basis[i]);
            if d.degree() == 0 {
                continue;
            }
            if d.proportional_to(&basis[i]) {
                // basis element divides g; keep it, push the quotient.
                g = g.div_exact(&basis[i]);
                if g.degree() == 0 {
                    absorbed = true;
                    break;
                }
                continue;
            }
            // Split the basis element.
            let rest = basis[i].div_exact(&d);
            basis[i] = d.normalized();
            basis.push(rest.normalized());
            let g_rest = g.div_exact(&basis[i]);
            queue.push(g_rest);
            absorbed = true;
            break;
        }
        if !absorbed && g.degree() >= 1 {
            basis.push(g.normalized());
        }
    }
    basis.sort_by(|x, y| (x.degree(), format!("{x:?}")).cmp(&(y.degree(), format!("{y:?}"))));
    basis
}

/// Counts of column minimal indices (blocks with more columns than rows)
/// via nullities of the layered matrices S_k: (k+2)·n1 × (k+1)·n2 block
/// matrices with A on the diagonal and B below. The nullity ν_k counts
/// polynomial null vectors of degree ≤ k, so consecutive differences
/// recover the index multiset.
fn column_minimal_indices(a: &Matrix<Rational>, b: &Matrix<Rational>, count: usize) -> Vec<usize> {
    let mut indices = Vec::with_capacity(count);
    if count == 0 {
        return indices;
    }
    let (n1, n2) = (a.nrows(), a.ncols());
    let mut prev_nu = 0usize;
    let mut prev_c = 0usize;
    let mut k = 0usize;
    while indices.len() < count {
        let layered: Matrix<Rational> = Matrix::from_fn((k + 2) * n1, (k + 1) * n2, |i, j| {
            let (bi, ii) = (i / n1, i % n1);
            let (bj, jj) = (j / n2, j % n2);
            if bi == bj {
                a[(ii, jj)].clone()
            } else if bi == bj + 1 {
                b[(ii, jj)].clone()
            } else {
                Rational::zero()
            }
        });
        let nu = layered.nullity();
        let c = nu - prev_nu;
        for _ in 0..c - prev_c {
            indices.push(k);
        }
        prev_nu = nu;
        prev_c = c;
        k += 1;
        assert!(k <= n2 + 1, "minimal index search exceeded the possible range");
    }
    indices.sort_unstable();
    indices
}

/// An eigenvalue certificate: either an explicit squarefree binary form
/// whose roots all share one Jordan size list, or a marker for
/// unspecified generic distinct eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Explicit(BinaryForm),
    Generic { roots: usize },
}

impl Certificate {
    pub fn root_count(&self) -> usize {
        match self {
            Certificate::Explicit(f) => f.degree(),
            Certificate::Generic { roots } => *roots,
        }
    }
}

/// One group of eigenvalues with identical Jordan structure: every root
/// of the certificate carries `sizes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanClass {
    pub certificate: Certificate,
    pub sizes: Vec<usize>,
}

/// Complete Kronecker invariant data of a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerForm {
    /// Multiset of p for blocks L_p (p×(p+1)), sorted ascending.
    pub left_indices: Vec<usize>,
    /// Multiset of p for blocks R_p ((p+1)×p), sorted ascending.
    pub right_indices: Vec<usize>,
    /// Jordan structure grouped by certificate.
    pub jordan: Vec<JordanClass>,
}

impl KroneckerForm {
    pub fn empty() -> Self {
        KroneckerForm { left_indices: vec![], right_indices: vec![], jordan: vec![] }
    }

    /// The invariants of a block sum given as an explicit block list;
    /// Jordan blocks with proportional eigenvalue vectors are grouped.
    pub fn from_blocks(blocks: &[Block]) -> Self {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut by_eig: Vec<(BinaryForm, Vec<usize>)> = Vec::new();
        for b in blocks {
            match b {
                Block::Left(p) => left.push(*p),
                Block::Right(p) => right.push(*p),
                Block::Jordan(p, (z0, z1)) => {
                    let cert = BinaryForm::linear(z0.clone(), z1.clone()).normalized();
                    match by_eig.iter_mut().find(|(c, _)| *c == cert) {
                        Some((_, sizes)) => sizes.push(*p),
                        None => by_eig.push((cert, vec![*p])),
                    }
                }
            }
        }
        left.sort_unstable();
        right.sort_unstable();
        let mut jordan: Vec<JordanClass> = by_eig
            .into_iter()
            .map(|(cert, mut sizes)| {
                sizes.sort_unstable_by(|x, y| y.cmp(x));
                JordanClass { certificate: Certificate::Explicit(cert), sizes }
            })
            .collect();
        jordan.sort_by(|x, y| x.sizes.cmp(&y.sizes));
        KroneckerForm { left_indices: left, right_indices: right, jordan }
    }

    /// Total row count: Σp (left) + Σ(p+1) (right) + Σ sizes·roots.
    pub fn rows(&self) -> usize {
        let l: usize = self.left_indices.iter().sum();
        let r: usize = self.right_indices.iter().map(|p| p + 1).sum();
        l + r + self.regular_degree()
    }

    /// Total column count: Σ(p+1) (left) + Σp (right) + Σ sizes·roots.
    pub fn cols(&self) -> usize {
        let l: usize = self.left_indices.iter().map(|p| p + 1).sum();
        let r: usize = self.right_indices.iter().sum();
        l + r + self.regular_degree()
    }

    /// Degree of the regular part = Σ over eigenvalues of Σ sizes.
    pub fn regular_degree(&self) -> usize {
        self.jordan
            .iter()
            .map(|c| c.certificate.root_count() * c.sizes.iter().sum::<usize>())
            .sum()
    }

    /// Jordan data aggregated by size list: size list → total number of
    /// roots carrying it, together with the product of the explicit
    /// certificates (normalized; `None` when any contributor is generic).
    pub fn jordan_aggregate(&self) -> BTreeMap<Vec<usize>, (usize, Option<BinaryForm>)> {
        let mut map: BTreeMap<Vec<usize>, (usize, Option<BinaryForm>)> = BTreeMap::new();
        for class in &self.jordan {
            let entry = map
                .entry(class.sizes.clone())
                .or_insert((0, Some(BinaryForm::constant(Rational::one()))));
            entry.0 += class.certificate.root_count();
            entry.1 = match (&entry.1, &class.certificate) {
                (Some(acc), Certificate::Explicit(f)) => Some(acc.mul(f).normalized()),
                _ => None,
            };
        }
        map
    }

    /// Exact invariant equality: same singular indices; same size lists
    /// with identical total root counts and identical certificate
    /// products (so two linear certificates match one quadratic one).
    pub fn same_invariants(&self, other: &Self) -> bool {
        if self.left_indices != other.left_indices || self.right_indices != other.right_indices {
            return false;
        }
        let a = self.jordan_aggregate();
        let b = other.jordan_aggregate();
        if a.len() != b.len() {
            return false;
        }
        a.iter().zip(b.iter()).all(|((sa, (ca, fa)), (sb, (cb, fb)))| {
            sa == sb
                && ca == cb
                && match (fa, fb) {
                    (Some(x), Some(y)) => x == y,
                    _ => true,
                }
        })
    }

    /// Structural equality ignoring which eigenvalues occur: used to
    /// compare against generic-structure predictions.
    pub fn same_structure_as(&self, other: &Self) -> bool {
        if self.left_indices != other.left_indices || self.right_indices != other.right_indices {
            return false;
        }
        let strip = |form: &Self| {
            form.jordan_aggregate()
                .into_iter()
                .map(|(sizes, (roots, _))| (sizes, roots))
                .collect::<Vec<_>>()
        };
        strip(self) == strip(other)
    }

    /// Rebuilds a pencil with exactly these invariants. Certificates of
    /// degree > 1 and generic markers get fresh distinct rational
    /// eigenvalue representatives (the discrete data is preserved; used
    /// in round-trip tests with rational data).
    pub fn reconstruct_representative(&self) -> Result<MatrixPencil, PencilError> {
        let mut used: Vec<Rational> = Vec::new();
        for class in &self.jordan {
            if let Certificate::Explicit(f) = &class.certificate {
                if f.degree() == 1 {
                    // normalized linear form z0·v0 + z1·v1
                    let c = f.coeffs();
                    if !c[0].is_zero() {
                        used.push(c[1].div(&c[0]).unwrap());
                    }
                }
            }
        }
        let mut fresh = 1i64;
        let mut next_fresh = |used: &mut Vec<Rational>| {
            loop {
                let cand = Rational::from_integer(fresh);
                fresh += 1;
                if !used.contains(&cand) {
                    used.push(cand.clone());
                    return cand;
                }
            }
        };
        let mut acc = MatrixPencil::empty();
        for &p in &self.right_indices {
            acc = acc.block_sum(&MatrixPencil::make_block(&Block::Right(p))?);
        }
        for class in &self.jordan {
            let eigs: Vec<(Rational, Rational)> = match &class.certificate {
                Certificate::Explicit(f) if f.degree() == 1 => {
                    vec![(f.coeffs()[0].clone(), f.coeffs()[1].clone())]
                }
                cert => (0..cert.root_count())
                    .map(|_| (Rational::one(), next_fresh(&mut used)))
                    .collect(),
            };
            for z in eigs {
                for &s in &class.sizes {
                    acc = acc.block_sum(&MatrixPencil::make_block(&Block::Jordan(s, z.clone()))?);
                }
            }
        }
        for &p in &self.left_indices {
            acc = acc.block_sum(&MatrixPencil::make_block(&Block::Left(p))?);
        }
        Ok(acc)
    }

    /// Exact reconstruction; requires every certificate to be linear.
    pub fn reconstruct_exact(&self) -> Result<MatrixPencil, PencilError> {
        for class in &self.jordan {
            match &class.certificate {
                Certificate::Explicit(f) if f.degree() == 1 => {}
                Certificate::Explicit(f) => {
                    return Err(PencilError::IrrationalCertificate(f.degree()))
                }
                Certificate::Generic { roots } => {
                    return Err(PencilError::IrrationalCertificate(*roots))
                }
            }
        }
        self.reconstruct_representative()
    }
}

/// Kronecker structure of the generic pencil of shape n1×n2.
pub fn generic_structure(n1: usize, n2: usize) -> Result<KroneckerForm, PencilError> {
    if n1 > 2 * n2 || n2 > 2 * n1 {
        return Err(PencilError::NoConciseTensors(n1, n2));
    }
    if n1 == n2 {
        if n1 == 0 {
            return Ok(KroneckerForm::empty());
        }
        return Ok(KroneckerForm {
            left_indices: vec![],
            right_indices: vec![],
            jordan: vec![JordanClass { certificate: Certificate::Generic { roots: n1 }, sizes: vec![1] }],
        });
    }
    let (small, _large, q) = if n1 < n2 { (n1, n2, n2 - n1) } else { (n2, n1, n1 - n2) };
    // Unique p, α, β ≥ 0 with β > 0: small = pα + (p+1)β, large = (p+1)α + (p+2)β.
    let p = if small == 0 { 0 } else { (small - 1) / q };
    let beta = small - p * q;
    let alpha = (p + 1) * q - small;
    let mut indices = Vec::new();
    indices.extend(std::iter::repeat(p).take(alpha));
    indices.extend(std::iter::repeat(p + 1).take(beta));
    indices.sort_unstable();
    Ok(if n1 < n2 {
        KroneckerForm { left_indices: indices, right_indices: vec![], jordan: vec![] }
    } else {
        KroneckerForm { left_indices: vec![], right_indices: indices, jordan: vec![] }
    })
}

/// Deterministic random pencil with integer entries in [−10⁴, 10⁴].
pub fn random_pencil(n1: usize, n2: usize, seed: u64) -> MatrixPencil {
    let mut rng = crate::rng::stream(seed, crate::rng::Stream::Tensor, 1);
    let a = Matrix::from_fn(n1, n2, |_, _| crate::rng::rational_entry(&mut rng));
    let b = Matrix::from_fn(n1, n2, |_, _| crate::rng::rational_entry(&mut rng));
    MatrixPencil::new(a, b)
}

/// Deterministic random invertible matrix with small integer entries.
pub fn random_invertible(n: usize, rng: &mut rand_chacha::ChaCha8Rng) -> Matrix<Rational> {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| crate::rng::small_entry(rng));
        if n == 0 || !m.det().is_zero() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests;
