//! Exact dense linear algebra over a [`Field`], plus the Smith form of
//! univariate polynomial matrices.
//!
//! Gaussian elimination over an exact field needs no pivoting strategy
//! beyond "first nonzero": there are no tolerances. Everything here is
//! O(n³) and sized for desk-scale problems.

use crate::field::{Field, Poly, Ring};

/// A dense rows×cols matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[R] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out: Matrix<R> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].add(&a.mul(&other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Block-diagonal join.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Kronecker product: entry ((i·p+k), (j·q+l)) = self[i,j]·other[k,l].
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] =
                            self[(i, j)].mul(&other[(k, l)]);
                    }
                }
            }
        }
        out
    }
}

impl<R: Ring> std::ops::Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R: Ring> std::ops::IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Row echelon data from one elimination pass.
pub struct Echelon<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    /// Reduced row echelon form with the pivot columns.
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m[(p, j)].clone();
                    let b = m[(row, j)].clone();
                    m[(p, j)] = b;
                    m[(row, j)] = a;
                }
            }
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].mul(&inv);
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let delta = factor.mul(&m[(row, j)]);
                        m[(r, j)] = m[(r, j)].sub(&delta);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of the right null space, as rows.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let ech = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![F::zero(); self.cols];
            vec[free] = F::one();
            for (c, p) in pivot_of_col.iter().enumerate() {
                if let Some(r) = p {
                    vec[c] = ech.matrix[(*r, free)].neg();
                }
            }
            basis.push(vec);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| ech.matrix[(i, n + j)].clone()))
    }

    /// Determinant by elimination.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if p != col {
                for j in 0..n {
                    let a = m[(p, j)].clone();
                    let b = m[(col, j)].clone();
                    m[(p, j)] = b;
                    m[(col, j)] = a;
                }
                det = det.neg();
            }
            det = det.mul(&m[(col, col)]);
            let inv = m[(col, col)].inv().unwrap();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].mul(&inv);
                for j in col..n {
                    let delta = factor.mul(&m[(col, j)]);
                    m[(r, j)] = m[(r, j)].sub(&delta);
                }
            }
        }
        det
    }

    /// Does `v` lie in the row span of `self`?
    pub fn row_span_contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.cols);
        let rank = self.rank();
        let mut aug = Matrix::zeros(self.rows + 1, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
        }
        for j in 0..self.cols {
            aug[(self.rows, j)] = v[j].clone();
        }
        aug.rank() == rank
    }
}

/// Lagrange interpolation: the unique polynomial of degree < points.len()
/// through the given (x, y) pairs, over any field.
pub fn lagrange_interpolate<F: Field>(points: &[(F, F)]) -> Poly<F> {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = Poly::constant(F::one());
        let mut den = F::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&Poly::from_coeffs(vec![xj.neg(), F::one()]));
            den = den.mul(&xi.sub(xj));
        }
        acc = acc.add(&num.scale(&yi.mul(&den.inv().expect("distinct interpolation nodes"))));
    }
    acc
}

/// Smith normal form over F[x]: the invariant factors of a polynomial
/// matrix, monic, each dividing the next, zeros dropped.
pub fn smith_invariant_factors<F: Field>(m: &Matrix<Poly<F>>) -> Vec<Poly<F>> {
    let mut m = m.clone();
    let (rows, cols) = (m.nrows(), m.ncols());
    let n = rows.min(cols);
    let mut diag: Vec<Poly<F>> = Vec::new();
    let mut r = 0;
    while r < n {
        // Find a nonzero entry of minimal degree in the remaining block.
        let mut pivot: Option<(usize, usize, usize)> = None;
        for i in r..rows {
            for j in r..cols {
                if let Some(d) = m[(i, j)].degree() {
                    if pivot.map_or(true, |(_, _, pd)| d < pd) {
                        pivot = Some((i, j, d));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            break;
        };
        swap_rows(&mut m, r, pi);
        swap_cols(&mut m, r, pj);

        // Reduce the pivot row and column; restart whenever a remainder
        // of smaller degree appears.
        loop {
            let mut clean = true;
            for i in r + 1..rows {
                if m[(i, r)].is_zero() {
                    continue;
                }
                let (q, rem) = m[(i, r)].div_rem(&m[(r, r)]);
                row_sub_mul(&mut m, i, r, &q);
                debug_assert_eq!(m[(i, r)], rem);
                if !rem.is_zero() {
                    swap_rows(&mut m, i, r);
                    clean = false;
                }
            }
            for j in r + 1..cols {
                if m[(r, j)].is_zero() {
                    continue;
                }
                let (q, rem) = m[(r, j)].div_rem(&m[(r, r)]);
                col_sub_mul(&mut m, j, r, &q);
                debug_assert_eq!(m[(r, j)], rem);
                if !rem.is_zero() {
                    swap_cols(&mut m, j, r);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }

        // Pivot must divide every remaining entry; if not, fold the
        // offending row into the pivot row and repeat.
        let mut divides_all = true;
        'scan: for i in r + 1..rows {
            for j in r + 1..cols {
                if m[(i, j)].is_zero() {
                    continue;
                }
                let (_, rem) = m[(i, j)].div_rem(&m[(r, r)]);
                if !rem.is_zero() {
                    let one = Poly::one();
                    row_add_mul(&mut m, r, i, &one);
                    divides_all = false;
                    break 'scan;
                }
            }
        }
        if !divides_all {
            continue;
        }
        diag.push(m[(r, r)].monic());
        r += 1;
    }
    diag
}

fn swap_rows<R: Ring>(m: &mut Matrix<R>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.ncols() {
        let x = m[(a, j)].clone();
        let y = m[(b, j)].clone();
        m[(a, j)] = y;
        m[(b, j)] = x;
    }
}

fn swap_cols<R: Ring>(m: &mut Matrix<R>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.nrows() {
        let x = m[(i, a)].clone();
        let y = m[(i, b)].clone();
        m[(i, a)] = y;
        m[(i, b)] = x;
    }
}

/// row[i] −= q·row[r]
fn row_sub_mul<F: Field>(m: &mut Matrix<Poly<F>>, i: usize, r: usize, q: &Poly<F>) {
    for j in 0..m.ncols() {
        let delta = q.mul(&m[(r, j)]);
        m[(i, j)] = m[(i, j)].sub(&delta);
    }
}

/// row[r] += q·row[i]
fn row_add_mul<F: Field>(m: &mut Matrix<Poly<F>>, r: usize, i: usize, q: &Poly<F>) {
    for j in 0..m.ncols() {
        let delta = q.mul(&m[(i, j)]);
        m[(r, j)] = m[(r, j)].add(&delta);
    }
}

/// col[j] −= q·col[r]
fn col_sub_mul<F: Field>(m: &mut Matrix<Poly<F>>, j: usize, r: usize, q: &Poly<F>) {
    for i in 0..m.nrows() {
        let delta = q.mul(&m[(i, r)]);
        m[(i, j)] = m[(i, j)].sub(&delta);
    }
}
