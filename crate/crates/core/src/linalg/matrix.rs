use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;
use num_traits::{Float, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Real};

/// Largest number of entries a Kronecker product may produce.
pub const MAX_KRON_ENTRIES: usize = 1 << 24;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Field> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameter(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Build from nested rows. Panics on ragged input; intended for literals.
    pub fn from_rows(rows: &[&[E]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().copied()).collect();
        Self {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![E::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = E::one();
        }
        m
    }

    pub fn from_diagonal(diag: &[E]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn as_slice(&self) -> &[E] {
        &self.data
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [E] {
        &mut self.data
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [E] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn into_vec(self) -> Vec<E> {
        self.data
    }

    pub fn map<F: Field>(&self, f: impl Fn(E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn scaled(&self, s: E) -> Self {
        self.map(|x| x * s)
    }

    pub fn trace(&self) -> E {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn diagonal(&self) -> Vec<E> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)])
            .collect()
    }

    pub fn frobenius_norm(&self) -> E::Real {
        self.data
            .iter()
            .map(|x| x.norm_sqr())
            .sum::<E::Real>()
            .sqrt()
    }

    /// Largest elementwise modulus.
    pub fn max_abs(&self) -> E::Real {
        self.data
            .iter()
            .map(|x| x.modulus())
            .fold(E::Real::zero(), |a, b| a.max(b))
    }

    /// Largest elementwise deviation `|a_ij - b_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> E::Real {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).modulus())
            .fold(E::Real::zero(), |a, b| a.max(b))
    }

    /// Largest elementwise deviation from Hermiticity, `max |m_ij - conj(m_ji)|`.
    pub fn hermiticity_defect(&self) -> E::Real {
        if !self.is_square() {
            return E::Real::infinity();
        }
        let n = self.rows;
        let mut worst = E::Real::zero();
        for i in 0..n {
            for j in i..n {
                let d = (self[(i, j)] - self[(j, i)].conj()).modulus();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: E::Real) -> bool {
        self.is_square() && self.hermiticity_defect() <= tol
    }

    /// Hermiticity check at the default contract slack, scaled by the entry
    /// magnitude when that exceeds one.
    pub fn ensure_hermitian(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let defect = self.hermiticity_defect();
        let tol = E::Real::CONTRACT_TOL * self.max_abs().max(E::Real::one());
        if defect > tol {
            return Err(Error::NotHermitian {
                deviation: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let mut out = Self::zeros(n, p);
        for i in 0..n {
            let out_row = &mut out.data[i * p..(i + 1) * p];
            for k in 0..m {
                let a = self.data[i * m + k];
                if a == E::zero() {
                    continue;
                }
                let b_row = &other.data[k * p..(k + 1) * p];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum())
            .collect())
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(&self.matmul(other)? - &other.matmul(self)?)
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        Ok(&self.matmul(other)? + &other.matmul(self)?)
    }

    /// Trace inner product `tr(A† B)`.
    pub fn trace_inner(&self, other: &Self) -> E {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| a.conj() * b)
            .sum()
    }

    /// Principal submatrix on the given (ordered) index set.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), indices.len(), |i, j| {
            self[(indices[i], indices[j])]
        })
    }

    /// Lift to complex entries.
    pub fn to_complex(&self) -> Matrix<Complex<E::Real>> {
        self.map(|x| x.to_complex())
    }

    /// Real parts, provided every imaginary part vanishes exactly.
    pub fn to_real_exact(&self) -> Option<Matrix<E::Real>> {
        if self.data.iter().any(|x| x.im() != E::Real::zero()) {
            return None;
        }
        Some(self.map(|x| x.re()))
    }
}

/// Kronecker product. Entry `[(i*p + k), (j*q + l)] = a[i,j] * b[k,l]` for
/// `b` of shape `p x q`, so `a` occupies the more significant index digits.
pub fn kron<E: Field>(a: &Matrix<E>, b: &Matrix<E>) -> Result<Matrix<E>> {
    let rows = a.rows.checked_mul(b.rows);
    let cols = a.cols.checked_mul(b.cols);
    let entries = rows.zip(cols).and_then(|(r, c)| r.checked_mul(c));
    match entries {
        Some(n) if n <= MAX_KRON_ENTRIES => {}
        other => {
            return Err(Error::SizeLimit {
                what: "Kronecker product entries",
                requested: other.unwrap_or(usize::MAX),
                limit: MAX_KRON_ENTRIES,
            })
        }
    }
    let (p, q) = (b.rows, b.cols);
    let (rows, cols) = (a.rows * p, a.cols * q);
    let mut out = Matrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let aij = a[(i, j)];
            if aij == E::zero() {
                continue;
            }
            for k in 0..p {
                let dst = (i * p + k) * cols + j * q;
                for (o, &bkl) in out.data[dst..dst + q].iter_mut().zip(b.row(k)) {
                    *o = aij * bkl;
                }
            }
        }
    }
    Ok(out)
}

/// Kronecker product of a list, left to right.
pub fn kron_all<E: Field>(factors: &[Matrix<E>]) -> Result<Matrix<E>> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("empty Kronecker product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, m| kron(&acc, m))
}

/// Embed a single-site operator at `site` of an `n_sites` register of
/// `d`-level sites. Sites are little-endian: site 0 is the least significant
/// digit of the basis index, hence the rightmost Kronecker factor.
pub fn embed_site<E: Field>(op: &Matrix<E>, site: usize, n_sites: usize) -> Result<Matrix<E>> {
    if !op.is_square() {
        return Err(Error::NotSquare {
            rows: op.rows,
            cols: op.cols,
        });
    }
    if site >= n_sites {
        return Err(Error::InvalidSubsystem(format!(
            "site {site} out of range for {n_sites} sites"
        )));
    }
    let d = op.rows;
    let factors: Vec<Matrix<E>> = (0..n_sites)
        .rev()
        .map(|s| {
            if s == site {
                op.clone()
            } else {
                Matrix::identity(d)
            }
        })
        .collect();
    kron_all(&factors)
}

impl<E: Field> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E: Field> IndexMut<(usize, usize)> for Matrix<E> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

impl<E: Field> Add for &Matrix<E> {
    type Output = Matrix<E>;
    fn add(self, rhs: Self) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<E: Field> Sub for &Matrix<E> {
    type Output = Matrix<E>;
    fn sub(self, rhs: Self) -> Matrix<E> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<E: Field> Mul for &Matrix<E> {
    type Output = Matrix<E>;
    /// Panics on shape mismatch; use [`Matrix::matmul`] for a checked product.
    fn mul(self, rhs: Self) -> Matrix<E> {
        self.matmul(rhs).expect("matrix shapes must agree")
    }
}

/// Pauli matrices in the little-endian spin convention used throughout the
/// crate: local index 0 is spin-down (empty), index 1 is spin-up (occupied).
pub mod pauli {
    use super::*;

    pub fn x<T: Real>() -> Matrix<Complex<T>> {
        let (o, l) = (Complex::zero(), Complex::one());
        Matrix::from_rows(&[&[o, l], &[l, o]])
    }

    /// `sigma_y = -i (sigma_+ - sigma_-)` with `sigma_+ |0> = |1>`.
    pub fn y<T: Real>() -> Matrix<Complex<T>> {
        let o = Complex::zero();
        let i = Complex::i();
        Matrix::from_rows(&[&[o, i], &[-i, o]])
    }

    pub fn z<T: Real>() -> Matrix<Complex<T>> {
        let (o, l) = (Complex::zero(), Complex::<T>::one());
        Matrix::from_rows(&[&[-l, o], &[o, l]])
    }

    /// Raising operator `|1><0|`.
    pub fn plus<T: Real>() -> Matrix<Complex<T>> {
        let (o, l) = (Complex::zero(), Complex::one());
        Matrix::from_rows(&[&[o, o], &[l, o]])
    }
}
