//! Sparse real-symmetric operators and a Lanczos ground-state solver.

use super::eigen::tridiagonal_ql;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Real symmetric matrix in compressed-sparse-row form. Both triangles are
/// stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseSymmetric<T> {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<T>,
}

impl<T: Real> SparseSymmetric<T> {
    /// Assemble from per-row entry lists; duplicate columns are summed and
    /// exact zeros dropped. Symmetry is checked entrywise.
    pub fn from_rows(
        dim: usize,
        mut rows: impl FnMut(usize, &mut Vec<(usize, T)>),
    ) -> Result<Self> {
        let mut row_ptr = Vec::with_capacity(dim + 1);
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        let mut buf = Vec::new();
        row_ptr.push(0);
        for i in 0..dim {
            buf.clear();
            rows(i, &mut buf);
            buf.sort_by_key(|&(j, _)| j);
            let mut k = 0;
            while k < buf.len() {
                let j = buf[k].0;
                if j >= dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: j + 1,
                    });
                }
                let mut v = T::zero();
                while k < buf.len() && buf[k].0 == j {
                    v += buf[k].1;
                    k += 1;
                }
                if v != T::zero() {
                    cols.push(j);
                    vals.push(v);
                }
            }
            row_ptr.push(cols.len());
        }
        let m = Self {
            dim,
            row_ptr,
            cols,
            vals,
        };
        m.check_symmetric()?;
        Ok(m)
    }

    fn check_symmetric(&self) -> Result<()> {
        let mut worst = T::zero();
        for i in 0..self.dim {
            for (j, v) in self.row_entries(i) {
                let d = (v - self.get(j, i)).abs();
                if d > worst {
                    worst = d;
                }
            }
        }
        let scale = self.vals.iter().fold(T::one(), |a, v| a.max(v.abs()));
        if worst > T::CONTRACT_TOL * scale {
            return Err(Error::NotHermitian {
                deviation: worst.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, T)> + '_ {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        self.cols[r.clone()]
            .iter()
            .copied()
            .zip(self.vals[r].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        match self.cols[r.clone()].binary_search(&j) {
            Ok(k) => self.vals[r.start + k],
            Err(_) => T::zero(),
        }
    }

    pub fn matvec_into(&self, x: &[T], y: &mut [T]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row_entries(i).map(|(j, v)| v * x[j]).sum();
        }
    }

    pub fn to_dense(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for (j, v) in self.row_entries(i) {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// Largest absolute row sum, an upper bound on the spectral radius.
    pub fn norm_bound(&self) -> T {
        (0..self.dim)
            .map(|i| self.row_entries(i).map(|(_, v)| v.abs()).sum::<T>())
            .fold(T::zero(), T::max)
    }
}

/// Lowest eigenpair of a sparse symmetric operator by Lanczos iteration with
/// full reorthogonalization.
///
/// Iteration stops once the Ritz residual `||A v - theta v||` drops below
/// `tol * max(1, ||A||)`. The search is confined to the orthogonal
/// complement of `deflate`, whose vectors must be orthonormal.
pub fn lanczos_lowest<T: Real>(
    a: &SparseSymmetric<T>,
    deflate: &[&[T]],
    tol: T,
) -> Result<(T, Vec<T>)> {
    let n = a.dim();
    if deflate.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: deflate[0].len(),
        });
    }
    if deflate.len() >= n {
        return Err(Error::InvalidParameter(
            "deflation space fills the whole space".into(),
        ));
    }
    let scale = a.norm_bound().max(T::one());
    let threshold = tol * scale;

    let mut q = start_vector::<T>(n);
    orthogonalize(&mut q, deflate.iter().copied());
    orthogonalize(&mut q, deflate.iter().copied());
    normalize(&mut q);

    let mut basis: Vec<Vec<T>> = Vec::new();
    let mut alpha: Vec<T> = Vec::new();
    let mut beta: Vec<T> = Vec::new();
    let mut w = vec![T::zero(); n];
    let max_steps = n - deflate.len();

    loop {
        a.matvec_into(&q, &mut w);
        let a_j = dot(&q, &w);
        basis.push(q);
        alpha.push(a_j);
        for _ in 0..2 {
            orthogonalize(
                &mut w,
                basis
                    .iter()
                    .map(Vec::as_slice)
                    .chain(deflate.iter().copied()),
            );
        }
        let b_j = norm(&w);
        let m = alpha.len();

        let exhausted = m == max_steps || b_j <= threshold * T::epsilon();
        if exhausted || m.is_multiple_of(4) || m < 4 {
            let (theta, s) = lowest_ritz(&alpha, &beta)?;
            let residual = b_j * s[m - 1].abs();
            if exhausted || residual <= threshold {
                let mut v = vec![T::zero(); n];
                for (qk, &sk) in basis.iter().zip(&s) {
                    for (vi, &x) in v.iter_mut().zip(qk) {
                        *vi += sk * x;
                    }
                }
                normalize(&mut v);
                return Ok((theta, v));
            }
        }
        beta.push(b_j);
        let inv = b_j.recip();
        q = w.iter().map(|&x| x * inv).collect();
    }
}

/// Smallest eigenvalue of the Lanczos tridiagonal and its eigenvector.
fn lowest_ritz<T: Real>(alpha: &[T], beta: &[T]) -> Result<(T, Vec<T>)> {
    let m = alpha.len();
    let mut d = alpha.to_vec();
    let mut e: Vec<T> = beta[..m - 1].to_vec();
    e.push(T::zero());
    let mut z = Matrix::<T>::identity(m);
    tridiagonal_ql(&mut d, &mut e, Some(&mut z))?;
    let k = (0..m)
        .min_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("finite Ritz values"))
        .expect("nonempty");
    Ok((d[k], z.row(k).to_vec()))
}

/// Deterministic start vector with no special symmetry.
fn start_vector<T: Real>(n: usize) -> Vec<T> {
    let mut s: u64 = 0x9e37_79b9_7f4a_7c15;
    (0..n)
        .map(|_| {
            s = s
                .wrapping_mul(6_364_136_223_846_793_005)
                .wrapping_add(1_442_695_040_888_963_407);
            let u = (s >> 11) as f64 / (1u64 << 53) as f64;
            T::lit(0.5 + u)
        })
        .collect()
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

fn norm<T: Real>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

fn normalize<T: Real>(a: &mut [T]) {
    let inv = norm(a).recip();
    for x in a {
        *x *= inv;
    }
}

fn orthogonalize<'a, T: Real>(w: &mut [T], against: impl Iterator<Item = &'a [T]>) {
    for v in against {
        let c = dot(v, w);
        for (wi, &vi) in w.iter_mut().zip(v) {
            *wi -= c * vi;
        }
    }
}
