//! Dense Hermitian eigensolvers.
//!
//! Both routines reduce the matrix to real symmetric tridiagonal form with
//! Householder reflections, then either run implicit QL for the full spectrum
//! or Sturm bisection plus inverse iteration when only the bottom of the
//! spectrum is needed. Complex off-diagonals left by the reduction are rotated
//! real by a diagonal unitary of phases.

use num_complex::Complex;
use num_traits::{Float, One, Zero};

use super::matrix::Matrix;
use super::state::State;
use crate::error::{Error, Result};
use crate::scalar::{Field, Real};

/// Default absolute tolerance on the gap below which a ground state is
/// reported as degenerate.
pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-10;

const MAX_QL_SWEEPS: usize = 100;

/// Full spectral decomposition `M = V diag(eigenvalues) V†`.
#[derive(Clone, Debug)]
pub struct EigenResult<E: Field> {
    /// Ascending.
    pub eigenvalues: Vec<E::Real>,
    /// Orthonormal eigenvectors stored as columns, in eigenvalue order.
    pub eigenvectors: Matrix<E>,
}

impl<E: Field> EigenResult<E> {
    pub fn eigenvector(&self, i: usize) -> Vec<E> {
        self.eigenvectors.column(i)
    }

    /// `V diag(f(lambda)) V†` for a real-valued spectral function.
    pub fn reconstruct_with(&self, f: impl Fn(E::Real) -> E) -> Matrix<E> {
        let v = &self.eigenvectors;
        let n = v.rows();
        let weights: Vec<E> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        Matrix::from_fn(n, n, |i, j| {
            let (ri, rj) = (v.row(i), v.row(j));
            (0..n).map(|k| ri[k] * weights[k] * rj[k].conj()).sum()
        })
    }
}

/// Lowest eigenpair of a Hermitian matrix together with the spectral gap.
#[derive(Clone, Debug)]
pub struct GroundState<T> {
    pub energy: T,
    pub state: State<T>,
    pub degenerate: bool,
    /// `lambda_1 - lambda_0`; infinite for a 1x1 matrix.
    pub gap: T,
}

/// Bottom of the spectrum of a Hermitian matrix: the two lowest eigenvalues
/// and a unit eigenvector for the lowest.
#[derive(Clone, Debug)]
pub struct LowestEigenpair<E: Field> {
    pub value: E::Real,
    /// Second-lowest eigenvalue, `None` for 1x1 input.
    pub next_value: Option<E::Real>,
    pub vector: Vec<E>,
}

/// Full eigendecomposition of a Hermitian matrix, eigenvalues ascending.
pub fn hermitian_eig<E: Field>(m: &Matrix<E>) -> Result<EigenResult<E>> {
    m.ensure_hermitian()?;
    let n = m.rows();
    let tri = Tridiagonal::reduce(m.clone());
    let mut d = tri.diag.clone();
    let mut e = tri.off.clone();
    e.push(E::Real::zero());
    let mut z = Matrix::<E::Real>::identity(n);
    tridiagonal_ql(&mut d, &mut e, Some(&mut z))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).expect("finite eigenvalues"));

    let mut vectors = Matrix::<E>::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        let v = tri.back_transform(z.row(src));
        for (i, x) in v.into_iter().enumerate() {
            vectors[(i, col)] = x;
        }
    }
    Ok(EigenResult {
        eigenvalues: order.iter().map(|&i| d[i]).collect(),
        eigenvectors: vectors,
    })
}

/// The `count` smallest eigenvalues, ascending.
pub fn lowest_eigenvalues<E: Field>(m: &Matrix<E>, count: usize) -> Result<Vec<E::Real>> {
    m.ensure_hermitian()?;
    let tri = Tridiagonal::reduce(m.clone());
    Ok((0..count.min(m.rows())).map(|j| tri.bisect(j)).collect())
}

/// Lowest eigenpair via tridiagonal bisection and inverse iteration; avoids
/// the cubic cost of accumulating every eigenvector.
pub fn lowest_eigenpair<E: Field>(m: &Matrix<E>) -> Result<LowestEigenpair<E>> {
    m.ensure_hermitian()?;
    let n = m.rows();
    let tri = Tridiagonal::reduce(m.clone());
    let value = tri.bisect(0);
    let next_value = (n > 1).then(|| tri.bisect(1));
    let y = tri.inverse_iteration(value);
    Ok(LowestEigenpair {
        value,
        next_value,
        vector: tri.back_transform(&y),
    })
}

/// Ground state of a Hermitian Hamiltonian. The degenerate flag is set when
/// the gap to the first excited level is below `degeneracy_tol`.
pub fn ground_state<T: Real>(h: &Matrix<Complex<T>>, degeneracy_tol: T) -> Result<GroundState<T>> {
    h.ensure_hermitian()?;
    let (value, next, vector) = match h.to_real_exact() {
        Some(real) => {
            let p = lowest_eigenpair(&real)?;
            (
                p.value,
                p.next_value,
                p.vector.into_iter().map(Field::to_complex).collect(),
            )
        }
        None => {
            let p = lowest_eigenpair(h)?;
            (p.value, p.next_value, p.vector)
        }
    };
    let gap = next.map_or(T::infinity(), |n| n - value);
    Ok(GroundState {
        energy: value,
        state: State::normalized(vector)?,
        degenerate: gap < degeneracy_tol,
        gap,
    })
}

/// Householder reduction `A = Q D S D† Q†` with `S` real symmetric
/// tridiagonal, `D` a diagonal of phases and `Q` a product of reflectors.
struct Tridiagonal<E: Field> {
    diag: Vec<E::Real>,
    /// Nonnegative sub-diagonal of `S`, length `n - 1`.
    off: Vec<E::Real>,
    phases: Vec<E>,
    reflectors: Vec<Reflector<E>>,
}

/// `P = I - beta w w†` acting on indices `start..`.
struct Reflector<E: Field> {
    start: usize,
    w: Vec<E>,
    beta: E::Real,
}

impl<E: Field> Reflector<E> {
    fn apply(&self, v: &mut [E]) {
        let tail = &mut v[self.start..];
        let proj = dot_conj(&self.w, tail).scale(self.beta);
        for (t, &w) in tail.iter_mut().zip(&self.w) {
            *t -= w * proj;
        }
    }
}

impl<E: Field> Tridiagonal<E> {
    fn reduce(mut a: Matrix<E>) -> Self {
        let n = a.rows();
        let two = E::Real::lit(2.0);
        let mut reflectors = Vec::with_capacity(n.saturating_sub(2));
        let mut sub: Vec<E> = Vec::with_capacity(n.saturating_sub(1));
        let mut p = vec![E::zero(); n];

        for k in 0..n.saturating_sub(2) {
            let s = k + 1;
            let m = n - s;
            // Column k below the diagonal, read from row k by Hermiticity.
            let mut w: Vec<E> = a.row(k)[s..].iter().map(|x| x.conj()).collect();
            let tail_sqr: E::Real = w[1..].iter().map(|x| x.norm_sqr()).sum();
            if tail_sqr == E::Real::zero() {
                sub.push(w[0]);
                continue;
            }
            let x0 = w[0];
            let x0_abs = x0.modulus();
            let alpha = (x0.norm_sqr() + tail_sqr).sqrt();
            let ph = x0.phase();
            w[0] += ph.scale(alpha);
            let beta = two / (two * alpha * (alpha + x0_abs));
            sub.push(-ph.scale(alpha));

            // p = beta B w over the trailing block B = a[s.., s..].
            for i in 0..m {
                p[i] = dot(&a.row(s + i)[s..], &w).scale(beta);
            }
            let half_k = dot_conj(&w, &p[..m]).scale(beta / two);
            // q = p - K w, stored back into p.
            for i in 0..m {
                p[i] -= half_k * w[i];
            }
            // B -= w q† + q w†
            for i in 0..m {
                let (wi, qi) = (w[i], p[i]);
                let row = &mut a.row_mut(s + i)[s..];
                for ((b, &wj), &qj) in row.iter_mut().zip(&w).zip(&p[..m]) {
                    *b -= wi * qj.conj() + qi * wj.conj();
                }
            }
            reflectors.push(Reflector { start: s, w, beta });
        }
        if n >= 2 {
            sub.push(a[(n - 1, n - 2)]);
        }

        let diag = (0..n).map(|i| a[(i, i)].re()).collect();
        let mut phases = Vec::with_capacity(n);
        let mut off = Vec::with_capacity(sub.len());
        if n > 0 {
            phases.push(E::one());
        }
        for (k, &e) in sub.iter().enumerate() {
            off.push(e.modulus());
            phases.push(phases[k] * e.phase());
        }
        Self {
            diag,
            off,
            phases,
            reflectors,
        }
    }

    fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Map an eigenvector of `S` back to the original basis: `Q D y`.
    fn back_transform(&self, y: &[E::Real]) -> Vec<E> {
        let mut v: Vec<E> = y
            .iter()
            .zip(&self.phases)
            .map(|(&yi, &d)| d.scale(yi))
            .collect();
        for r in self.reflectors.iter().rev() {
            r.apply(&mut v);
        }
        v
    }

    fn norm_bound(&self) -> E::Real {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let left = if i > 0 {
                    self.off[i - 1]
                } else {
                    E::Real::zero()
                };
                let right = if i + 1 < n {
                    self.off[i]
                } else {
                    E::Real::zero()
                };
                self.diag[i].abs() + left + right
            })
            .fold(E::Real::zero(), |a, b| a.max(b))
    }

    fn pivmin(&self) -> E::Real {
        let emax = self.off.iter().fold(E::Real::zero(), |a, &b| a.max(b * b));
        E::Real::min_positive_value() * emax.max(E::Real::one())
    }

    /// Number of eigenvalues strictly below `x` (Sturm sequence count).
    fn count_below(&self, x: E::Real, pivmin: E::Real) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..self.dim() {
            if i > 0 {
                q = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / q;
            }
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < E::Real::zero() {
                count += 1;
            }
        }
        count
    }

    /// The `j`-th smallest eigenvalue (0-based) by bisection.
    fn bisect(&self, j: usize) -> E::Real {
        let n = self.dim();
        let zero = E::Real::zero();
        let (mut lo, mut hi) = (E::Real::infinity(), E::Real::neg_infinity());
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1] } else { zero };
            let right = if i + 1 < n { self.off[i] } else { zero };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        let pivmin = self.pivmin();
        let eps = E::Real::epsilon();
        let half = E::Real::lit(0.5);
        let widen = (hi - lo).max(lo.abs().max(hi.abs())) * eps * E::Real::lit(4.0) + pivmin;
        lo -= widen;
        hi += widen;
        for _ in 0..256 {
            let mid = half * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let tol = E::Real::lit(2.0) * eps * lo.abs().max(hi.abs()) + pivmin;
            if hi - lo <= tol {
                break;
            }
            if self.count_below(mid, pivmin) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        half * (lo + hi)
    }

    /// Unit eigenvector of `S` for the (accurately known) eigenvalue `lambda`.
    fn inverse_iteration(&self, lambda: E::Real) -> Vec<E::Real> {
        let n = self.dim();
        let one = E::Real::one();
        if n == 1 {
            return vec![one];
        }
        let tiny = E::Real::epsilon() * self.norm_bound().max(one);
        let lu = TridiagonalLu::factor(&self.diag, &self.off, lambda, tiny);
        // Deterministic start vector with no special alignment.
        let mut y: Vec<E::Real> = (0..n)
            .map(|i| one + E::Real::lit(0.5) * E::Real::from_count(i % 7).sin())
            .collect();
        for _ in 0..4 {
            lu.solve(&mut y);
            let norm = y.iter().map(|&v| v * v).sum::<E::Real>().sqrt();
            let inv = norm.recip();
            y.iter_mut().for_each(|v| *v *= inv);
        }
        y
    }
}

/// LU factorization with partial pivoting of `S - sigma I` for tridiagonal `S`.
struct TridiagonalLu<T> {
    dl: Vec<T>,
    d: Vec<T>,
    du: Vec<T>,
    du2: Vec<T>,
    swapped: Vec<bool>,
}

impl<T: Real> TridiagonalLu<T> {
    fn factor(diag: &[T], off: &[T], sigma: T, tiny: T) -> Self {
        let n = diag.len();
        let mut d: Vec<T> = diag.iter().map(|&x| x - sigma).collect();
        let mut dl = off.to_vec();
        let mut du = off.to_vec();
        let mut du2 = vec![T::zero(); n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n - 1 {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == T::zero() {
                    d[i] = tiny;
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] = -fact * du[i + 1];
                }
                swapped[i] = true;
            }
        }
        for x in d.iter_mut() {
            if x.abs() < tiny {
                *x = if *x < T::zero() { -tiny } else { tiny };
            }
        }
        Self {
            dl,
            d,
            du,
            du2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [T]) {
        let n = b.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                b.swap(i, i + 1);
            }
            b[i + 1] -= self.dl[i] * b[i];
        }
        b[n - 1] /= self.d[n - 1];
        if n >= 2 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

/// Implicit QL with Wilkinson shifts on a real symmetric tridiagonal matrix.
/// `e[i]` couples `d[i]` and `d[i+1]`; `e` has length `n` with a trailing
/// zero. Rows of `z` are rotated alongside, so starting from the identity they
/// end up holding the eigenvectors.
pub(super) fn tridiagonal_ql<T: Real>(
    d: &mut [T],
    e: &mut [T],
    mut z: Option<&mut Matrix<T>>,
) -> Result<()> {
    let n = d.len();
    let (zero, one, two) = (T::zero(), T::one(), T::lit(2.0));
    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= T::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > MAX_QL_SWEEPS {
                return Err(Error::NoConvergence(MAX_QL_SWEEPS));
            }
            let mut g = (d[l + 1] - d[l]) / (two * e[l]);
            let mut r = g.hypot(one);
            let signed_r = if g >= zero { r } else { -r };
            g = d[m] - d[l] + e[l] / (g + signed_r);
            let (mut s, mut c, mut p) = (one, one, zero);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == zero {
                    d[i + 1] -= p;
                    e[m] = zero;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + two * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    rotate_rows(z, i, s, c);
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = zero;
        }
    }
    Ok(())
}

fn rotate_rows<T: Real>(z: &mut Matrix<T>, i: usize, s: T, c: T) {
    let cols = z.cols();
    let data = z.as_mut_slice();
    let (head, tail) = data.split_at_mut((i + 1) * cols);
    let row_i = &mut head[i * cols..];
    let row_next = &mut tail[..cols];
    for (a, b) in row_i.iter_mut().zip(row_next.iter_mut()) {
        let f = *b;
        *b = s * *a + c * f;
        *a = c * *a - s * f;
    }
}

/// `sum_i a_i b_i` with independent accumulators.
#[inline]
fn dot<E: Field>(a: &[E], b: &[E]) -> E {
    let mut acc = [E::zero(); 4];
    let ca = a.chunks_exact(4);
    let cb = b.chunks_exact(4);
    let (ra, rb) = (ca.remainder(), cb.remainder());
    for (x, y) in ca.zip(cb) {
        acc[0] += x[0] * y[0];
        acc[1] += x[1] * y[1];
        acc[2] += x[2] * y[2];
        acc[3] += x[3] * y[3];
    }
    let mut total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (&x, &y) in ra.iter().zip(rb) {
        total += x * y;
    }
    total
}

/// `sum_i conj(a_i) b_i`.
#[inline]
fn dot_conj<E: Field>(a: &[E], b: &[E]) -> E {
    a.iter().zip(b).map(|(&x, &y)| x.conj() * y).sum()
}
