use num_complex::Complex;

use crate::bcs::MomentumGrid;
use crate::error::{Error, Result};
use crate::fock::{annihilator, hopping_matrix, pairing_matrix, MAX_DENSE_MODES};
use crate::linalg::Matrix;
use crate::scalar::Real;

use super::ground::GroundStateResult;

/// Dense Jordan-Wigner annihilation operators `c_j`, site 0 first.
pub fn jw_mode_operators<T: Real>(n_sites: usize) -> Result<Vec<Matrix<Complex<T>>>> {
    if n_sites > MAX_DENSE_MODES {
        return Err(Error::SizeLimit {
            what: "sites for dense Jordan-Wigner operators",
            requested: n_sites,
            limit: MAX_DENSE_MODES,
        });
    }
    (0..n_sites).map(|j| annihilator(j, n_sites)).collect()
}

/// Fourier phase `e^{-i k j}` with sites counted from one.
fn phase<T: Real>(k: T, site: usize) -> Complex<T> {
    Complex::from_polar(T::one(), -k * T::from_count(site + 1))
}

/// `C[k][k'] = <c_k^dag c_k'>` over the antiperiodic grid, ascending in `k`,
/// with `c_k^dag = N^{-1/2} sum_j e^{-ikj} c_j^dag`.
pub fn momentum_correlation_matrix<T: Real>(
    gs: &GroundStateResult<T>,
) -> Result<Matrix<Complex<T>>> {
    let n = gs.n_sites();
    let real_space = hopping_matrix(gs.state.amplitudes(), n);
    let grid = MomentumGrid::<T>::new(n)?;
    Ok(fourier(
        &real_space,
        grid.momenta(),
        |k, j| phase(k, j),
        |k, l| phase(k, l).conj(),
    ))
}

/// `F[k][k'] = <c_k^dag c_k'^dag>` on the same grid.
pub fn momentum_pairing_matrix<T: Real>(gs: &GroundStateResult<T>) -> Result<Matrix<Complex<T>>> {
    let n = gs.n_sites();
    let real_space = pairing_matrix(gs.state.amplitudes(), n);
    let grid = MomentumGrid::<T>::new(n)?;
    Ok(fourier(
        &real_space,
        grid.momenta(),
        |k, j| phase(k, j),
        |k, l| phase(k, l),
    ))
}

/// `(1/N) sum_{j,l} left(k, j) right(k', l) m[j][l]`.
fn fourier<T: Real>(
    m: &Matrix<Complex<T>>,
    momenta: &[T],
    left: impl Fn(T, usize) -> Complex<T>,
    right: impl Fn(T, usize) -> Complex<T>,
) -> Matrix<Complex<T>> {
    let n = m.rows();
    let inv_n = T::from_count(n).recip();
    let l = Matrix::from_fn(momenta.len(), n, |a, j| left(momenta[a], j));
    let r = Matrix::from_fn(n, momenta.len(), |l, b| right(momenta[b], l));
    let out = &(&l * m) * &r;
    out.scaled(Complex::new(inv_n, T::zero()))
}

/// Purity relative to the full `u(N)` algebra of hoppings `c_k^dag c_k'`,
/// `(4/N) sum_{k,k'} |<c_k^dag c_k'> - delta_{kk'}/2|^2`.
pub fn purity_un_from_state<T: Real>(gs: &GroundStateResult<T>) -> Result<T> {
    let c = momentum_correlation_matrix(gs)?;
    let n = c.rows();
    let half = Complex::new(T::lit(0.5), T::zero());
    let mut sum = T::zero();
    for a in 0..n {
        for b in 0..n {
            let d = if a == b { c[(a, b)] - half } else { c[(a, b)] };
            sum += d.norm_sqr();
        }
    }
    Ok(T::lit(4.0) * sum / T::from_count(n))
}
