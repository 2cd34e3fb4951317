use num_complex::Complex;

use super::eigen::hermitian_eig;
use super::matrix::Matrix;
use super::state::State;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `exp(-i h t) |psi>` through the eigendecomposition of the Hermitian
/// generator `h`. The result is not renormalized.
pub fn evolve<T: Real>(psi: &State<T>, h: &Matrix<Complex<T>>, t: T) -> Result<State<T>> {
    if h.rows() != psi.dim() || h.cols() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: h.rows(),
        });
    }
    let eig = hermitian_eig(h)?;
    let v = &eig.eigenvectors;
    let n = psi.dim();
    let amps = psi.amplitudes();
    // Coefficients in the eigenbasis, each advanced by its phase.
    let coeffs: Vec<Complex<T>> = (0..n)
        .map(|k| {
            let c: Complex<T> = (0..n).map(|i| v[(i, k)].conj() * amps[i]).sum();
            c * Complex::from_polar(T::one(), -eig.eigenvalues[k] * t)
        })
        .collect();
    let out = (0..n)
        .map(|i| v.row(i).iter().zip(&coeffs).map(|(&a, &c)| a * c).sum())
        .collect();
    Ok(State::from_raw(out))
}
