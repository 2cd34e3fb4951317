use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, kron, partial_trace, pauli, singular_values, Matrix};
use crate::scalar::Real;

use super::ground::GroundStateResult;

/// Eigenvalues of an input density matrix below `-PSD_TOL` are rejected.
pub const PSD_TOL: f64 = 1e-9;

fn check_site(gs: &GroundStateResult<impl Real>, site: usize) -> Result<()> {
    if site >= gs.n_sites() {
        return Err(Error::InvalidSubsystem(format!(
            "site {site} out of range for {} sites",
            gs.n_sites()
        )));
    }
    Ok(())
}

/// Reduced state of sites `i` and `j` (0-based); site `i` is the less
/// significant index digit of the 4x4 result.
pub fn two_site_rdm<T: Real>(
    gs: &GroundStateResult<T>,
    i: usize,
    j: usize,
) -> Result<Matrix<Complex<T>>> {
    check_site(gs, i)?;
    check_site(gs, j)?;
    if i == j {
        return Err(Error::InvalidSubsystem(format!(
            "sites must differ, got {i} twice"
        )));
    }
    partial_trace(&gs.state, &vec![2; gs.n_sites()], &[i, j])
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// The decreasing `lambda_i` are the square roots of the eigenvalues of
/// `rho rho~`, with `rho~ = (sy x sy) rho* (sy x sy)` and conjugation in the
/// computational basis. They are obtained as the singular values of
/// `sqrt(rho) sqrt(rho~)`, which keeps exact zeros from turning into
/// square roots of round-off.
pub fn concurrence<T: Real>(rho: &Matrix<Complex<T>>) -> Result<T> {
    if rho.rows() != 4 || rho.cols() != 4 {
        return Err(Error::InvalidDensityMatrix(format!(
            "expected 4x4, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let eig = hermitian_eig(rho)?;
    let trace: T = eig.eigenvalues.iter().copied().sum();
    if (trace - T::one()).abs() > T::lit(PSD_TOL) {
        return Err(Error::InvalidDensityMatrix(format!(
            "trace {trace}, expected 1"
        )));
    }
    if eig.eigenvalues[0] < -T::lit(PSD_TOL) {
        return Err(Error::InvalidDensityMatrix(format!(
            "negative eigenvalue {}",
            eig.eigenvalues[0]
        )));
    }
    let sqrt_rho = eig.reconstruct_with(|l| Complex::new(l.max(T::zero()).sqrt(), T::zero()));
    let yy = kron(&pauli::y::<T>(), &pauli::y())?;
    let sqrt_tilde = &(&yy * &sqrt_rho.conj()) * &yy;
    let lambda = singular_values(&(&sqrt_rho * &sqrt_tilde))?;
    let c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    Ok(c.max(T::zero()).min(T::one()))
}

/// `<sx_i sx_j>` in the ground state (0-based sites).
pub fn xx_correlator<T: Real>(gs: &GroundStateResult<T>, i: usize, j: usize) -> Result<T> {
    check_site(gs, i)?;
    check_site(gs, j)?;
    if i == j {
        return Ok(T::one());
    }
    let mask = (1usize << i) | (1usize << j);
    let amps = gs.state.amplitudes();
    let value: Complex<T> = amps
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(b, &a)| amps[b ^ mask].conj() * a)
        .sum();
    Ok(value.re)
}

/// Finite-size order parameter `sqrt(max(0, <sx_0 sx_{N/2}>))`.
pub fn magnetization_x<T: Real>(gs: &GroundStateResult<T>) -> Result<T> {
    Ok(xx_correlator(gs, 0, gs.n_sites() / 2)?
        .max(T::zero())
        .sqrt())
}
