use num_complex::Complex;
use num_traits::Zero;

use crate::error::Result;
use crate::linalg::{lanczos_lowest, State, DEFAULT_DEGENERACY_TOL};
use crate::scalar::Real;

use super::hamiltonian::{sector_block, sector_indices, ChainParams};

/// Lanczos stopping threshold on the Ritz residual, relative to `||H||`.
pub const LANCZOS_TOL: f64 = 1e-13;

/// Lowest state of the chain in the `Z2 = +1` sector.
#[derive(Clone, Debug)]
pub struct GroundStateResult<T> {
    pub params: ChainParams<T>,
    pub energy: T,
    /// Full `2^N` amplitude vector, zero outside the sector.
    pub state: State<T>,
    pub z2: i8,
    /// Set when the next level inside the sector lies within the
    /// degeneracy tolerance.
    pub degenerate_in_sector: bool,
    /// Lowest energy of the `Z2 = -1` sector minus `energy`. Negative when
    /// that sector holds the global ground state.
    pub gap_to_other_sector: T,
}

impl<T: Real> GroundStateResult<T> {
    pub fn n_sites(&self) -> usize {
        self.params.n_sites()
    }
}

/// Diagonalize `H` inside the `Z2 = +1` sector.
pub fn ground_state_sector<T: Real>(p: &ChainParams<T>) -> Result<GroundStateResult<T>> {
    ground_state_sector_with_tol(p, T::lit(DEFAULT_DEGENERACY_TOL))
}

pub fn ground_state_sector_with_tol<T: Real>(
    p: &ChainParams<T>,
    degeneracy_tol: T,
) -> Result<GroundStateResult<T>> {
    let tol = T::lit(LANCZOS_TOL);
    let z2 = 1i8;
    let block = sector_block(p, z2)?;
    let (energy, v0) = lanczos_lowest(&block, &[], tol)?;
    let (next, _) = lanczos_lowest(&block, &[&v0], tol)?;
    let (other, _) = lanczos_lowest(&sector_block(p, -z2)?, &[], tol)?;

    let mut amps = vec![Complex::zero(); 1 << p.n_sites()];
    for (&b, &x) in sector_indices(p.n_sites(), z2)?.iter().zip(&v0) {
        amps[b] = Complex::new(x, T::zero());
    }
    Ok(GroundStateResult {
        params: *p,
        energy,
        state: State::normalized(amps)?,
        z2,
        degenerate_in_sector: next - energy < degeneracy_tol,
        gap_to_other_sector: other - energy,
    })
}
