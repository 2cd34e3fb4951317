//! Exact diagonalization of the periodic anisotropic XY chain in a
//! transverse field.

mod ground;
mod hamiltonian;
mod modes;
mod observables;

pub use ground::{
    ground_state_sector, ground_state_sector_with_tol, GroundStateResult, LANCZOS_TOL,
};
pub use hamiltonian::{
    build_hamiltonian, sector_block, sector_indices, z2_operator, ChainParams, MAX_ED_SITES,
};
pub use modes::{
    jw_mode_operators, momentum_correlation_matrix, momentum_pairing_matrix, purity_un_from_state,
};
pub use observables::{concurrence, magnetization_x, two_site_rdm, xx_correlator, PSD_TOL};
