//! Distinguished observable algebras and the purity of pure states
//! relative to them.

mod basis;
mod catalog;
mod purity;
mod schmidt;

pub use basis::{orthonormalize, ObservableBasis, DEPENDENCE_TOL};
pub use catalog::{
    gell_mann, make_full_traceless, make_local_traceless, make_su2_local, make_u2_pair_modes,
    spin_operators, u2_spin_operators, Spin,
};
pub use purity::{
    is_generalized_unentangled, purity, reduced_state, PurityResult, ReducedState, PURITY_SLACK,
};
pub use schmidt::schmidt_coefficients;
