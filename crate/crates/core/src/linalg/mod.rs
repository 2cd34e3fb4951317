//! Dense complex linear algebra: matrices, pure states, Hermitian
//! eigensolvers, partial traces and unitary evolution.

mod eigen;
mod evolve;
mod matrix;
mod reduce;
mod sparse;
mod state;
mod svd;

pub use eigen::{
    ground_state, hermitian_eig, lowest_eigenpair, lowest_eigenvalues, EigenResult, GroundState,
    LowestEigenpair, DEFAULT_DEGENERACY_TOL,
};
pub use evolve::evolve;
pub use matrix::{embed_site, kron, kron_all, pauli, Matrix, MAX_KRON_ENTRIES};
pub use reduce::{density_trace, partial_trace};
pub use sparse::{lanczos_lowest, SparseSymmetric};
pub use state::{expectation, State, MAX_STATE_DIM};
pub use svd::singular_values;

#[allow(unused_imports)]
pub(crate) use state::expectation_unchecked;
