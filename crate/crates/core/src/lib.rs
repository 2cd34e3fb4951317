//! Generalized entanglement relative to distinguished observable algebras.
//!
//! The crate measures how entangled a pure state looks to an observer who
//! can only access a chosen set of Hermitian observables, through the
//! quadratic purity of the state's expectation-value vector. It ships the
//! standard example algebras (local `su(2)`, full `su(d)`, fermionic `u(2)`)
//! and applies the `u(N)` purity to the ground state of the periodic
//! anisotropic XY chain in a transverse field, both by exact
//! diagonalization and through the free-fermion (Bogoliubov) solution.
//!
//! All numerics are generic over the real scalar (`f32` or `f64`); the
//! aliases below fix the common `f64` instantiations.
//!
//! ```
//! use genent::algebra::{make_su2_local, purity, Spin};
//! use genent::{StateVector, C64};
//!
//! let local = make_su2_local(2, Spin::Half).unwrap();
//! let h = 0.5f64.sqrt();
//! let bell = StateVector::new(vec![
//!     C64::new(0.0, 0.0),
//!     C64::new(h, 0.0),
//!     C64::new(h, 0.0),
//!     C64::new(0.0, 0.0),
//! ])
//! .unwrap();
//! assert!(purity(&bell, &local).unwrap().value < 1e-15);
//! ```

pub mod algebra;
pub mod bcs;
pub mod chain;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Field, Real};

pub type C64 = num_complex::Complex<f64>;
pub type ComplexMatrix = linalg::Matrix<C64>;
pub type RealMatrix = linalg::Matrix<f64>;
pub type StateVector = linalg::State<f64>;
pub type EigenResult = linalg::EigenResult<C64>;
pub type ObservableBasis = algebra::ObservableBasis<f64>;
pub type ReducedState = algebra::ReducedState<f64>;
pub type PurityResult = algebra::PurityResult<f64>;
pub type ChainParams = chain::ChainParams<f64>;
pub type GroundStateResult = chain::GroundStateResult<f64>;
pub type MomentumGrid = bcs::MomentumGrid<f64>;
pub type BogoliubovSolution = bcs::BogoliubovSolution<f64>;
pub type PurityCurvePoint = bcs::PurityCurvePoint<f64>;

pub type C32 = num_complex::Complex<f32>;
pub type ComplexMatrix32 = linalg::Matrix<C32>;
pub type StateVector32 = linalg::State<f32>;
