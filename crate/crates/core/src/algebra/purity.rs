use crate::error::{Error, Result};
use crate::linalg::{expectation, State};
use crate::scalar::Real;

use super::basis::ObservableBasis;

/// Slack above one tolerated in purity values.
pub const PURITY_SLACK: f64 = 1e-9;

/// Expectation values `<x_i>` of the basis elements, in basis order.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedState<T> {
    pub coords: Vec<T>,
}

impl<T: Real> ReducedState<T> {
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn norm_sqr(&self) -> T {
        self.coords.iter().map(|&c| c * c).sum()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PurityResult<T> {
    pub value: T,
    pub basis: String,
}

pub fn reduced_state<T: Real>(
    psi: &State<T>,
    basis: &ObservableBasis<T>,
) -> Result<ReducedState<T>> {
    if psi.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: psi.dim(),
        });
    }
    let coords = basis
        .elements()
        .iter()
        .map(|x| expectation(psi, x))
        .collect::<Result<_>>()?;
    Ok(ReducedState { coords })
}

/// `K * sum_i <x_i>^2`.
pub fn purity<T: Real>(psi: &State<T>, basis: &ObservableBasis<T>) -> Result<PurityResult<T>> {
    let k = basis.require_norm_constant()?;
    let value = k * reduced_state(psi, basis)?.norm_sqr();
    Ok(PurityResult {
        value,
        basis: basis.name().to_owned(),
    })
}

/// Whether the reduced state is extremal, i.e. purity at least `1 - tol`.
pub fn is_generalized_unentangled<T: Real>(
    psi: &State<T>,
    basis: &ObservableBasis<T>,
    tol: T,
) -> Result<bool> {
    Ok(purity(psi, basis)?.value >= T::one() - tol)
}
