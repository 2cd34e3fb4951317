use num_complex::Complex;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{Field, Real};

/// Largest state-vector dimension accepted by pure-state operations.
pub const MAX_STATE_DIM: usize = 1 << 20;

/// Normalized pure state in a fixed computational basis.
///
/// For registers of qubits or fermionic modes, bit `j` of the basis index is
/// the spin-up / occupation of site `j`; the all-zero index is the fermionic
/// vacuum.
#[derive(Clone, Debug, PartialEq)]
pub struct State<T> {
    amplitudes: Vec<Complex<T>>,
}

impl<T: Real> State<T> {
    /// Wrap amplitudes that are already normalized.
    pub fn new(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_dim(amplitudes.len())?;
        let norm_sqr: T = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - T::one()).abs() > T::CONTRACT_TOL {
            return Err(Error::NotNormalized {
                norm_sqr: norm_sqr.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { amplitudes })
    }

    /// Normalize arbitrary nonzero amplitudes.
    pub fn normalized(mut amplitudes: Vec<Complex<T>>) -> Result<Self> {
        check_dim(amplitudes.len())?;
        let norm: T = amplitudes.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt();
        if norm == T::zero() || !norm.is_finite() {
            return Err(Error::NotNormalized {
                norm_sqr: (norm * norm).to_f64().unwrap_or(f64::NAN),
            });
        }
        let inv = norm.recip();
        for a in &mut amplitudes {
            *a = a.scale(inv);
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state `|index>`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        check_dim(dim)?;
        if index >= dim {
            return Err(Error::InvalidParameter(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut amplitudes = vec![Complex::zero(); dim];
        amplitudes[index] = Complex::one();
        Ok(Self { amplitudes })
    }

    /// Normalized superposition of `(index, amplitude)` pairs.
    pub fn superposition(dim: usize, terms: &[(usize, Complex<T>)]) -> Result<Self> {
        check_dim(dim)?;
        let mut amplitudes = vec![Complex::zero(); dim];
        for &(i, a) in terms {
            if i >= dim {
                return Err(Error::InvalidParameter(format!(
                    "basis index {i} out of range for dimension {dim}"
                )));
            }
            amplitudes[i] += a;
        }
        Self::normalized(amplitudes)
    }

    /// Product state from per-factor states, factor 0 least significant.
    pub fn product(factors: &[State<T>]) -> Result<Self> {
        let mut amps = vec![Complex::one()];
        for f in factors {
            let mut next = Vec::with_capacity(amps.len() * f.dim());
            for &b in &f.amplitudes {
                for &a in &amps {
                    next.push(a * b);
                }
            }
            check_dim(next.len())?;
            amps = next;
        }
        Self::new(amps)
    }

    pub(crate) fn from_raw(amplitudes: Vec<Complex<T>>) -> Self {
        Self { amplitudes }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    #[inline]
    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex<T>> {
        self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|psi><psi|`.
    pub fn projector(&self) -> Matrix<Complex<T>> {
        let n = self.dim();
        Matrix::from_fn(n, n, |i, j| self.amplitudes[i] * self.amplitudes[j].conj())
    }

    /// Apply a matrix and renormalize; for unitaries this is just `U|psi>`.
    pub fn apply(&self, op: &Matrix<Complex<T>>) -> Result<Self> {
        Self::normalized(op.matvec(&self.amplitudes)?)
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidParameter("empty state vector".into()));
    }
    if dim > MAX_STATE_DIM {
        return Err(Error::SizeLimit {
            what: "state dimension",
            requested: dim,
            limit: MAX_STATE_DIM,
        });
    }
    Ok(())
}

/// `<psi|op|psi>` for Hermitian `op`; the imaginary residue must vanish.
pub fn expectation<T: Real>(psi: &State<T>, op: &Matrix<Complex<T>>) -> Result<T> {
    if op.rows() != psi.dim() || op.cols() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: op.rows(),
        });
    }
    op.ensure_hermitian()?;
    let value = expectation_unchecked(psi, op);
    let slack = T::CONTRACT_TOL * op.max_abs().max(T::one()) * T::lit(10.0);
    if value.im.abs() > slack {
        return Err(Error::NotHermitian {
            deviation: value.im.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(value.re)
}

/// `<psi|op|psi>` without contract checks. `op` must be `dim x dim`.
pub(crate) fn expectation_unchecked<T: Real>(
    psi: &State<T>,
    op: &Matrix<Complex<T>>,
) -> Complex<T> {
    let amps = psi.amplitudes();
    (0..op.rows())
        .map(|i| {
            let row: Complex<T> = op.row(i).iter().zip(amps).map(|(&m, &a)| m * a).sum();
            amps[i].conj() * row
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{kron, pauli};
    use num_complex::Complex64 as C64;

    #[test]
    fn sigma_z_on_up() {
        let up = State::<f64>::basis(2, 1).unwrap();
        assert_eq!(expectation(&up, &pauli::z()).unwrap(), 1.0);
    }

    #[test]
    fn bell_marginal_sigma_z_vanishes() {
        let h = 0.5f64.sqrt();
        let bell = State::new(vec![
            C64::zero(),
            C64::new(h, 0.0),
            C64::new(h, 0.0),
            C64::zero(),
        ])
        .unwrap();
        let z_a = kron(&Matrix::identity(2), &pauli::z::<f64>()).unwrap();
        assert!(expectation(&bell, &z_a).unwrap().abs() < 1e-15);
    }

    #[test]
    fn rejects_unnormalized_and_mismatched() {
        assert!(State::<f64>::new(vec![C64::one(), C64::one()]).is_err());
        let psi = State::<f64>::basis(3, 0).unwrap();
        assert!(expectation(&psi, &pauli::z()).is_err());
        let not_herm = pauli::plus::<f64>();
        let q = State::<f64>::basis(2, 0).unwrap();
        assert!(matches!(
            expectation(&q, &not_herm),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn product_is_little_endian() {
        let up = State::<f64>::basis(2, 1).unwrap();
        let down = State::<f64>::basis(2, 0).unwrap();
        // site 0 up, site 1 down -> index 1
        let p = State::product(&[up, down]).unwrap();
        assert_eq!(p, State::basis(4, 1).unwrap());
    }
}
