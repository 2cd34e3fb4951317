use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{expectation, Matrix, State};
use crate::scalar::{Field, Real};

/// Residual-norm ratio below which an operator counts as dependent.
pub const DEPENDENCE_TOL: f64 = 1e-12;

/// Hermitian, traceless, trace-orthogonal operators with a common trace
/// norm, plus the purity normalization `K` once calibrated.
#[derive(Clone, Debug)]
pub struct ObservableBasis<T> {
    name: String,
    elements: Vec<Matrix<Complex<T>>>,
    trace_norm: T,
    norm_constant: Option<T>,
}

impl<T: Real> ObservableBasis<T> {
    /// Validate an already orthogonal set. All elements must be square of
    /// one dimension, Hermitian and traceless, with `tr(x_i x_j) = c delta_ij`
    /// for a single `c > 0`.
    pub fn new(name: impl Into<String>, elements: Vec<Matrix<Complex<T>>>) -> Result<Self> {
        let name = name.into();
        let first = elements
            .first()
            .ok_or_else(|| Error::InvalidBasis(format!("`{name}` has no elements")))?;
        let dim = first.rows();
        for (i, x) in elements.iter().enumerate() {
            if x.rows() != dim || x.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: x.rows(),
                });
            }
            x.ensure_hermitian()?;
            let tr = x.trace().norm();
            if tr > T::CONTRACT_TOL * T::from_count(dim) {
                return Err(Error::InvalidBasis(format!(
                    "`{name}` element {i} has trace {tr}, expected 0"
                )));
            }
        }
        let trace_norm = first.trace_inner(first).re;
        if trace_norm <= T::zero() {
            return Err(Error::InvalidBasis(format!("`{name}` element 0 vanishes")));
        }
        let slack = T::lit(1e-10).max(T::CONTRACT_TOL) * trace_norm;
        for i in 0..elements.len() {
            for j in i..elements.len() {
                let g = elements[i].trace_inner(&elements[j]);
                let want = if i == j { trace_norm } else { T::zero() };
                if (g - Complex::new(want, T::zero())).norm() > slack {
                    return Err(Error::InvalidBasis(format!(
                        "`{name}` elements {i}, {j} have trace inner product {g}, expected {want}"
                    )));
                }
            }
        }
        Ok(Self {
            name,
            elements,
            trace_norm,
            norm_constant: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[Matrix<Complex<T>>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Hilbert-space dimension the operators act on.
    pub fn dim(&self) -> usize {
        self.elements[0].rows()
    }

    /// The common value of `tr(x_i x_i)`.
    pub fn trace_norm(&self) -> T {
        self.trace_norm
    }

    pub fn norm_constant(&self) -> Option<T> {
        self.norm_constant
    }

    /// Set `K` directly.
    pub fn with_norm_constant(mut self, k: T) -> Result<Self> {
        if !(k > T::zero() && k.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "norm constant must be positive, got {k}"
            )));
        }
        self.norm_constant = Some(k);
        Ok(self)
    }

    /// Fix `K` so that `reference` has purity exactly one.
    pub fn calibrate(self, reference: &State<T>) -> Result<Self> {
        let sum = self
            .elements
            .iter()
            .map(|x| expectation(reference, x).map(|v| v * v))
            .sum::<Result<T>>()?;
        if sum < T::lit(1e-12) {
            return Err(Error::DegenerateReference(sum.to_f64().unwrap_or(f64::NAN)));
        }
        self.with_norm_constant(sum.recip())
    }

    pub(crate) fn require_norm_constant(&self) -> Result<T> {
        self.norm_constant
            .ok_or_else(|| Error::Uncalibrated(self.name.clone()))
    }
}

/// Modified Gram-Schmidt under `tr(A^dag B)` with a second
/// reorthogonalization pass. Outputs have unit trace norm and span the same
/// space as the inputs, in order.
pub fn orthonormalize<T: Real>(
    name: impl Into<String>,
    raw: &[Matrix<Complex<T>>],
) -> Result<ObservableBasis<T>> {
    let mut out: Vec<Matrix<Complex<T>>> = Vec::with_capacity(raw.len());
    for (index, op) in raw.iter().enumerate() {
        op.ensure_hermitian()?;
        if let Some(first) = out.first() {
            if op.rows() != first.rows() || op.cols() != first.cols() {
                return Err(Error::DimensionMismatch {
                    expected: first.rows(),
                    found: op.rows(),
                });
            }
        }
        let original = op.frobenius_norm();
        let mut v = op.clone();
        for _ in 0..2 {
            for u in &out {
                let c = u.trace_inner(&v);
                subtract_scaled(&mut v, u, c);
            }
        }
        let residual = v.frobenius_norm();
        if original == T::zero() || residual <= T::lit(DEPENDENCE_TOL) * original {
            let ratio = if original == T::zero() {
                T::zero()
            } else {
                residual / original
            };
            return Err(Error::RankDeficient {
                index,
                ratio: ratio.to_f64().unwrap_or(f64::NAN),
            });
        }
        // Strip the anti-Hermitian round-off left by the projections.
        let v = (&v + &v.dagger()).scaled(Complex::from_real(T::lit(0.5) / residual));
        out.push(v);
    }
    ObservableBasis::new(name, out)
}

fn subtract_scaled<T: Real>(v: &mut Matrix<Complex<T>>, u: &Matrix<Complex<T>>, c: Complex<T>) {
    if c == Complex::zero() {
        return;
    }
    for (a, &b) in v.as_mut_slice().iter_mut().zip(u.as_slice()) {
        *a -= b * c;
    }
}
