use num_complex::Complex;
use num_traits::Zero;

use super::matrix::Matrix;
use super::state::State;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Reduced density matrix of `psi` on the tensor factors listed in `keep`.
///
/// `dims[f]` is the dimension of factor `f`; factor 0 is the least
/// significant digit of the basis index. The output is indexed the same way
/// over the kept factors in the order given, `keep[0]` least significant.
pub fn partial_trace<T: Real>(
    psi: &State<T>,
    dims: &[usize],
    keep: &[usize],
) -> Result<Matrix<Complex<T>>> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidSubsystem(format!(
            "bad factor dimensions {dims:?}"
        )));
    }
    let total = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .unwrap_or(usize::MAX);
    if total != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: total,
            found: psi.dim(),
        });
    }
    if keep.is_empty() {
        return Err(Error::InvalidSubsystem("keep set is empty".into()));
    }
    let mut seen = vec![false; dims.len()];
    for &k in keep {
        if k >= dims.len() {
            return Err(Error::InvalidSubsystem(format!(
                "factor {k} out of range for {} factors",
                dims.len()
            )));
        }
        if std::mem::replace(&mut seen[k], true) {
            return Err(Error::InvalidSubsystem(format!("factor {k} listed twice")));
        }
    }

    let mut strides = Vec::with_capacity(dims.len());
    let mut s = 1;
    for &d in dims {
        strides.push(s);
        s *= d;
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|f| !seen[*f]).collect();
    let kept_offsets = offsets(keep, dims, &strides);
    let traced_offsets = offsets(&traced, dims, &strides);

    let amps = psi.amplitudes();
    let dk = kept_offsets.len();
    let mut rho = Matrix::zeros(dk, dk);
    for a in 0..dk {
        for b in a..dk {
            let (oa, ob) = (kept_offsets[a], kept_offsets[b]);
            let v: Complex<T> = traced_offsets
                .iter()
                .map(|&r| amps[oa + r] * amps[ob + r].conj())
                .sum();
            rho[(a, b)] = v;
            rho[(b, a)] = v.conj();
        }
    }
    Ok(rho)
}

/// Flat-index offsets of every multi-index over `factors`, first factor
/// varying fastest.
fn offsets(factors: &[usize], dims: &[usize], strides: &[usize]) -> Vec<usize> {
    let mut out = vec![0usize];
    for &f in factors {
        let mut next = Vec::with_capacity(out.len() * dims[f]);
        for digit in 0..dims[f] {
            for &o in &out {
                next.push(o + digit * strides[f]);
            }
        }
        out = next;
    }
    out
}

/// Trace of a square matrix, which for density matrices should be one.
pub fn density_trace<T: Real>(rho: &Matrix<Complex<T>>) -> Complex<T> {
    rho.diagonal()
        .into_iter()
        .fold(Complex::zero(), |a, b| a + b)
}
