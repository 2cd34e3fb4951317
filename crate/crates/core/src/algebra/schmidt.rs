use crate::error::{Error, Result};
use crate::linalg::{singular_values, Matrix, State};
use crate::scalar::Real;

/// Schmidt coefficients of a bipartite pure state, descending.
///
/// The amplitude index is `a + dim_a * b`, factor A least significant. The
/// coefficients are the singular values of the `dim_a x dim_b` amplitude
/// matrix; no density matrix is formed.
pub fn schmidt_coefficients<T: Real>(psi: &State<T>, dim_a: usize, dim_b: usize) -> Result<Vec<T>> {
    if dim_a == 0 || dim_b == 0 || dim_a.checked_mul(dim_b) != Some(psi.dim()) {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: dim_a.saturating_mul(dim_b),
        });
    }
    let amps = psi.amplitudes();
    singular_values(&Matrix::from_fn(dim_a, dim_b, |a, b| amps[a + dim_a * b]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C64;
    use num_traits::Zero;

    #[test]
    fn product_and_bell() {
        let psi = State::<f64>::basis(4, 2).unwrap();
        let s = schmidt_coefficients(&psi, 2, 2).unwrap();
        assert_eq!(s, vec![1.0, 0.0]);
        let h = 0.5f64.sqrt();
        let bell = State::new(vec![
            C64::zero(),
            C64::new(h, 0.0),
            C64::new(h, 0.0),
            C64::zero(),
        ])
        .unwrap();
        let s = schmidt_coefficients(&bell, 2, 2).unwrap();
        assert!(s.iter().all(|x| (x - h).abs() < 1e-15));
    }

    #[test]
    fn rectangular_and_mismatch() {
        let psi = State::<f64>::basis(6, 4).unwrap();
        assert_eq!(schmidt_coefficients(&psi, 2, 3).unwrap(), vec![1.0, 0.0]);
        assert_eq!(schmidt_coefficients(&psi, 3, 2).unwrap(), vec![1.0, 0.0]);
        assert!(schmidt_coefficients(&psi, 2, 2).is_err());
    }
}
