//! Fermionic Fock space on `n` modes via the Jordan-Wigner map.
//!
//! Bit `j` of a basis index is the occupation of mode `j` (equivalently
//! spin-up at site `j`). The creation operator carries the string of modes
//! below it:
//!
//! ```text
//! c_j^dag = (prod_{k<j} -sigma_z^k) S_+^j,   -sigma_z^k = (-1)^{n_k}
//! ```

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Largest mode count for which dense Fock-space operators are built.
pub const MAX_DENSE_MODES: usize = 12;

/// A single creation (`dagger = true`) or annihilation operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub mode: usize,
    pub dagger: bool,
}

impl Ladder {
    pub fn create(mode: usize) -> Self {
        Self { mode, dagger: true }
    }

    pub fn annihilate(mode: usize) -> Self {
        Self {
            mode,
            dagger: false,
        }
    }

    /// Action on a basis state: the image index and its sign, or `None` when
    /// the state is annihilated.
    #[inline]
    pub fn act(self, bits: usize) -> Option<(usize, bool)> {
        let mask = 1usize << self.mode;
        if (bits & mask != 0) == self.dagger {
            return None;
        }
        let negative = (bits & (mask - 1)).count_ones() % 2 == 1;
        Some((bits ^ mask, negative))
    }
}

/// Apply a product of ladder operators, rightmost first, to a basis state.
#[inline]
pub fn act_product(ops: &[Ladder], mut bits: usize) -> Option<(usize, bool)> {
    let mut negative = false;
    for op in ops.iter().rev() {
        let (b, s) = op.act(bits)?;
        bits = b;
        negative ^= s;
    }
    Some((bits, negative))
}

/// `<psi| ops |psi>` for a product of ladder operators.
pub fn product_expectation<T: Real>(amps: &[Complex<T>], ops: &[Ladder]) -> Complex<T> {
    let mut acc = Complex::zero();
    for (b, &a) in amps.iter().enumerate() {
        if a == Complex::zero() {
            continue;
        }
        if let Some((out, negative)) = act_product(ops, b) {
            let term = amps[out].conj() * a;
            if negative {
                acc -= term;
            } else {
                acc += term;
            }
        }
    }
    acc
}

/// Dense matrix of a product of ladder operators on `n_modes` modes.
pub fn product_matrix<T: Real>(ops: &[Ladder], n_modes: usize) -> Result<Matrix<Complex<T>>> {
    check_modes(ops, n_modes)?;
    let dim = 1usize << n_modes;
    let mut m = Matrix::zeros(dim, dim);
    for b in 0..dim {
        if let Some((out, negative)) = act_product(ops, b) {
            m[(out, b)] = if negative {
                -Complex::one()
            } else {
                Complex::one()
            };
        }
    }
    Ok(m)
}

/// Dense annihilation operator `c_mode`.
pub fn annihilator<T: Real>(mode: usize, n_modes: usize) -> Result<Matrix<Complex<T>>> {
    product_matrix(&[Ladder::annihilate(mode)], n_modes)
}

/// Dense creation operator `c_mode^dag`.
pub fn creator<T: Real>(mode: usize, n_modes: usize) -> Result<Matrix<Complex<T>>> {
    product_matrix(&[Ladder::create(mode)], n_modes)
}

fn check_modes(ops: &[Ladder], n_modes: usize) -> Result<()> {
    if n_modes > MAX_DENSE_MODES {
        return Err(Error::SizeLimit {
            what: "fermionic modes for dense operators",
            requested: n_modes,
            limit: MAX_DENSE_MODES,
        });
    }
    if let Some(op) = ops.iter().find(|op| op.mode >= n_modes) {
        return Err(Error::InvalidSubsystem(format!(
            "mode {} out of range for {n_modes} modes",
            op.mode
        )));
    }
    Ok(())
}

/// Real-space one-body correlations `G[i][j] = <c_i^dag c_j>`.
pub fn hopping_matrix<T: Real>(amps: &[Complex<T>], n_modes: usize) -> Matrix<Complex<T>> {
    Matrix::from_fn(n_modes, n_modes, |i, j| {
        product_expectation(amps, &[Ladder::create(i), Ladder::annihilate(j)])
    })
}

/// Real-space anomalous correlations `F[i][j] = <c_i^dag c_j^dag>`.
pub fn pairing_matrix<T: Real>(amps: &[Complex<T>], n_modes: usize) -> Matrix<Complex<T>> {
    Matrix::from_fn(n_modes, n_modes, |i, j| {
        if i == j {
            Complex::zero()
        } else {
            product_expectation(amps, &[Ladder::create(i), Ladder::create(j)])
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{embed_site, pauli};
    use num_complex::Complex64 as C64;

    #[test]
    fn canonical_anticommutation() {
        let n = 4;
        let c: Vec<_> = (0..n).map(|j| annihilator::<f64>(j, n).unwrap()).collect();
        let id = Matrix::<C64>::identity(1 << n);
        let zero = Matrix::<C64>::zeros(1 << n, 1 << n);
        for i in 0..n {
            for j in 0..n {
                let cd = c[j].dagger();
                let mixed = c[i].anticommutator(&cd).unwrap();
                let want = if i == j { &id } else { &zero };
                assert!(mixed.max_abs_diff(want) < 1e-15);
                assert!(c[i].anticommutator(&c[j]).unwrap().max_abs_diff(&zero) < 1e-15);
            }
        }
    }

    #[test]
    fn number_operator_is_shifted_sigma_z() {
        let n = 3;
        for j in 0..n {
            let c = annihilator::<f64>(j, n).unwrap();
            let num = c.dagger().matmul(&c).unwrap();
            let z = embed_site(&pauli::z::<f64>(), j, n).unwrap();
            let want = (&z + &Matrix::identity(1 << n)).scaled(C64::new(0.5, 0.0));
            assert!(num.max_abs_diff(&want) < 1e-15);
        }
    }

    #[test]
    fn two_site_string_matches_worked_example() {
        // S_+^1 = c_1^dag and S_+^2 = (1 - 2 n_1) c_2^dag, sites 0 and 1 here.
        let n = 2;
        let c1d = creator::<f64>(0, n).unwrap();
        let c2d = creator::<f64>(1, n).unwrap();
        let n1 = c1d.matmul(&c1d.dagger()).unwrap();
        let string = &Matrix::identity(4) - &n1.scaled(C64::new(2.0, 0.0));
        assert_eq!(embed_site(&pauli::plus::<f64>(), 0, n).unwrap(), c1d);
        assert_eq!(
            embed_site(&pauli::plus::<f64>(), 1, n).unwrap(),
            string.matmul(&c2d).unwrap()
        );
    }

    #[test]
    fn correlations_of_single_particle_state() {
        // (c_1^dag - c_2^dag)/sqrt2 |0>: <c_1^dag c_2> = -1/2, <n_j> = 1/2.
        let h = 0.5f64.sqrt();
        let amps = vec![
            C64::zero(),
            C64::new(h, 0.0),
            C64::new(-h, 0.0),
            C64::zero(),
        ];
        let g = hopping_matrix(&amps, 2);
        assert!((g[(0, 1)] - C64::new(-0.5, 0.0)).norm() < 1e-15);
        assert!((g[(0, 0)] - C64::new(0.5, 0.0)).norm() < 1e-15);
        assert!(pairing_matrix(&amps, 2).max_abs() < 1e-15);
    }

    #[test]
    fn size_and_range_limits() {
        assert!(matches!(
            annihilator::<f64>(0, 13),
            Err(Error::SizeLimit { .. })
        ));
        assert!(annihilator::<f64>(3, 3).is_err());
    }
}
