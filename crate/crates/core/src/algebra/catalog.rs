//! Ready-made observable algebras.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fock::{product_matrix, Ladder};
use crate::linalg::{embed_site, kron, pauli, Matrix, State};
use crate::scalar::Real;

use super::basis::{orthonormalize, ObservableBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Spin {
    Half,
    One,
}

impl Spin {
    pub fn local_dim(self) -> usize {
        match self {
            Spin::Half => 2,
            Spin::One => 3,
        }
    }

    /// Local index of the highest-weight state `m = +s`.
    pub fn highest_weight_index(self) -> usize {
        match self {
            Spin::Half => 1,
            Spin::One => 0,
        }
    }
}

/// Physical spin operators `(S_x, S_y, S_z)`.
///
/// Spin-1/2 uses the site convention of the crate (index 0 is down), so
/// `S_z = diag(-1/2, 1/2)`. Spin-1 is ordered `|1>, |0>, |-1>`.
pub fn spin_operators<T: Real>(spin: Spin) -> [Matrix<Complex<T>>; 3] {
    let re = |x: f64| Complex::new(T::lit(x), T::zero());
    match spin {
        Spin::Half => {
            let h = Complex::new(T::lit(0.5), T::zero());
            [
                pauli::x().scaled(h),
                pauli::y().scaled(h),
                pauli::z().scaled(h),
            ]
        }
        Spin::One => {
            let r = std::f64::consts::FRAC_1_SQRT_2;
            let (o, a) = (Complex::zero(), re(r));
            let i = Complex::new(T::zero(), T::lit(r));
            [
                Matrix::from_rows(&[&[o, a, o], &[a, o, a], &[o, a, o]]),
                Matrix::from_rows(&[&[o, -i, o], &[i, o, -i], &[o, i, o]]),
                Matrix::from_diagonal(&[re(1.0), o, re(-1.0)]),
            ]
        }
    }
}

/// Direct sum of local `su(2)` algebras over `num_sites` identical sites,
/// ordered `S_x, S_y, S_z` per site, site 0 first. Elements are trace
/// normalized on the full space; `K` is calibrated on the all-highest-weight
/// product state.
pub fn make_su2_local<T: Real>(num_sites: usize, spin: Spin) -> Result<ObservableBasis<T>> {
    if num_sites == 0 {
        return Err(Error::InvalidParameter("need at least one site".into()));
    }
    let local = spin_operators::<T>(spin);
    let mut raw = Vec::with_capacity(3 * num_sites);
    for site in 0..num_sites {
        for op in &local {
            raw.push(embed_site(op, site, num_sites)?);
        }
    }
    let label = match spin {
        Spin::Half => "1/2",
        Spin::One => "1",
    };
    let name = if num_sites == 1 {
        format!("su(2) spin-{label}")
    } else {
        format!("su(2)^{num_sites} spin-{label}")
    };
    let basis = orthonormalize(name, &raw)?;
    let d = spin.local_dim();
    let reference = (0..num_sites)
        .map(|_| State::basis(d, spin.highest_weight_index()))
        .collect::<Result<Vec<_>>>()?;
    basis.calibrate(&State::product(&reference)?)
}

/// Generalized Gell-Mann matrices of `su(dim)`: symmetric pairs,
/// antisymmetric pairs, then the diagonal generators.
pub fn gell_mann<T: Real>(dim: usize) -> Vec<Matrix<Complex<T>>> {
    let mut out = Vec::with_capacity(dim * dim - 1);
    let unit = |j: usize, k: usize, v: Complex<T>| {
        let mut m = Matrix::zeros(dim, dim);
        m[(j, k)] = v;
        m
    };
    for j in 0..dim {
        for k in j + 1..dim {
            out.push(&unit(j, k, Complex::one()) + &unit(k, j, Complex::one()));
        }
    }
    for j in 0..dim {
        for k in j + 1..dim {
            out.push(&unit(j, k, -Complex::i()) + &unit(k, j, Complex::i()));
        }
    }
    for l in 1..dim {
        let scale = T::lit(2.0 / (l * (l + 1)) as f64).sqrt();
        let diag: Vec<Complex<T>> = (0..dim)
            .map(|m| match m.cmp(&l) {
                std::cmp::Ordering::Less => Complex::new(scale, T::zero()),
                std::cmp::Ordering::Equal => Complex::new(-scale * T::from_count(l), T::zero()),
                std::cmp::Ordering::Greater => Complex::zero(),
            })
            .collect();
        out.push(Matrix::from_diagonal(&diag));
    }
    out
}

/// The full traceless algebra `su(dim)`, calibrated on `|0>`.
pub fn make_full_traceless<T: Real>(dim: usize) -> Result<ObservableBasis<T>> {
    if dim < 2 {
        return Err(Error::InvalidParameter(format!(
            "su(d) needs d >= 2, got {dim}"
        )));
    }
    orthonormalize(format!("su({dim})"), &gell_mann(dim))?.calibrate(&State::basis(dim, 0)?)
}

/// Local algebra `su(d_0) + su(d_1) + ...` on a tensor product with factor 0
/// least significant, calibrated on the product of `|0>` states.
pub fn make_local_traceless<T: Real>(dims: &[usize]) -> Result<ObservableBasis<T>> {
    if dims.is_empty() || dims.iter().any(|&d| d < 2) {
        return Err(Error::InvalidParameter(format!(
            "bad factor dimensions {dims:?}"
        )));
    }
    let mut raw = Vec::new();
    for (f, &d) in dims.iter().enumerate() {
        let below: usize = dims[..f].iter().product();
        let above: usize = dims[f + 1..].iter().product();
        for g in gell_mann::<T>(d) {
            let m = kron(
                &Matrix::identity(above),
                &kron(&g, &Matrix::identity(below))?,
            )?;
            raw.push(m);
        }
    }
    let name = dims
        .iter()
        .map(|d| format!("su({d})"))
        .collect::<Vec<_>>()
        .join("+");
    let total: usize = dims.iter().product();
    orthonormalize(name, &raw)?.calibrate(&State::basis(total, 0)?)
}

/// Two-mode `u(2)`: hopping `(c_1^dag c_2 + h.c.)/sqrt2`, current
/// `i(c_1^dag c_2 - h.c.)/sqrt2`, and `n_1 - 1/2`, `n_2 - 1/2`, with mode 1
/// on site 0. Calibrated on `|n_1 = 1, n_2 = 0>`.
pub fn make_u2_pair_modes<T: Real>() -> Result<ObservableBasis<T>> {
    let hop = product_matrix::<T>(&[Ladder::create(0), Ladder::annihilate(1)], 2)?;
    let back = hop.dagger();
    let r = Complex::new(T::lit(std::f64::consts::FRAC_1_SQRT_2), T::zero());
    let half = Complex::new(T::lit(0.5), T::zero());
    let id = Matrix::identity(4);
    let number = |mode| product_matrix::<T>(&[Ladder::create(mode), Ladder::annihilate(mode)], 2);
    let elements = vec![
        (&hop + &back).scaled(r),
        (&hop - &back).scaled(Complex::<T>::i() * r),
        &number(0)? - &id.scaled(half),
        &number(1)? - &id.scaled(half),
    ];
    ObservableBasis::new("u(2)", elements)?.calibrate(&State::basis(4, 1)?)
}

/// The same `u(2)` written with spin operators before the Jordan-Wigner map:
/// `(S_x^1 S_x^2 + S_y^1 S_y^2)/sqrt2`, `(S_x^1 S_y^2 - S_y^1 S_x^2)/sqrt2`,
/// `S_z^1`, `S_z^2`. Not trace normalized.
pub fn u2_spin_operators<T: Real>() -> Result<Vec<Matrix<Complex<T>>>> {
    let [sx, sy, sz] = spin_operators::<T>(Spin::Half);
    let at = |op: &Matrix<Complex<T>>, site| embed_site(op, site, 2);
    let (x1, y1, z1) = (at(&sx, 0)?, at(&sy, 0)?, at(&sz, 0)?);
    let (x2, y2, z2) = (at(&sx, 1)?, at(&sy, 1)?, at(&sz, 1)?);
    let r = Complex::new(T::lit(std::f64::consts::FRAC_1_SQRT_2), T::zero());
    Ok(vec![
        (&(&x1 * &x2) + &(&y1 * &y2)).scaled(r),
        (&(&x1 * &y2) - &(&y1 * &x2)).scaled(r),
        z1,
        z2,
    ])
}
