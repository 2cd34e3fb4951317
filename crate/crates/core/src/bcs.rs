//! Free-fermion solution of the chain on the antiperiodic momentum grid.
//!
//! In momentum space the `Z2 = +1` sector is the quadratic pairing problem
//!
//! ```text
//! H = sum_k xi_k (n_k - 1/2) + sum_k delta_k (i c_k^dag c_-k^dag + h.c.)/2
//! xi_k = 2 (1 - 2 g cos k),   delta_k = 2 g gamma sin k
//! ```
//!
//! solved by a Bogoliubov rotation with quasiparticle energy
//! `eps_k = sqrt(xi_k^2 + 4 delta_k^2)` and occupations
//! `v_k^2 = (1 - xi_k / eps_k) / 2`.

use num_complex::Complex;

use crate::chain::ChainParams;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Critical coupling, independent of the anisotropy.
pub const G_C: f64 = 0.5;
/// Below this distance from one, `gamma` is treated as exactly one in the
/// closed-form purity.
pub const ISING_GUARD: f64 = 1e-8;
/// Closest approach of an exponent-fit window to the critical point.
pub const CRITICAL_MARGIN: f64 = 1e-6;
/// Grid size standing in for the thermodynamic limit in energy densities.
pub const THERMO_GRID: usize = 1 << 16;

/// Antiperiodic momenta `k = +-(2m - 1) pi / N`, `m = 1..N/2`, ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumGrid<T> {
    n_sites: usize,
    momenta: Vec<T>,
}

impl<T: Real> MomentumGrid<T> {
    pub fn new(n_sites: usize) -> Result<Self> {
        if n_sites < 2 || !n_sites.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "momentum grid needs an even positive size, got {n_sites}"
            )));
        }
        let n = T::from_count(n_sites);
        let half = n_sites / 2;
        let momenta = (0..n_sites)
            .map(|i| {
                // i < half: negative branch, largest magnitude first
                let odd = if i < half {
                    2 * (half - i) - 1
                } else {
                    2 * (i - half) + 1
                };
                let k = T::from_count(odd) * T::PI() / n;
                if i < half {
                    -k
                } else {
                    k
                }
            })
            .collect();
        Ok(Self { n_sites, momenta })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn momenta(&self) -> &[T] {
        &self.momenta
    }

    /// The positive half `K+`, ascending.
    pub fn positive(&self) -> &[T] {
        &self.momenta[self.n_sites / 2..]
    }

    /// Position of `-k` for the momentum at position `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.n_sites - 1 - i
    }
}

/// Bogoliubov data of one momentum mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BdgMode<T> {
    pub k: T,
    pub xi: T,
    pub delta: T,
    pub eps: T,
    pub u: T,
    pub v: T,
}

impl<T: Real> BdgMode<T> {
    /// Rotation angle `atan2(v, u)`.
    pub fn phi(&self) -> T {
        self.v.atan2(self.u)
    }
}

/// Quasiparticle energy `2 sqrt((2 g cos k - 1)^2 + 4 g^2 gamma^2 sin^2 k)`.
pub fn dispersion<T: Real>(g: T, gamma: T, k: T) -> T {
    let two = T::lit(2.0);
    let a = two * g * k.cos() - T::one();
    let b = two * g * gamma * k.sin();
    two * (a * a + b * b).sqrt()
}

/// `(xi, delta, u, v)` for one mode, with `u >= 0` and `sign(v) = sign(sin k)`.
///
/// The smaller of `u^2`, `v^2` is formed without cancellation.
pub fn bdg_coefficients<T: Real>(g: T, gamma: T, k: T) -> BdgMode<T> {
    let two = T::lit(2.0);
    let xi = two * (T::one() - two * g * k.cos());
    let delta = two * g * gamma * k.sin();
    let eps = xi.hypot(two * delta);
    let (u2, v2) = if eps == T::zero() {
        (T::lit(0.5), T::lit(0.5))
    } else if xi >= T::zero() {
        let v2 = two * delta * delta / (eps * (eps + xi));
        (T::one() - v2, v2)
    } else {
        let u2 = two * delta * delta / (eps * (eps - xi));
        (u2, T::one() - u2)
    };
    let v = v2.sqrt();
    BdgMode {
        k,
        xi,
        delta,
        eps,
        u: u2.sqrt(),
        v: if k.sin() < T::zero() { -v } else { v },
    }
}

/// Per-mode Bogoliubov data on the antiperiodic grid.
#[derive(Clone, Debug, PartialEq)]
pub struct BogoliubovSolution<T> {
    pub g: T,
    pub gamma: T,
    pub grid: MomentumGrid<T>,
    pub modes: Vec<BdgMode<T>>,
}

impl<T: Real> BogoliubovSolution<T> {
    pub fn new(p: &ChainParams<T>) -> Result<Self> {
        Self::on_grid(p.n_sites(), p.g(), p.gamma())
    }

    fn on_grid(n_sites: usize, g: T, gamma: T) -> Result<Self> {
        let grid = MomentumGrid::new(n_sites)?;
        let modes = grid
            .momenta()
            .iter()
            .map(|&k| bdg_coefficients(g, gamma, k))
            .collect();
        Ok(Self {
            g,
            gamma,
            grid,
            modes,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.grid.n_sites()
    }

    /// `<c_k^dag c_k'> = delta_kk' v_k^2`.
    pub fn correlation_matrix(&self) -> Matrix<Complex<T>> {
        let diag: Vec<Complex<T>> = self
            .modes
            .iter()
            .map(|m| Complex::new(m.v * m.v, T::zero()))
            .collect();
        Matrix::from_diagonal(&diag)
    }

    /// `<c_k^dag c_k'^dag>`, nonzero only for `k' = -k`, where it is
    /// `-i u_k v_k`.
    pub fn pairing_matrix(&self) -> Matrix<Complex<T>> {
        let n = self.n_sites();
        let mut f = Matrix::zeros(n, n);
        for (i, m) in self.modes.iter().enumerate() {
            f[(i, self.grid.partner(i))] = Complex::new(T::zero(), -m.u * m.v);
        }
        f
    }
}

/// `-(1/2) sum_k eps_k`.
pub fn ground_energy_analytic<T: Real>(p: &ChainParams<T>) -> T {
    ground_energy(p.n_sites(), p.g(), p.gamma())
}

fn ground_energy<T: Real>(n_sites: usize, g: T, gamma: T) -> T {
    let grid = MomentumGrid::<T>::new(n_sites).expect("even grid");
    -T::lit(0.5)
        * grid
            .momenta()
            .iter()
            .map(|&k| dispersion(g, gamma, k))
            .sum::<T>()
}

/// Ground-state energy per site on the large grid [`THERMO_GRID`].
pub fn energy_per_site_thermo<T: Real>(g: T, gamma: T) -> T {
    ground_energy(THERMO_GRID, g, gamma) / T::from_count(THERMO_GRID)
}

/// `(4/N) sum_k (v_k^2 - 1/2)^2`.
pub fn purity_un_finite<T: Real>(p: &ChainParams<T>) -> Result<T> {
    let sol = BogoliubovSolution::new(p)?;
    let half = T::lit(0.5);
    let sum: T = sol.modes.iter().map(|m| (m.v * m.v - half).powi(2)).sum();
    Ok(T::lit(4.0) * sum / T::from_count(p.n_sites()))
}

fn check_thermo_domain<T: Real>(g: T, gamma: T) -> Result<()> {
    if gamma == T::zero() {
        return Err(Error::OutOfScope(
            "the isotropic point gamma = 0 needs a different algebra; u(N) purity is not defined here"
                .into(),
        ));
    }
    if !(gamma > T::zero() && gamma <= T::one()) {
        return Err(Error::InvalidParameter(format!(
            "gamma must lie in (0, 1], got {gamma}"
        )));
    }
    if !(g >= T::zero() && g.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "g must be finite and >= 0, got {g}"
        )));
    }
    Ok(())
}

/// Closed-form `u(N)` purity in the thermodynamic limit.
///
/// ```text
/// g <= 1/2:  (1 - gamma^2 / sqrt(1 - 4 g^2 (1 - gamma^2))) / (1 - gamma^2)
/// g >  1/2:  1 / (1 + gamma)
/// ```
///
/// At `gamma = 1` the first branch is the limit `1 - 2 g^2`.
pub fn purity_un_thermo<T: Real>(g: T, gamma: T) -> Result<T> {
    check_thermo_domain(g, gamma)?;
    let one = T::one();
    if g > T::lit(G_C) {
        return Ok(one / (one + gamma));
    }
    if (one - gamma).abs() < T::lit(ISING_GUARD) {
        return Ok(one - T::lit(2.0) * g * g);
    }
    let c = one - gamma * gamma;
    let root = (one - T::lit(4.0) * g * g * c).sqrt();
    Ok((one - gamma * gamma / root) / c)
}

/// `P - 1/(1 + gamma)`: zero in the ordered phase, positive below `g_c`.
pub fn shifted_purity<T: Real>(g: T, gamma: T) -> Result<T> {
    Ok(purity_un_thermo(g, gamma)? - (T::one() + gamma).recip())
}

/// Variance of the total fermion number, `sum_{k in K+} 4 u_k^2 v_k^2`.
pub fn number_variance<T: Real>(p: &ChainParams<T>) -> Result<T> {
    let sol = BogoliubovSolution::new(p)?;
    let half = p.n_sites() / 2;
    Ok(sol.modes[half..]
        .iter()
        .map(|m| T::lit(4.0) * m.u * m.u * m.v * m.v)
        .sum())
}

/// Sum of squared expectations over a trace-orthonormal basis of the
/// quadratic algebra `so(2N)`: number terms `n_k - 1/2`, hoppings for
/// `k != k'` and pairings for `k < k'`.
pub fn so2n_expectation_sum<T: Real>(g: &Matrix<Complex<T>>, f: &Matrix<Complex<T>>) -> T {
    let n = g.rows();
    let half = T::lit(0.5);
    let mut sum = T::zero();
    for a in 0..n {
        for b in 0..n {
            if a == b {
                sum += (g[(a, a)].re - half).powi(2);
            } else {
                sum += g[(a, b)].norm_sqr();
                if a < b {
                    sum += T::lit(2.0) * f[(a, b)].norm_sqr();
                }
            }
        }
    }
    sum
}

/// Purity relative to `so(2N)`, normalized so that the vacuum has purity 1.
pub fn purity_so2n_from_correlations<T: Real>(g: &Matrix<Complex<T>>, f: &Matrix<Complex<T>>) -> T {
    let n = g.rows();
    let zero = Matrix::<Complex<T>>::zeros(n, n);
    so2n_expectation_sum(g, f) / so2n_expectation_sum(&zero, &zero)
}

/// `so(2N)` purity of the paired ground state.
pub fn purity_so2n<T: Real>(p: &ChainParams<T>) -> Result<T> {
    let sol = BogoliubovSolution::new(p)?;
    Ok(purity_so2n_from_correlations(
        &sol.correlation_matrix(),
        &sol.pairing_matrix(),
    ))
}

/// Closed-form purity and its shifted value at one coupling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PurityCurvePoint<T> {
    pub g: T,
    pub gamma: T,
    pub purity: T,
    pub shifted_purity: T,
}

impl<T: Real> PurityCurvePoint<T> {
    pub fn at(g: T, gamma: T) -> Result<Self> {
        let purity = purity_un_thermo(g, gamma)?;
        Ok(Self {
            g,
            gamma,
            purity,
            shifted_purity: purity - (T::one() + gamma).recip(),
        })
    }
}

/// Least-squares line through `log P'` against `log(g_c - g)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentFit<T> {
    pub nu: T,
    pub intercept: T,
    pub r_squared: T,
    /// `(log(g_c - g), log P')` pairs used in the fit.
    pub points: Vec<(T, T)>,
}

impl<T: Real> ExponentFit<T> {
    /// Largest absolute deviation of a point from the fitted line.
    pub fn max_residual(&self) -> T {
        self.points
            .iter()
            .map(|&(x, y)| (y - self.intercept - self.nu * x).abs())
            .fold(T::zero(), T::max)
    }
}

/// Fit `P' ~ (g_c - g)^nu` on `n_points` evenly spaced couplings spanning
/// `window` inclusively.
pub fn critical_exponent_fit<T: Real>(
    gamma: T,
    window: (T, T),
    n_points: usize,
) -> Result<ExponentFit<T>> {
    let (lo, hi) = window;
    let g_c = T::lit(G_C);
    if !(lo > T::zero() && lo < hi) {
        return Err(Error::InvalidParameter(format!(
            "fit window must satisfy 0 < lo < hi, got [{lo}, {hi}]"
        )));
    }
    if hi > g_c - T::lit(CRITICAL_MARGIN) {
        return Err(Error::InvalidParameter(format!(
            "fit window must end below g_c - {CRITICAL_MARGIN:e}, got {hi}"
        )));
    }
    if n_points < 3 {
        return Err(Error::InvalidParameter(format!(
            "need at least 3 points, got {n_points}"
        )));
    }
    let step = (hi - lo) / T::from_count(n_points - 1);
    let points = (0..n_points)
        .map(|i| {
            let g = if i == n_points - 1 {
                hi
            } else {
                lo + step * T::from_count(i)
            };
            let p = shifted_purity(g, gamma)?;
            if p <= T::zero() {
                return Err(Error::InvalidParameter(format!(
                    "shifted purity {p} at g = {g} is not positive"
                )));
            }
            Ok(((g_c - g).ln(), p.ln()))
        })
        .collect::<Result<Vec<_>>>()?;

    let n = T::from_count(n_points);
    let mx = points.iter().map(|p| p.0).sum::<T>() / n;
    let my = points.iter().map(|p| p.1).sum::<T>() / n;
    let sxx: T = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: T = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: T = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let nu = sxy / sxx;
    let intercept = my - nu * mx;
    let r_squared = if syy == T::zero() {
        T::one()
    } else {
        sxy * sxy / (sxx * syy)
    };
    Ok(ExponentFit {
        nu,
        intercept,
        r_squared,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn params(n: usize, g: f64, gamma: f64) -> ChainParams<f64> {
        ChainParams::new(n, g, gamma).unwrap()
    }

    #[test]
    fn grid_layout() {
        let grid = MomentumGrid::<f64>::new(4).unwrap();
        let want = [-3.0 * PI / 4.0, -PI / 4.0, PI / 4.0, 3.0 * PI / 4.0];
        assert_eq!(grid.momenta(), &want);
        assert_eq!(grid.positive(), &want[2..]);
        assert_eq!(grid.partner(0), 3);
        assert!(MomentumGrid::<f64>::new(3).is_err());
    }

    #[test]
    fn dispersion_values() {
        assert_eq!(dispersion(0.0, 0.3, 1.1), 2.0);
        assert!((dispersion(0.5, 1.0, PI / 3.0) - 2.0).abs() < 1e-15);
        let k = PI / 100.0;
        let e = dispersion(0.5, 1.0, k);
        assert!((e - 2.0 * k).abs() < 0.01 * 2.0 * k);
        assert!((e - 0.0628).abs() < 0.01 * 0.0628);
    }

    #[test]
    fn bdg_values_and_identities() {
        let m = bdg_coefficients(0.0, 0.7, 0.9);
        assert_eq!((m.xi, m.delta, m.u, m.v), (2.0, 0.0, 1.0, 0.0));
        let m = bdg_coefficients(0.5, 1.0, PI / 2.0);
        assert!((m.v * m.v - (1.0 - 0.5f64.sqrt()) / 2.0).abs() < 1e-15);
        for &g in &[0.1f64, 0.5, 0.9, 3.0] {
            for &gamma in &[0.0, 0.3, 1.0] {
                for &k in &[0.1, 1.3, 2.9, -0.4, -2.2] {
                    let m = bdg_coefficients(g, gamma, k);
                    assert!((m.u * m.u + m.v * m.v - 1.0).abs() < 1e-14);
                    assert!((m.eps - dispersion(g, gamma, k)).abs() < 1e-12);
                    let mirror = bdg_coefficients(g, gamma, -k);
                    assert_eq!(mirror.u, m.u);
                    assert_eq!(mirror.v, -m.v);
                    assert!((m.v * m.v - (1.0 - m.xi / m.eps) / 2.0).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn energies() {
        assert_eq!(ground_energy_analytic(&params(4, 0.0, 1.0)), -4.0);
        assert!((energy_per_site_thermo(0.0f64, 1.0) + 1.0).abs() < 1e-12);
        let big = ground_energy_analytic(&params(4096, 0.0, 1.0)) / 4096.0;
        assert!((big + 1.0).abs() < 1e-12);
    }

    #[test]
    fn finite_purity_values() {
        for n in [4, 8, 16] {
            assert_eq!(purity_un_finite(&params(n, 0.0, 0.4)).unwrap(), 1.0);
        }
        assert!((purity_un_finite(&params(4, 0.5, 1.0)).unwrap() - 0.5).abs() < 1e-14);
        let p = purity_un_finite(&params(1000, 0.3, 1.0)).unwrap();
        assert!((p - 0.82).abs() < 1e-2);
    }

    #[test]
    fn thermo_purity_values() {
        for i in 1..=10 {
            let gamma = i as f64 / 10.0;
            assert_eq!(purity_un_thermo(0.0, gamma).unwrap(), 1.0);
        }
        assert_eq!(purity_un_thermo(0.7, 0.5).unwrap(), 2.0 / 3.0);
        assert!((purity_un_thermo(0.25f64, 0.5).unwrap() - 0.9635332).abs() < 1e-7);
        assert!((purity_un_thermo(0.5f64, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(matches!(
            purity_un_thermo(0.3, 0.0),
            Err(Error::OutOfScope(_))
        ));
        assert!(purity_un_thermo(-0.1, 0.5).is_err());
    }

    #[test]
    fn shifted_purity_values() {
        assert_eq!(shifted_purity(0.7, 1.0).unwrap(), 0.0);
        assert_eq!(shifted_purity(0.0, 1.0).unwrap(), 0.5);
        assert!((shifted_purity(0.4f64, 1.0).unwrap() - 0.18).abs() < 1e-15);
        let pt = PurityCurvePoint::at(0.3f64, 0.6).unwrap();
        assert!((pt.shifted_purity - (pt.purity - 1.0 / 1.6)).abs() < 1e-14);
    }

    #[test]
    fn number_variance_values() {
        assert_eq!(number_variance(&params(8, 0.0, 0.5)).unwrap(), 0.0);
        assert!((number_variance(&params(4, 0.5, 1.0)).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn so2n_purity_is_maximal() {
        for &(g, gamma) in &[(0.0, 1.0), (0.5, 1.0), (2.0, 0.4), (0.3, 0.0)] {
            let p = purity_so2n(&params(10, g, gamma)).unwrap();
            assert!((p - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn so2n_purity_ignores_pairing_phase() {
        let sol = BogoliubovSolution::new(&params(8, 0.6, 0.7)).unwrap();
        let g = sol.correlation_matrix();
        let f = sol.pairing_matrix();
        let rotated = f.scaled(Complex::from_polar(1.0, 0.83));
        let a = purity_so2n_from_correlations(&g, &f);
        let b = purity_so2n_from_correlations(&g, &rotated);
        assert!((a - b).abs() < 1e-15);
    }

    #[test]
    fn exponent_fit_examples() {
        let fit = critical_exponent_fit(1.0f64, (0.40, 0.49), 50).unwrap();
        assert!((fit.nu - 1.0).abs() < 0.05, "{}", fit.nu);
        // Away from the Ising point the linear regime is narrow: the slope
        // is still about 0.88 on this window and only tends to one very
        // close to the critical coupling.
        let wide = critical_exponent_fit(0.5f64, (0.45, 0.499), 50).unwrap();
        assert!((wide.nu - 0.8807).abs() < 1e-3, "{}", wide.nu);
        let near = critical_exponent_fit(0.5f64, (0.4999, 0.49999), 50).unwrap();
        assert!((near.nu - 1.0).abs() < 0.01, "{}", near.nu);
        assert!(near.nu > wide.nu);
        let far = critical_exponent_fit(1.0f64, (0.10, 0.20), 20).unwrap();
        assert!(far.nu.is_finite());
        assert!(critical_exponent_fit(1.0f64, (0.45, 0.5), 10).is_err());
        assert!(critical_exponent_fit(1.0f64, (0.45, 0.6), 10).is_err());
        assert!(critical_exponent_fit(1.0f64, (0.3, 0.2), 10).is_err());
    }
}
