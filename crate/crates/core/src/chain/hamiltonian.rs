use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseSymmetric};
use crate::scalar::Real;

/// Largest chain handled by exact diagonalization.
pub const MAX_ED_SITES: usize = 14;

/// Periodic anisotropic XY chain in a transverse field,
///
/// ```text
/// H = -g sum_j [(1+gamma) sx_j sx_{j+1} + (1-gamma) sy_j sy_{j+1}] + sum_j sz_j
/// ```
///
/// with site `N` identified with site 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainParams<T> {
    n_sites: usize,
    g: T,
    gamma: T,
}

impl<T: Real> ChainParams<T> {
    /// `n_sites` even and at least 4, `g >= 0`, `0 <= gamma <= 1`.
    pub fn new(n_sites: usize, g: T, gamma: T) -> Result<Self> {
        if n_sites < 4 || !n_sites.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "chain length must be even and at least 4, got {n_sites}"
            )));
        }
        if !(g >= T::zero() && g.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "g must be finite and >= 0, got {g}"
            )));
        }
        if !(gamma >= T::zero() && gamma <= T::one()) {
            return Err(Error::InvalidParameter(format!(
                "gamma must lie in [0, 1], got {gamma}"
            )));
        }
        Ok(Self { n_sites, g, gamma })
    }

    #[inline]
    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    #[inline]
    pub fn g(&self) -> T {
        self.g
    }

    #[inline]
    pub fn gamma(&self) -> T {
        self.gamma
    }

    fn check_ed_size(&self) -> Result<()> {
        check_sites(self.n_sites)
    }

    /// Diagonal element `sum_j sz_j = 2 popcount - N`.
    #[inline]
    fn diagonal(&self, bits: usize) -> T {
        T::from_count(2 * bits.count_ones() as usize) - T::from_count(self.n_sites)
    }

    /// Off-diagonal element from flipping the bond `(j, j+1)`.
    #[inline]
    fn bond(&self, bits: usize, j: usize) -> (usize, T) {
        let k = (j + 1) % self.n_sites;
        let differ = ((bits >> j) ^ (bits >> k)) & 1 == 1;
        let one = T::one();
        let yy = if differ { one } else { -one };
        let amp = -self.g * ((one + self.gamma) + (one - self.gamma) * yy);
        (bits ^ (1 << j) ^ (1 << k), amp)
    }
}

fn check_sites(n_sites: usize) -> Result<()> {
    if n_sites > MAX_ED_SITES {
        return Err(Error::SizeLimit {
            what: "sites for exact diagonalization",
            requested: n_sites,
            limit: MAX_ED_SITES,
        });
    }
    Ok(())
}

/// Dense Hamiltonian on the full `2^N` space.
pub fn build_hamiltonian<T: Real>(p: &ChainParams<T>) -> Result<Matrix<Complex<T>>> {
    p.check_ed_size()?;
    let dim = 1usize << p.n_sites;
    let mut h = Matrix::zeros(dim, dim);
    for b in 0..dim {
        h[(b, b)] = Complex::new(p.diagonal(b), T::zero());
        for j in 0..p.n_sites {
            let (out, amp) = p.bond(b, j);
            h[(out, b)] += Complex::new(amp, T::zero());
        }
    }
    Ok(h)
}

/// `Z2 = prod_j sz_j`, diagonal with entries `(-1)^(N - popcount)`.
pub fn z2_operator<T: Real>(n_sites: usize) -> Result<Matrix<Complex<T>>> {
    check_sites(n_sites)?;
    let diag: Vec<Complex<T>> = (0..1usize << n_sites)
        .map(|b| Complex::new(z2_sign(b, n_sites), T::zero()))
        .collect();
    Ok(Matrix::from_diagonal(&diag))
}

fn z2_sign<T: Real>(bits: usize, n_sites: usize) -> T {
    if (n_sites - bits.count_ones() as usize).is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

/// Basis indices spanning the `Z2 = z2` eigenspace, ascending.
pub fn sector_indices(n_sites: usize, z2: i8) -> Result<Vec<usize>> {
    check_sites(n_sites)?;
    if z2 != 1 && z2 != -1 {
        return Err(Error::InvalidParameter(format!(
            "z2 must be +1 or -1, got {z2}"
        )));
    }
    let want_odd_down = z2 == -1;
    Ok((0..1usize << n_sites)
        .filter(|&b| ((n_sites - b.count_ones() as usize) % 2 == 1) == want_odd_down)
        .collect())
}

/// `H` restricted to one `Z2` sector, in the order of [`sector_indices`].
pub fn sector_block<T: Real>(p: &ChainParams<T>, z2: i8) -> Result<SparseSymmetric<T>> {
    let indices = sector_indices(p.n_sites, z2)?;
    let mut position = vec![usize::MAX; 1 << p.n_sites];
    for (i, &b) in indices.iter().enumerate() {
        position[b] = i;
    }
    SparseSymmetric::from_rows(indices.len(), |i, row| {
        let b = indices[i];
        row.push((i, p.diagonal(b)));
        for j in 0..p.n_sites {
            let (out, amp) = p.bond(b, j);
            row.push((position[out], amp));
        }
    })
}
