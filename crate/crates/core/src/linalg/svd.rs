use num_traits::{Float, Zero};

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{Field, Real};

const MAX_SWEEPS: usize = 60;

/// Singular values, descending, by one-sided Jacobi rotations.
///
/// Small singular values come out with absolute error of order
/// `eps * ||m||`, with no squaring of the spectrum.
pub fn singular_values<E: Field>(m: &Matrix<E>) -> Result<Vec<E::Real>> {
    // Work on the orientation with fewer columns.
    let wide = m.cols() > m.rows();
    let (rows, cols) = if wide {
        (m.cols(), m.rows())
    } else {
        (m.rows(), m.cols())
    };
    let mut columns: Vec<Vec<E>> = (0..cols)
        .map(|c| {
            (0..rows)
                .map(|r| if wide { m[(c, r)].conj() } else { m[(r, c)] })
                .collect()
        })
        .collect();

    let eps = E::Real::epsilon();
    let one = E::Real::lit(1.0);
    let mut converged = cols < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        converged = true;
        for p in 0..cols {
            for q in p + 1..cols {
                let alpha: E::Real = columns[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: E::Real = columns[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: E = columns[p]
                    .iter()
                    .zip(&columns[q])
                    .map(|(a, b)| a.conj() * *b)
                    .sum();
                let g = gamma.modulus();
                if g == E::Real::zero() || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                converged = false;
                let phase = gamma.phase();
                let zeta = (beta - alpha) / (g + g);
                let t = zeta.signum() / (zeta.abs() + (one + zeta * zeta).sqrt());
                let c = (one + t * t).sqrt().recip();
                let s = c * t;
                let (left, right) = columns.split_at_mut(q);
                for (a, b) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let bt = *b * phase.conj();
                    let (na, nb) = (a.scale(c) - bt.scale(s), a.scale(s) + bt.scale(c));
                    *a = na;
                    *b = nb;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }
    let mut values: Vec<E::Real> = columns
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<E::Real>().sqrt())
        .collect();
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite singular values"));
    Ok(values)
}
