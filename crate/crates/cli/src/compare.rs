//! Exact diagonalization against the free-fermion solution at one point.

use std::fmt::Write as _;

use genent::bcs::{ground_energy_analytic, purity_un_finite, BogoliubovSolution};
use genent::chain::{
    ground_state_sector, momentum_correlation_matrix, purity_un_from_state, ChainParams,
};

use crate::error::{CliError, Result};
use crate::format::g15;

/// Largest deviation tolerated between the two solutions.
pub const COMPARE_TOL: f64 = 1e-9;
/// Largest chain accepted by `compare`.
pub const COMPARE_MAX_SITES: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct ModeOccupation {
    pub k: f64,
    pub ed: f64,
    pub analytic: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareReport {
    pub n: usize,
    pub gamma: f64,
    pub g: f64,
    pub energy_ed: f64,
    pub energy_analytic: f64,
    pub purity_ed: f64,
    pub purity_analytic: f64,
    pub modes: Vec<ModeOccupation>,
    /// Largest off-diagonal `|<c_k^dag c_k'>|` in the exact state.
    pub off_diagonal: f64,
    pub max_deviation: f64,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.max_deviation <= COMPARE_TOL
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| writeln!(s, "{k:<18}{v}").expect("write to string");
        line("n", self.n.to_string());
        line("gamma", g15(self.gamma));
        line("g", g15(self.g));
        line("energy_ed", g15(self.energy_ed));
        line("energy_analytic", g15(self.energy_analytic));
        line("purity_ed", g15(self.purity_ed));
        line("purity_analytic", g15(self.purity_analytic));
        line("off_diagonal_max", g15(self.off_diagonal));
        writeln!(s, "{:<24}{:<24}occupation_analytic", "k", "occupation_ed").expect("write");
        for m in &self.modes {
            writeln!(s, "{:<24}{:<24}{}", g15(m.k), g15(m.ed), g15(m.analytic)).expect("write");
        }
        let mut line = |k: &str, v: String| writeln!(s, "{k:<18}{v}").expect("write to string");
        line("max_deviation", g15(self.max_deviation));
        line("tolerance", g15(COMPARE_TOL));
        line("status", if self.passed() { "pass" } else { "fail" }.into());
        s
    }
}

pub fn run_compare(n: usize, gamma: f64, g: f64) -> Result<CompareReport> {
    if n > COMPARE_MAX_SITES {
        return Err(CliError::Invalid(format!(
            "compare supports N <= {COMPARE_MAX_SITES}, got {n}"
        )));
    }
    let p = ChainParams::new(n, g, gamma)?;
    let gs = ground_state_sector(&p)?;
    let sol = BogoliubovSolution::new(&p)?;
    let c = momentum_correlation_matrix(&gs)?;

    let modes: Vec<ModeOccupation> = sol
        .modes
        .iter()
        .enumerate()
        .map(|(i, m)| ModeOccupation {
            k: m.k,
            ed: c[(i, i)].re,
            analytic: m.v * m.v,
        })
        .collect();
    let off_diagonal = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .map(|(a, b)| c[(a, b)].norm())
        .fold(0.0, f64::max);

    let energy_analytic = ground_energy_analytic(&p);
    let purity_ed = purity_un_from_state(&gs)?;
    let purity_analytic = purity_un_finite(&p)?;
    let max_deviation = modes
        .iter()
        .map(|m| (m.ed - m.analytic).abs())
        .chain([
            (gs.energy - energy_analytic).abs(),
            (purity_ed - purity_analytic).abs(),
            off_diagonal,
        ])
        .fold(0.0, f64::max);

    Ok(CompareReport {
        n,
        gamma,
        g,
        energy_ed: gs.energy,
        energy_analytic,
        purity_ed,
        purity_analytic,
        modes,
        off_diagonal,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_ising_four_sites() {
        let r = run_compare(4, 1.0, 0.5).unwrap();
        assert!(r.passed(), "{}", r.max_deviation);
        assert!((r.purity_ed - 0.5).abs() < 1e-12 && (r.purity_analytic - 0.5).abs() < 1e-12);
        assert_eq!(r.modes.len(), 4);
    }

    #[test]
    fn vacuum_point() {
        let r = run_compare(8, 1.0, 0.0).unwrap();
        assert_eq!(r.energy_analytic, -8.0);
        assert!((r.energy_ed + 8.0).abs() < 1e-12);
        assert!((r.purity_ed - 1.0).abs() < 1e-12);
        assert!(r.render().contains("status            pass"));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            run_compare(14, 1.0, 0.3),
            Err(CliError::Invalid(_))
        ));
        assert!(run_compare(5, 1.0, 0.3).is_err());
    }
}
