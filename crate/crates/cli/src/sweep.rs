//! Coupling sweeps of closed-form and exact-diagonalization observables.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use genent::bcs::{
    energy_per_site_thermo, ground_energy_analytic, number_variance, purity_un_finite,
    purity_un_thermo, shifted_purity,
};
use genent::chain::{
    concurrence, ground_state_sector, magnetization_x, two_site_rdm, ChainParams, MAX_ED_SITES,
};
use genent::GroundStateResult;
use rayon::prelude::*;

use crate::error::{CliError, Result};
use crate::format::g15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Quantity {
    Purity,
    ShiftedPurity,
    EnergyPerSite,
    Concurrence,
    Mx,
    NumberVariance,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Purity => "purity",
            Quantity::ShiftedPurity => "shifted_purity",
            Quantity::EnergyPerSite => "energy_per_site",
            Quantity::Concurrence => "concurrence",
            Quantity::Mx => "mx",
            Quantity::NumberVariance => "number_variance",
        }
    }

    /// Needs the exact ground state rather than the free-fermion solution.
    pub fn needs_ed(self) -> bool {
        matches!(self, Quantity::Concurrence | Quantity::Mx)
    }
}

/// Chain length: the thermodynamic limit or a finite even `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Size {
    Thermo,
    Finite(usize),
}

impl FromStr for Size {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "inf" {
            return Ok(Size::Thermo);
        }
        s.parse()
            .map(Size::Finite)
            .map_err(|_| format!("size must be `inf` or a chain length, got `{s}`"))
    }
}

impl fmt::Display for Size {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Size::Thermo => f.write_str("inf"),
            Size::Finite(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Jsonl,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub gamma: f64,
    pub g_min: f64,
    pub g_max: f64,
    pub steps: usize,
    pub size: Size,
    pub quantities: Vec<Quantity>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CliError::Invalid(m));
        if !(0.0..=1.0).contains(&self.gamma) {
            return bad(format!("gamma must lie in [0, 1], got {}", self.gamma));
        }
        if !(self.g_min.is_finite() && self.g_max.is_finite() && self.g_min >= 0.0) {
            return bad(format!(
                "couplings must be finite and >= 0, got [{}, {}]",
                self.g_min, self.g_max
            ));
        }
        if self.g_min >= self.g_max {
            return bad(format!(
                "need g_min < g_max, got {} >= {}",
                self.g_min, self.g_max
            ));
        }
        if self.steps < 2 {
            return bad(format!("need at least 2 steps, got {}", self.steps));
        }
        if self.quantities.is_empty() {
            return bad("no quantities requested".into());
        }
        for (i, q) in self.quantities.iter().enumerate() {
            if self.quantities[..i].contains(q) {
                return bad(format!("quantity `{}` requested twice", q.name()));
            }
        }
        match self.size {
            Size::Finite(n) => {
                if n < 4 || n % 2 != 0 {
                    return bad(format!("chain length must be even and >= 4, got {n}"));
                }
                if n > MAX_ED_SITES {
                    if let Some(q) = self.quantities.iter().find(|q| q.needs_ed()) {
                        return bad(format!(
                            "`{}` needs exact diagonalization, limited to N <= {MAX_ED_SITES}",
                            q.name()
                        ));
                    }
                }
            }
            Size::Thermo => {
                for q in &self.quantities {
                    match q {
                        Quantity::Concurrence | Quantity::Mx | Quantity::NumberVariance => {
                            return bad(format!("`{}` needs a finite chain length", q.name()));
                        }
                        Quantity::Purity | Quantity::ShiftedPurity if self.gamma == 0.0 => {
                            return bad(format!(
                                "`{}` at gamma = 0 is out of scope: the isotropic chain needs a different algebra",
                                q.name()
                            ));
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }

    /// Evenly spaced couplings including both endpoints.
    pub fn couplings(&self) -> Vec<f64> {
        let step = (self.g_max - self.g_min) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.g_max
                } else {
                    self.g_min + step * i as f64
                }
            })
            .collect()
    }

    pub fn header(&self) -> Vec<&'static str> {
        let mut h = vec!["g", "gamma", "size"];
        h.extend(self.quantities.iter().map(|q| q.name()));
        h
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub g: f64,
    pub gamma: f64,
    pub size: Size,
    /// One value per requested quantity, in request order.
    pub values: Vec<f64>,
}

/// Evaluate every requested quantity on the coupling grid, rows ascending
/// in `g`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    cfg.couplings()
        .into_par_iter()
        .map(|g| sweep_row(cfg, g))
        .collect()
}

fn sweep_row(cfg: &SweepConfig, g: f64) -> Result<SweepRow> {
    let gamma = cfg.gamma;
    let mut ground: Option<GroundStateResult> = None;
    let mut values = Vec::with_capacity(cfg.quantities.len());
    for &q in &cfg.quantities {
        let value = match cfg.size {
            Size::Thermo => match q {
                Quantity::Purity => purity_un_thermo(g, gamma)?,
                Quantity::ShiftedPurity => shifted_purity(g, gamma)?,
                Quantity::EnergyPerSite => energy_per_site_thermo(g, gamma),
                _ => unreachable!("rejected by validation"),
            },
            Size::Finite(n) => {
                let p = ChainParams::new(n, g, gamma)?;
                match q {
                    Quantity::Purity => purity_un_finite(&p)?,
                    Quantity::ShiftedPurity => purity_un_finite(&p)? - 1.0 / (1.0 + gamma),
                    Quantity::EnergyPerSite => ground_energy_analytic(&p) / n as f64,
                    Quantity::NumberVariance => number_variance(&p)?,
                    Quantity::Concurrence | Quantity::Mx => {
                        if ground.is_none() {
                            ground = Some(ground_state_sector(&p)?);
                        }
                        let gs = ground.as_ref().expect("just computed");
                        if q == Quantity::Mx {
                            magnetization_x(gs)?
                        } else {
                            concurrence(&two_site_rdm(gs, 0, 1)?)?
                        }
                    }
                }
            }
        };
        values.push(value);
    }
    Ok(SweepRow {
        g,
        gamma,
        size: cfg.size,
        values,
    })
}

/// Write rows as CSV (with header) or JSON lines.
pub fn write_rows(
    out: &mut impl Write,
    cfg: &SweepConfig,
    rows: &[SweepRow],
    format: Format,
) -> std::io::Result<()> {
    let header = cfg.header();
    if format == Format::Csv {
        writeln!(out, "{}", header.join(","))?;
    }
    for row in rows {
        let mut fields = vec![g15(row.g), g15(row.gamma)];
        fields.push(match (format, row.size) {
            (Format::Jsonl, Size::Thermo) => "\"inf\"".into(),
            (_, size) => size.to_string(),
        });
        fields.extend(row.values.iter().map(|&v| g15(v)));
        match format {
            Format::Csv => writeln!(out, "{}", fields.join(","))?,
            Format::Jsonl => {
                let body: Vec<String> = header
                    .iter()
                    .zip(&fields)
                    .map(|(k, v)| format!("\"{k}\":{v}"))
                    .collect();
                writeln!(out, "{{{}}}", body.join(","))?;
            }
        }
    }
    Ok(())
}
