//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;

use genent::algebra::{make_su2_local, purity, Spin};
use genent::bcs::{number_variance, purity_so2n, purity_un_finite, purity_un_thermo, G_C};
use genent::linalg::{evolve, State};
use genent::{ChainParams, C64};
use genent_cli::{run_compare, run_examples, run_exponent, run_sweep, Quantity, Size, SweepConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

type Outcome = (bool, String);

const GAMMAS: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn closed_form() -> Outcome {
    let ordered = [0.5 + 1e-12, 0.51, 0.6, 0.75, 1.0, 2.0, 10.0]
        .iter()
        .all(|&g| purity_un_thermo(g, 0.5).unwrap() == 2.0 / 3.0);
    let origin = GAMMAS
        .iter()
        .all(|&gamma| purity_un_thermo(0.0, gamma).unwrap() == 1.0);
    let gap = GAMMAS
        .iter()
        .map(|&gamma| (purity_un_thermo(G_C, gamma).unwrap() - 1.0 / (1.0 + gamma)).abs())
        .fold(0.0, f64::max);
    (
        ordered && origin && gap <= 1e-12,
        format!("P(g>1/2, 0.5) = 2/3: {ordered}; P(0, gamma) = 1: {origin}; branch gap at g_c {gap:.1e}"),
    )
}

fn disorder_parameter() -> Outcome {
    let mut worst_ordered: f64 = 0.0;
    let mut min_disordered = f64::INFINITY;
    for gamma in [0.25, 0.5, 1.0] {
        let cfg = SweepConfig {
            gamma,
            g_min: 0.0,
            g_max: 1.0,
            steps: 200,
            size: Size::Thermo,
            quantities: vec![Quantity::ShiftedPurity],
        };
        for row in run_sweep(&cfg).unwrap() {
            let v = row.values[0];
            if row.g > G_C {
                worst_ordered = worst_ordered.max(v.abs());
            } else if row.g < G_C {
                min_disordered = min_disordered.min(v);
            }
        }
    }
    (
        worst_ordered <= 1e-14 && min_disordered > 0.0,
        format!(
            "max |P'| for g > 1/2: {worst_ordered:.1e}; min P' for g < 1/2: {min_disordered:.3e}"
        ),
    )
}

fn critical_exponent() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for gamma in [0.5, 1.0] {
        let fit = run_exponent(gamma, (0.45, 0.499), 50).unwrap();
        ok &= (fit.nu - 1.0).abs() <= 0.05;
        parts.push(format!(
            "gamma={gamma}: nu={:.4} (r^2 {:.4})",
            fit.nu, fit.r_squared
        ));
    }
    (ok, parts.join("; "))
}

fn dual_oracle() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut at = String::new();
    for n in [4, 6, 8, 10, 12] {
        for gamma in [0.5, 1.0] {
            for g in [0.0, 0.25, 0.5, 0.75] {
                let r = run_compare(n, gamma, g).unwrap();
                if r.max_deviation >= worst {
                    worst = r.max_deviation;
                    at = format!("N={n} gamma={gamma} g={g}");
                }
            }
        }
    }
    (
        worst <= 1e-9,
        format!("max deviation {worst:.2e} at {at} over 40 points"),
    )
}

fn number_fluctuations() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let n = 2 * rng.gen_range(2..=256);
        let p = ChainParams::new(n, rng.gen_range(0.0..2.0), rng.gen_range(0.0..=1.0)).unwrap();
        let identity = 1.0 - 2.0 * number_variance(&p).unwrap() / n as f64;
        worst = worst.max((purity_un_finite(&p).unwrap() - identity).abs());
    }
    (
        worst <= 1e-12,
        format!("max residual {worst:.1e} over 100 random (N, g, gamma)"),
    )
}

fn so2n_maximality() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for gamma in linspace(0.0, 1.0, 11) {
        for g in linspace(0.0, 2.0, 21) {
            for n in [4, 16, 64] {
                let p = ChainParams::new(n, g, gamma).unwrap();
                worst = worst.max((purity_so2n(&p).unwrap() - 1.0).abs());
                count += 1;
            }
        }
    }
    (
        worst <= 1e-12,
        format!("max |P - 1| {worst:.1e} over {count} points"),
    )
}

fn canonical_suite() -> Outcome {
    let results = run_examples().unwrap();
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} / {}", r.scenario, r.basis))
        .collect();
    let worst = results
        .iter()
        .map(|r| (r.purity - r.expected).abs())
        .fold(0.0, f64::max);
    let exact = results
        .iter()
        .all(|r| r.expected == 0.0 || r.expected == 1.0);
    (
        failed.is_empty() && exact,
        format!(
            "{} scenarios, max |P - expected| {worst:.1e}, failures {failed:?}",
            results.len()
        ),
    )
}

fn concurrence_behavior() -> Outcome {
    let mut ok = true;
    let mut peaks = Vec::new();
    let mut parts = Vec::new();
    for n in [8, 10, 12] {
        let cfg = SweepConfig {
            gamma: 1.0,
            g_min: 0.30,
            g_max: 0.70,
            steps: 41,
            size: Size::Finite(n),
            quantities: vec![Quantity::Concurrence],
        };
        let rows = run_sweep(&cfg).unwrap();
        let (mut jump, mut peak, mut peak_g) = (0.0f64, 0.0f64, 0.0);
        for w in rows.windows(2) {
            let d = (w[1].values[0] - w[0].values[0]).abs();
            jump = jump.max(d);
            let slope = d / (w[1].g - w[0].g);
            if slope > peak {
                peak = slope;
                peak_g = 0.5 * (w[0].g + w[1].g);
            }
        }
        ok &= jump < 0.02;
        peaks.push(peak);
        parts.push(format!(
            "N={n}: max jump {jump:.4}, peak |dC/dg| {peak:.3} at g={peak_g:.3}"
        ));
    }
    ok &= peaks.windows(2).all(|w| w[1] > w[0]);
    (ok, parts.join("; "))
}

fn finite_size_convergence() -> Outcome {
    let exact = purity_un_thermo(0.3, 1.0).unwrap();
    let errors: Vec<f64> = [64, 128, 256, 512]
        .iter()
        .map(|&n| {
            (purity_un_finite(&ChainParams::new(n, 0.3, 1.0).unwrap()).unwrap() - exact).abs()
        })
        .collect();
    let ratios: Vec<f64> = errors.windows(2).map(|w| w[0] / w[1]).collect();
    let ok = ratios.iter().all(|r| (1.5..=2.5).contains(r));
    (
        ok,
        format!(
            "errors [{}] at N = 64..512, successive ratios [{}]",
            errors
                .iter()
                .map(|e| format!("{e:.2e}"))
                .collect::<Vec<_>>()
                .join(", "),
            ratios
                .iter()
                .map(|r| format!("{r:.2}"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    )
}

fn group_invariance() -> Outcome {
    let basis = make_su2_local::<f64>(1, Spin::One).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let amps = (0..3)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let psi = State::normalized(amps).unwrap();
        let x = &basis.elements()[rng.gen_range(0..3)];
        let t = rng.gen_range(-20.0..20.0);
        let before = purity(&psi, &basis).unwrap().value;
        let after = purity(&evolve(&psi, x, t).unwrap(), &basis).unwrap().value;
        worst = worst.max((before - after).abs());
    }
    (
        worst <= 1e-9,
        format!("max |dP| {worst:.1e} over 1000 random (state, generator, time)"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("closed-form purity", closed_form),
        ("disorder parameter", disorder_parameter),
        ("critical exponent", critical_exponent),
        ("dual-oracle equivalence", dual_oracle),
        ("number-fluctuation identity", number_fluctuations),
        ("so(2N) maximality", so2n_maximality),
        ("canonical suite", canonical_suite),
        ("concurrence behavior", concurrence_behavior),
        ("finite-size convergence", finite_size_convergence),
        ("group invariance", group_invariance),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = check();
        failures += usize::from(!ok);
        println!(
            "{} {:>2} {name}: {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1
        );
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
