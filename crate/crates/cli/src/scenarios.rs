//! The two-qubit and spin-1 scenarios with exactly known purities.

use std::fmt::Write as _;

use genent::algebra::{
    make_full_traceless, make_su2_local, make_u2_pair_modes, purity, ObservableBasis, Spin,
};
use genent::linalg::State;
use genent::C64;

use crate::error::Result;
use crate::format::g15;

/// Tolerance on the expected purity values.
pub const SCENARIO_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioResult {
    pub scenario: &'static str,
    pub basis: String,
    pub purity: f64,
    pub expected: f64,
}

impl ScenarioResult {
    pub fn passed(&self) -> bool {
        (self.purity - self.expected).abs() <= SCENARIO_TOL
    }
}

fn superposition(dim: usize, terms: &[(usize, f64)]) -> Result<State<f64>> {
    let terms: Vec<(usize, C64)> = terms.iter().map(|&(i, a)| (i, C64::new(a, 0.0))).collect();
    Ok(State::superposition(dim, &terms)?)
}

/// Purities of the fixed scenario list. Sites are little endian, so on two
/// qubits `|up, down>` (site 0 up) is index 1, and on two spin-1 sites with
/// local order `|1>, |0>, |-1>` the state `|m1, m2>` is `i1 + 3 i2`.
pub fn run_examples() -> Result<Vec<ScenarioResult>> {
    let local_half = make_su2_local::<f64>(2, Spin::Half)?;
    let su4 = make_full_traceless::<f64>(4)?;
    let u2 = make_u2_pair_modes::<f64>()?;
    let spin_one = make_su2_local::<f64>(1, Spin::One)?;
    let su3 = make_full_traceless::<f64>(3)?;
    let local_one = make_su2_local::<f64>(2, Spin::One)?;

    let product = State::basis(4, 1)?;
    let bell = superposition(4, &[(1, 1.0), (2, 1.0)])?;
    let singlet = superposition(4, &[(1, 1.0), (2, -1.0)])?;
    let m = |i| State::basis(3, i);

    let cases: Vec<(&'static str, &State<f64>, &ObservableBasis<f64>, f64)> = vec![
        ("product |up,down>", &product, &local_half, 1.0),
        ("bell (|01>+|10>)/sqrt2", &bell, &local_half, 0.0),
        ("product |up,down>", &product, &su4, 1.0),
        ("bell (|01>+|10>)/sqrt2", &bell, &su4, 1.0),
        ("bell (|ud>-|du>)/sqrt2", &singlet, &u2, 1.0),
    ];
    let (one, zero, minus) = (m(0)?, m(1)?, m(2)?);
    let spin_cases = [
        ("spin-1 |1>", &one, 1.0),
        ("spin-1 |0>", &zero, 0.0),
        ("spin-1 |-1>", &minus, 1.0),
    ];
    let one_one = State::basis(9, 0)?;
    let zero_zero = State::basis(9, 1 + 3)?;

    let mut out = Vec::new();
    let mut push =
        |scenario, psi: &State<f64>, basis: &ObservableBasis<f64>, expected| -> Result<()> {
            let p = purity(psi, basis)?;
            out.push(ScenarioResult {
                scenario,
                basis: p.basis,
                purity: p.value,
                expected,
            });
            Ok(())
        };
    for (name, psi, basis, expected) in cases {
        push(name, psi, basis, expected)?;
    }
    for (name, psi, expected) in spin_cases {
        push(name, psi, &spin_one, expected)?;
    }
    for (name, psi, _) in spin_cases {
        push(name, psi, &su3, 1.0)?;
    }
    push("spin-1 |1>|1>", &one_one, &local_one, 1.0)?;
    push("spin-1 |0>|0>", &zero_zero, &local_one, 0.0)?;
    Ok(out)
}

pub fn render_examples(results: &[ScenarioResult]) -> String {
    let mut s = String::new();
    let row = |s: &mut String, a: &str, b: &str, c: &str, d: &str, e: &str| {
        writeln!(s, "{a:<26}{b:<24}{c:<24}{d:<10}{e}").expect("write to string")
    };
    row(&mut s, "scenario", "basis", "purity", "expected", "status");
    for r in results {
        let status = if r.passed() { "pass" } else { "fail" };
        row(
            &mut s,
            r.scenario,
            &r.basis,
            &g15(r.purity),
            &g15(r.expected),
            status,
        );
    }
    s
}
