//! Log-log fit of the shifted purity below the critical coupling.

use std::fmt::Write as _;

use genent::bcs::{critical_exponent_fit, ExponentFit};

use crate::error::Result;
use crate::format::g15;

pub fn run_exponent(gamma: f64, window: (f64, f64), points: usize) -> Result<ExponentFit<f64>> {
    Ok(critical_exponent_fit(gamma, window, points)?)
}

pub fn render_fit(gamma: f64, window: (f64, f64), fit: &ExponentFit<f64>) -> String {
    let mut s = String::new();
    for (k, v) in [
        ("gamma", g15(gamma)),
        ("window", format!("{},{}", g15(window.0), g15(window.1))),
        ("points", fit.points.len().to_string()),
        ("nu", g15(fit.nu)),
        ("intercept", g15(fit.intercept)),
        ("r_squared", g15(fit.r_squared)),
        ("max_residual", g15(fit.max_residual())),
    ] {
        writeln!(s, "{k:<14}{v}").expect("write to string");
    }
    s
}

/// Parse `lo,hi`.
pub fn parse_window(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `lo,hi`, got `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("bad bound `{t}`: {e}"))
    };
    Ok((parse(lo)?, parse(hi)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_parsing() {
        assert_eq!(parse_window("0.4,0.49").unwrap(), (0.4, 0.49));
        assert!(parse_window("0.4").is_err());
        assert!(parse_window("a,b").is_err());
    }

    #[test]
    fn ising_fit_and_guard() {
        let fit = run_exponent(1.0, (0.40, 0.49), 50).unwrap();
        assert!((0.95..=1.05).contains(&fit.nu));
        assert!(render_fit(1.0, (0.40, 0.49), &fit).contains("points        50"));
        assert!(run_exponent(1.0, (0.45, 0.55), 50).is_err());
    }
}
