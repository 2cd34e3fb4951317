//! Command-line front end for the `genent` library.
//!
//! Each subcommand is a plain function returning data, with separate
//! renderers, so the same code paths serve the binary and the tests.

pub mod args;
pub mod compare;
pub mod error;
pub mod exponent;
pub mod format;
pub mod scenarios;
pub mod sweep;

pub use compare::{run_compare, CompareReport, COMPARE_TOL};
pub use error::{exit, CliError, Result};
pub use exponent::run_exponent;
pub use scenarios::{run_examples, ScenarioResult, SCENARIO_TOL};
pub use sweep::{run_sweep, Format, Quantity, Size, SweepConfig, SweepRow};
