//! Command-line front end for `capelli-core`: compute commands and
//! exact verification suites with JSON or CSV output.

pub mod app;
pub mod suites;

pub use app::{run, Outcome};
pub use suites::{run_suite, run_suite_with_jobs, Bounds, CaseReport, Suite, SuiteReport};
