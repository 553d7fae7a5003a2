//! Experiment commands behind the `hilie` binary.

pub mod commands;
pub mod report;

pub use report::{ExperimentReport, Format};
