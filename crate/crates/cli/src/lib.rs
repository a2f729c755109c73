//! Library half of the `scx` binary: command implementations, the profile
//! document format, and the run-report types, exposed so integration
//! tests can parse emitted witnesses and re-check them.

pub mod commands;
pub mod doc;
pub mod report;
