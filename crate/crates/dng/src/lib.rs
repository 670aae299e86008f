//! File formats, JSON reports, the parallel audit runner and the `dng`
//! command line on top of `dng-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod report;
pub mod runner;

pub use error::{DngError, Result};
