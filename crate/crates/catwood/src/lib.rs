//! Census harness, file formats and command-line interface on top of
//! `catwood-core`.

pub mod census;
pub mod cli;
pub mod dot;
pub mod error;
pub mod json;

pub use census::{run_census, CensusOptions, CensusReport};
pub use error::CliError;
