//! Command-line front end and file formats for `ivpoly-core`.
//!
//! The mathematical core lives in `ivpoly-core`; this crate adds the
//! expression/matrix text parsers, the published JSON schemas, and the
//! `ivpoly` binary's command implementations.

pub mod app;
pub mod json;
pub mod parse;

pub use app::{run, Cli, CliError, Outcome};
