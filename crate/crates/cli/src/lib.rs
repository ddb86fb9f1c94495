//! Command-line front end: argument handling, knot tables, event lists and output formats.

pub mod args;
pub mod events;
pub mod output;
mod run;
pub mod table;

pub use run::{exit_code, run, Outcome, EXIT_INPUT, EXIT_INTERNAL, EXIT_RESOURCE};
