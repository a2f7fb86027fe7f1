//! File format, report rendering and subcommands behind the `semigraph`
//! binary.

pub mod commands;
pub mod format;
pub mod output;
