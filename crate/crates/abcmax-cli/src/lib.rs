//! Command-line surface for the abcmax library.
//!
//! This crate hosts everything that needs std: graph6 serialization, the
//! threaded shard executor, formula sweeps with CSV and SVG output, the JSON
//! report envelope, and the argument-parsing dispatch behind the `abcmax`
//! binary. The binary itself is a thin wrapper over [`cli::run`].

pub mod cli;
pub mod exec;
pub mod graph6;
pub mod report;
pub mod svg;
pub mod sweep;
