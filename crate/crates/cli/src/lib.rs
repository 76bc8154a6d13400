//! Library side of the `braid3` command-line tool: subcommands, output
//! rendering and the replication suite, kept here so they can be tested
//! without spawning the binary.

pub mod commands;
pub mod golden;
pub mod render;
pub mod suite;
