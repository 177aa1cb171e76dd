//! Command-line front end for `outerinj`: the edge-list format and the
//! subcommands, kept in a library so tests can call them directly.

pub mod commands;
pub mod edgelist;
