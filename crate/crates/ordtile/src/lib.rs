//! File formats, JSON reports and the command-line front end for
//! [`ordtile_core`].

pub mod cli;
pub mod format;
pub mod report;

pub use format::{parse_any_graph, parse_graph, write_graph, FormatError};
