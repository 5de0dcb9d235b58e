//! Exact combinatorics of perfect and partial tilings in vertex-ordered graphs.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: rational
//! thresholds are [`Rational`] values and every search result carries a
//! certificate that can be re-checked by an independent verifier.
//!
//! Conventions: host and pattern vertices are `usize` indices starting at 0
//! (the text format and JSON reports use labels `1..=h`). Colour-class indices
//! inside witnesses (`i`, `j` of a local barrier, flexibility boundaries,
//! fixed-prefix indices) are 1-based, matching how such indices are usually
//! written.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod colouring;
pub mod critical;
pub mod embed;
mod error;
pub mod extremal;
pub mod graph;
pub mod multipartite;
pub mod partial;
pub mod rational;
pub mod structure;
pub mod thresholds;
pub mod tiling;

pub use colouring::{interval_chromatic, IntervalColouring};
pub use critical::{chi_star_bounds, chi_star_exact, colouring_statistics, ChiStarResult, SearchEffort};
pub use embed::{enumerate_copies, Embedding};
pub use error::Error;
pub use graph::{Host, OrderedGraph, MAX_ORDER};
pub use multipartite::{CompleteMultipartite, OrderedMultipartite};
pub use rational::Rational;
pub use tiling::{Budget, TilingAnswer, TilingStatus, TilingWitness};

pub type Result<T, E = Error> = core::result::Result<T, E>;
