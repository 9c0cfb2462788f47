//! Distance Laplacian spectra of small connected graphs, together with the
//! exact chromatic and twin-structure data needed to test chromatic lower
//! bounds and eigenvalue distribution results against them.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: bitset graphs, graph6 / edge-list I/O, generators,
//!   canonical forms and the connected-graph corpus.
//! - [`metric`]: BFS distances, transmissions and the distance Laplacian.
//! - [`eigen`]: cyclic Jacobi eigensolver, spectra, interval counts and the
//!   closed-form spectrum of complete multipartite graphs.
//! - [`coloring`]: exact chromatic number and optimal colorings.
//! - [`twins`]: clique / independent twin classes and complement structure.
//! - [`verify`]: the checker registry, the extremal audit and report records.
//! - [`tables`]: regeneration of the two reference tables.

pub mod coloring;
pub mod eigen;
mod error;
pub mod graph;
pub mod metric;
pub mod tables;
pub mod twins;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, PartSizes};
