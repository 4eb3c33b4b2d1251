//! Exact construction and verification of clique bitrades in
//! distance-regular graphs.
//!
//! The crate is organized bottom-up:
//!
//! - [`gfq`]: small finite fields, RREF subspaces, Gaussian binomials and
//!   the hyperbolic quadratic form.
//! - [`graph`]: labeled graphs, BFS distances, completely regular sets,
//!   distance-regularity and clique systems.
//! - [`spectral`]: intersection-matrix spectra, standard eigenvectors,
//!   eigenfunctions and the weight-distribution bound, all in exact
//!   rational arithmetic.
//! - [`families`]: octahedra, Hamming, Johnson, halved cubes, Doob,
//!   Grassmann and dual polar graphs with their clique systems.
//! - [`bitrades`]: the bitrade criteria, minimality, subgraph
//!   distance-regularity, clique designs and the minimum constructions.
//! - [`suite`]: host pipelines and the reproducible check matrix behind
//!   `drgtrade report --all`.

pub mod bitrades;
pub mod error;
pub mod families;
pub mod gfq;
pub mod graph;
pub mod spectral;
pub mod suite;

pub use error::{Error, Result};
