//! Fullerene isomers from face spirals and the exact spectral invariants of
//! their dual facet graphs.
//!
//! The pipeline: enumerate or parse [`SpiralSequence`]s, [`wind`] them into
//! a [`FullereneDual`], take the pentagon or hexagon [`FacetSubgraph`], then
//! compute Newton values `tr(A^k)`, characteristic polynomials and spectra
//! on its [`AdjacencyMatrix`]. Isomer sets are clustered by exact Newton
//! values and scored with per-isomer descriptors.

pub mod cluster;
pub mod descriptors;
pub mod dual;
pub mod error;
pub mod facetgraph;
pub mod spectral;
pub mod spiral;
pub mod stats;

pub use dual::{FullereneDual, Turn};
pub use error::{Error, Result};
pub use facetgraph::{FacetSubgraph, Graph, GraphKind};
pub use spectral::{AdjacencyMatrix, CharPoly, NewtonVector, Spectrum};
pub use spiral::{canonical_spiral, enumerate_isomers, wind, FaceKind, Isomer, SpiralSequence};
