//! Exact and floating-point spectral invariants of adjacency matrices.
//!
//! Everything that decides a mathematical question (cospectrality,
//! clustering keys) goes through exact integers; eigenvalues are floats and
//! serve as diagnostics only.

mod charpoly;
mod eigen;
mod newton;
mod sachs;

use crate::error::{Error, Result};
use crate::facetgraph::Graph;

pub use charpoly::{char_poly, cospectral, CharPoly};
pub use eigen::{
    absolute_spectrum, eigenvalues, lambda_max_bounds, AbsoluteSpectrum, LambdaBounds, Spectrum, DEFAULT_TOLERANCE,
    MAX_SWEEPS,
};
pub use newton::{newton_vector, newton_vector_with_budget, NewtonRow, NewtonVector, NEWTON_BUDGET};
pub use sachs::{newton_recursive, sachs_coefficients, SACHS_VERTEX_LIMIT};

/// Symmetric 0/1 adjacency matrix with zero diagonal, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    graph: Graph,
}

impl AdjacencyMatrix {
    pub fn from_graph(graph: &Graph) -> AdjacencyMatrix {
        AdjacencyMatrix { graph: graph.clone() }
    }

    /// Builds the matrix from dense rows, checking squareness, symmetry,
    /// 0/1 entries and the zero diagonal.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<AdjacencyMatrix> {
        let m = rows.len();
        let mut edges = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::DomainError(format!("row {i} has {} entries, expected {m}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                if x > 1 || x != rows[j][i] || (i == j && x != 0) {
                    return Err(Error::DomainError(format!(
                        "entry ({i},{j}) breaks symmetry, 0/1 entries or zero diagonal"
                    )));
                }
                if x == 1 && i < j {
                    edges.push((i, j));
                }
            }
        }
        Ok(AdjacencyMatrix {
            graph: Graph::from_edges(m, &edges)?,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        u8::from(self.graph.are_adjacent(i, j))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        let m = self.order();
        (0..m).map(|i| (0..m).map(|j| self.entry(i, j)).collect()).collect()
    }
}

impl From<&Graph> for AdjacencyMatrix {
    fn from(g: &Graph) -> Self {
        AdjacencyMatrix::from_graph(g)
    }
}
