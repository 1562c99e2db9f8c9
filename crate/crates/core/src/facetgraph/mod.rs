//! The dual graph `T_n` and its induced pentagon and hexagon subgraphs.

mod cycles;
mod degree;
mod isomorphism;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dual::FullereneDual;
use crate::error::{Error, Result};
use crate::spiral::FaceKind;

pub use degree::{format_ratio, DegreeSummary};
pub use isomorphism::ISOMORPHISM_VERTEX_LIMIT;

/// A simple undirected graph with sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(order: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); order],
        }
    }

    /// Builds a graph from an undirected edge list; loops and repeated
    /// edges are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::DomainError(format!("edge {u}-{v} outside 0..{order}")));
            }
            if u == v {
                return Err(Error::DomainError(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DomainError(format!("repeated edge at vertex {v}")));
            }
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.order(), &edges).expect("a permutation keeps the graph simple")
    }

    pub fn is_connected(&self) -> bool {
        let m = self.order();
        if m == 0 {
            return true;
        }
        let mut seen = vec![false; m];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == m
    }

    /// Two-coloring of every connected component.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.order()];
        for s in 0..self.order() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// One `u v` line per edge, 1-based, sorted.
    pub fn edge_list_text(&self) -> String {
        self.edges()
            .into_iter()
            .map(|(u, v)| format!("{} {}\n", u + 1, v + 1))
            .collect()
    }
}

/// Which faces of the dual a facet graph keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GraphKind {
    /// All faces, `T_n`.
    #[serde(rename = "t")]
    Full,
    /// Pentagons only, `T_n^5`.
    #[serde(rename = "t5")]
    Pentagon,
    /// Hexagons only, `T_n^6`.
    #[serde(rename = "t6")]
    Hexagon,
}

impl GraphKind {
    pub const ALL: [GraphKind; 3] = [GraphKind::Full, GraphKind::Pentagon, GraphKind::Hexagon];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Full => "t",
            GraphKind::Pentagon => "t5",
            GraphKind::Hexagon => "t6",
        }
    }

    fn keeps(self, kind: FaceKind) -> bool {
        match self {
            GraphKind::Full => true,
            GraphKind::Pentagon => kind == FaceKind::Pentagon,
            GraphKind::Hexagon => kind == FaceKind::Hexagon,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(GraphKind::Full),
            "t5" => Ok(GraphKind::Pentagon),
            "t6" => Ok(GraphKind::Hexagon),
            other => Err(Error::DomainError(format!(
                "unknown graph kind {other:?} (expected t, t5 or t6)"
            ))),
        }
    }
}

/// Induced subgraph of a dual on the faces selected by `kind`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSubgraph {
    kind: GraphKind,
    graph: Graph,
    faces: Vec<usize>,
}

impl FacetSubgraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Parent face id of each vertex.
    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        DegreeSummary::of(&self.graph)
    }
}

impl std::ops::Deref for FacetSubgraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

pub fn induced_subgraph(dual: &FullereneDual, kind: GraphKind) -> FacetSubgraph {
    let m = dual.face_count();
    let faces: Vec<usize> = (0..m).filter(|&f| kind.keeps(dual.kind(f))).collect();
    let mut local = vec![usize::MAX; m];
    for (i, &f) in faces.iter().enumerate() {
        local[f] = i;
    }
    let adj = faces
        .iter()
        .map(|&f| {
            let mut list: Vec<usize> = dual
                .neighbors(f)
                .iter()
                .filter(|&&g| local[g] != usize::MAX)
                .map(|&g| local[g])
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    FacetSubgraph {
        kind,
        graph: Graph { adj },
        faces,
    }
}

/// Edge counts of the pentagon and hexagon subgraphs and whether they obey
/// `e6 = e5 + 3n/2 - 60`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRelation {
    pub e5: usize,
    pub e6: usize,
    pub holds: bool,
}

pub fn edge_relation_check(dual: &FullereneDual) -> EdgeRelation {
    let e5 = induced_subgraph(dual, GraphKind::Pentagon).edge_count();
    let e6 = induced_subgraph(dual, GraphKind::Hexagon).edge_count();
    let holds = e6 as i64 == e5 as i64 + 3 * dual.n() as i64 / 2 - 60;
    EdgeRelation { e5, e6, holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spiral::{wind, SpiralSequence};

    fn buckminster() -> FullereneDual {
        wind(&SpiralSequence::new(60, [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap()).unwrap()
    }

    fn icosahedron() -> FullereneDual {
        wind(&SpiralSequence::new(20, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]).unwrap()).unwrap()
    }

    #[test]
    fn buckminster_subgraphs() {
        let dual = buckminster();
        let t6 = induced_subgraph(&dual, GraphKind::Hexagon);
        assert_eq!(t6.order(), 20);
        assert_eq!(t6.edge_count(), 30);
        assert!((0..20).all(|v| t6.degree(v) == 3));
        let t5 = induced_subgraph(&dual, GraphKind::Pentagon);
        assert_eq!(t5.order(), 12);
        assert_eq!(t5.edge_count(), 0);
        assert!(t6.faces().iter().all(|&f| dual.kind(f) == FaceKind::Hexagon));
    }

    #[test]
    fn icosahedron_pentagon_graph_is_the_dual() {
        let dual = icosahedron();
        let t5 = induced_subgraph(&dual, GraphKind::Pentagon);
        let t = induced_subgraph(&dual, GraphKind::Full);
        assert_eq!(t5.graph(), t.graph());
        assert_eq!(t5.edge_count(), 30);
        assert_eq!(induced_subgraph(&dual, GraphKind::Hexagon).order(), 0);
    }

    #[test]
    fn edge_relation_examples() {
        assert_eq!(
            edge_relation_check(&buckminster()),
            EdgeRelation { e5: 0, e6: 30, holds: true }
        );
        assert_eq!(
            edge_relation_check(&icosahedron()),
            EdgeRelation { e5: 30, e6: 0, holds: true }
        );
    }

    #[test]
    fn bipartite_examples() {
        let t6 = induced_subgraph(&buckminster(), GraphKind::Hexagon);
        assert!(!t6.is_bipartite());
        assert!(Graph::empty(5).is_bipartite());
        assert!(Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap().is_bipartite());
    }

    #[test]
    fn edge_list_is_one_based_and_sorted() {
        let g = Graph::from_edges(3, &[(2, 1), (0, 2)]).unwrap();
        assert_eq!(g.edge_list_text(), "1 3\n2 3\n");
    }

    #[test]
    fn graph_kind_round_trip() {
        for kind in GraphKind::ALL {
            assert_eq!(kind.as_str().parse::<GraphKind>().unwrap(), kind);
        }
        assert!("t7".parse::<GraphKind>().is_err());
    }

    #[test]
    fn from_edges_rejects_loops_and_repeats() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }
}
