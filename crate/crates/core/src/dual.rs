//! The triangulated dual facet graph of a fullerene.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::spiral::{face_count, hexagon_count, FaceKind, PENTAGONS};

/// Direction of travel around a face's neighbor rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Turn {
    Ccw,
    Cw,
}

/// Dual graph `T_n`: one vertex per facet, an edge for every pair of facets
/// sharing an edge. Neighbor lists are stored in counter-clockwise rotation
/// order, so the planar embedding travels with the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullereneDual {
    n: usize,
    kinds: Vec<FaceKind>,
    rotation: Vec<Vec<usize>>,
    isomer_index: Option<usize>,
}

impl FullereneDual {
    /// Builds the dual from face labels and its counter-clockwise triangles,
    /// checking every structural invariant.
    pub fn from_triangles(n: usize, kinds: Vec<FaceKind>, triangles: &[[usize; 3]]) -> Result<Self> {
        let m = kinds.len();
        if m != face_count(n) {
            return Err(Error::InvalidDual(format!(
                "{m} faces, expected {}",
                face_count(n)
            )));
        }
        // successor[v] maps a neighbor u to the next neighbor after u around v.
        let mut successor: Vec<HashMap<usize, usize>> = vec![HashMap::new(); m];
        for &[a, b, c] in triangles {
            for (v, u, w) in [(a, b, c), (b, c, a), (c, a, b)] {
                if v >= m || u >= m || w >= m {
                    return Err(Error::InvalidDual(format!("face id out of range in {a},{b},{c}")));
                }
                if successor[v].insert(u, w).is_some() {
                    return Err(Error::InvalidDual(format!(
                        "directed edge {v}->{u} used by two triangles"
                    )));
                }
            }
        }
        let mut rotation = Vec::with_capacity(m);
        for (v, succ) in successor.iter().enumerate() {
            let Some(&start) = succ.keys().min() else {
                return Err(Error::InvalidDual(format!("face {v} is isolated")));
            };
            let mut ring = vec![start];
            let mut cur = succ[&start];
            while cur != start {
                if ring.len() > succ.len() {
                    return Err(Error::InvalidDual(format!("rotation at face {v} is not a cycle")));
                }
                ring.push(cur);
                cur = *succ
                    .get(&cur)
                    .ok_or_else(|| Error::InvalidDual(format!("open rotation at face {v}")))?;
            }
            if ring.len() != succ.len() {
                return Err(Error::InvalidDual(format!(
                    "face {v} is pinched (neighbors form several fans)"
                )));
            }
            rotation.push(ring);
        }
        let dual = FullereneDual {
            n,
            kinds,
            rotation,
            isomer_index: None,
        };
        dual.validate()?;
        Ok(dual)
    }

    /// Checks the fullerene invariants: 12 pentagons, valencies 5/6, `3n/2`
    /// edges, simple, connected, and every rotation face a triangle.
    pub fn validate(&self) -> Result<()> {
        let m = self.kinds.len();
        let pentagons = self.kinds.iter().filter(|&&k| k == FaceKind::Pentagon).count();
        if pentagons != PENTAGONS || m - pentagons != hexagon_count(self.n) {
            return Err(Error::InvalidDual(format!("{pentagons} pentagons")));
        }
        let mut degree_sum = 0;
        for v in 0..m {
            let nbrs = &self.rotation[v];
            if nbrs.len() != self.kinds[v].valency() {
                return Err(Error::InvalidDual(format!(
                    "face {v} has {} neighbors, valency is {}",
                    nbrs.len(),
                    self.kinds[v].valency()
                )));
            }
            degree_sum += nbrs.len();
            for (i, &u) in nbrs.iter().enumerate() {
                if u == v || nbrs[i + 1..].contains(&u) {
                    return Err(Error::InvalidDual(format!("face {v} has a loop or multi-edge")));
                }
                if !self.rotation[u].contains(&v) {
                    return Err(Error::InvalidDual(format!("edge {v}-{u} is not symmetric")));
                }
                let w = nbrs[(i + 1) % nbrs.len()];
                if !self.rotation[u].contains(&w) || self.succ(u, w) != v || self.succ(w, v) != u {
                    return Err(Error::InvalidDual(format!(
                        "rotation face ({v},{u},{w}) is not a triangle"
                    )));
                }
            }
        }
        if degree_sum != 3 * self.n {
            return Err(Error::InvalidDual(format!(
                "{} edges, expected {}",
                degree_sum / 2,
                3 * self.n / 2
            )));
        }
        if !self.is_connected() {
            return Err(Error::InvalidDual("graph is disconnected".into()));
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let m = self.kinds.len();
        let mut seen = vec![false; m];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == m
    }

    /// Atom count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn face_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, face: usize) -> FaceKind {
        self.kinds[face]
    }

    pub fn kinds(&self) -> &[FaceKind] {
        &self.kinds
    }

    /// Neighbors of `face` in counter-clockwise order.
    pub fn neighbors(&self, face: usize) -> &[usize] {
        &self.rotation[face]
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.rotation[a].contains(&b)
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = (0..self.face_count())
            .flat_map(|v| self.rotation[v].iter().filter(move |&&u| v < u).map(move |&u| (v, u)))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Counter-clockwise triangles (the atoms of the fullerene), each listed
    /// once starting from its smallest face.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::with_capacity(self.n);
        for v in 0..self.face_count() {
            let nbrs = &self.rotation[v];
            for (i, &u) in nbrs.iter().enumerate() {
                let w = nbrs[(i + 1) % nbrs.len()];
                if v < u && v < w {
                    out.push([v, u, w]);
                }
            }
        }
        out
    }

    /// The neighbor after `from` around `face` in the given direction.
    pub fn turn(&self, face: usize, from: usize, turn: Turn) -> usize {
        match turn {
            Turn::Ccw => self.succ(face, from),
            Turn::Cw => self.pred(face, from),
        }
    }

    fn position(&self, face: usize, nbr: usize) -> usize {
        self.rotation[face]
            .iter()
            .position(|&u| u == nbr)
            .unwrap_or_else(|| panic!("{nbr} is not a neighbor of {face}"))
    }

    fn succ(&self, face: usize, nbr: usize) -> usize {
        let ring = &self.rotation[face];
        ring[(self.position(face, nbr) + 1) % ring.len()]
    }

    fn pred(&self, face: usize, nbr: usize) -> usize {
        let ring = &self.rotation[face];
        ring[(self.position(face, nbr) + ring.len() - 1) % ring.len()]
    }

    /// 1-based rank of the isomer's canonical spiral, when known.
    pub fn isomer_index(&self) -> Option<usize> {
        self.isomer_index
    }

    pub fn with_isomer_index(mut self, index: usize) -> Self {
        self.isomer_index = Some(index);
        self
    }
}
