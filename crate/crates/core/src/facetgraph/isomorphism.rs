//! Exact isomorphism test: joint color refinement of both graphs, then
//! individualization and backtracking over the first ambiguous color class.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::Graph;

/// Largest order accepted by [`Graph::is_isomorphic`].
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 128;

impl Graph {
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        let m = self.order();
        for order in [m, other.order()] {
            if order > ISOMORPHISM_VERTEX_LIMIT {
                return Err(Error::ResourceLimit {
                    what: "isomorphism vertex count",
                    value: order,
                    limit: ISOMORPHISM_VERTEX_LIMIT,
                });
            }
        }
        if m != other.order() || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        let pair = Pair { g: self, h: other };
        let colors: Vec<u32> = (0..2 * m).map(|v| pair.degree(v) as u32).collect();
        Ok(match pair.refine(colors) {
            Some(colors) => pair.search(colors),
            None => false,
        })
    }
}

/// Disjoint union of the two graphs: vertices `0..m` are `g`, `m..2m` are `h`.
struct Pair<'a> {
    g: &'a Graph,
    h: &'a Graph,
}

impl Pair<'_> {
    fn m(&self) -> usize {
        self.g.order()
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let m = self.m();
        let (list, offset) = if v < m {
            (self.g.neighbors(v), 0)
        } else {
            (self.h.neighbors(v - m), m)
        };
        list.iter().map(move |&w| w + offset)
    }

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Refines to the coarsest equitable coloring. Returns `None` as soon as
    /// the two halves disagree on some color class size.
    fn refine(&self, mut colors: Vec<u32>) -> Option<Vec<u32>> {
        let mut classes = distinct(&colors);
        loop {
            let signatures: Vec<(u32, Vec<u32>)> = (0..colors.len())
                .map(|v| {
                    let mut around: Vec<u32> = self.neighbors(v).map(|w| colors[w]).collect();
                    around.sort_unstable();
                    (colors[v], around)
                })
                .collect();
            let mut ids = BTreeMap::new();
            for s in &signatures {
                ids.entry(s).or_insert(0u32);
            }
            for (i, id) in ids.values_mut().enumerate() {
                *id = i as u32;
            }
            colors = signatures.iter().map(|s| ids[s]).collect();
            if !self.balanced(&colors) {
                return None;
            }
            let next = ids.len();
            if next == classes {
                return Some(colors);
            }
            classes = next;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let m = self.m();
        let mut count = vec![0i64; colors.len()];
        for (v, &c) in colors.iter().enumerate() {
            count[c as usize] += if v < m { 1 } else { -1 };
        }
        count.iter().all(|&c| c == 0)
    }

    fn search(&self, colors: Vec<u32>) -> bool {
        let m = self.m();
        let mut size = vec![0usize; 2 * m];
        for &c in &colors[..m] {
            size[c as usize] += 1;
        }
        // Smallest ambiguous class keeps the branching factor low.
        let target = (0..m)
            .filter(|&v| size[colors[v] as usize] > 1)
            .min_by_key(|&v| (size[colors[v] as usize], colors[v]));
        let Some(v) = target else {
            return self.is_mapping(&colors);
        };
        let cell = colors[v];
        let fresh = colors.iter().max().map_or(0, |&c| c + 1);
        (m..2 * m).filter(|&w| colors[w] == cell).any(|w| {
            let mut branch = colors.clone();
            branch[v] = fresh;
            branch[w] = fresh;
            self.refine(branch).is_some_and(|c| self.search(c))
        })
    }

    /// With all classes singletons, colors pair each `g` vertex with one `h`
    /// vertex; check that this bijection preserves adjacency.
    fn is_mapping(&self, colors: &[u32]) -> bool {
        let m = self.m();
        let mut in_h = vec![usize::MAX; 2 * m + 1];
        for w in 0..m {
            in_h[colors[m + w] as usize] = w;
        }
        let map: Vec<usize> = (0..m).map(|v| in_h[colors[v] as usize]).collect();
        self.g
            .edges()
            .into_iter()
            .all(|(a, b)| self.h.are_adjacent(map[a], map[b]))
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
