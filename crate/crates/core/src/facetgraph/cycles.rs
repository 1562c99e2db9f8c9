//! Bounded searches for cycles of a fixed length.

use super::Graph;

impl Graph {
    /// `true` iff the graph has a cycle of exactly `k` distinct vertices.
    ///
    /// Every cycle is found from its smallest vertex, walking only through
    /// larger vertices.
    pub fn has_simple_cycle_of_length(&self, k: usize) -> bool {
        assert!(k >= 3, "cycles have at least 3 vertices");
        self.search_cycles(k, false)
    }

    /// `true` iff the graph has an induced (chord-free) cycle on exactly `k`
    /// vertices.
    pub fn has_chordless_cycle_of_length(&self, k: usize) -> bool {
        assert!(k >= 3, "cycles have at least 3 vertices");
        self.search_cycles(k, true)
    }

    fn search_cycles(&self, k: usize, chordless: bool) -> bool {
        if k > self.order() {
            return false;
        }
        let mut path = Vec::with_capacity(k);
        let mut on_path = vec![false; self.order()];
        (0..self.order()).any(|s| {
            path.push(s);
            on_path[s] = true;
            let found = self.extend_path(k, chordless, &mut path, &mut on_path);
            on_path[s] = false;
            path.pop();
            found
        })
    }

    fn extend_path(&self, k: usize, chordless: bool, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let start = path[0];
        let last = *path.last().expect("path is never empty");
        if path.len() == k {
            return self.are_adjacent(last, start);
        }
        let t = path.len();
        for &w in self.neighbors(last) {
            if w <= start || on_path[w] {
                continue;
            }
            if chordless && t >= 2 {
                let closes = self.are_adjacent(w, start);
                if closes != (t == k - 1) || path[1..t - 1].iter().any(|&u| self.are_adjacent(w, u)) {
                    continue;
                }
            }
            path.push(w);
            on_path[w] = true;
            let found = self.extend_path(k, chordless, path, on_path);
            on_path[w] = false;
            path.pop();
            if found {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(m: usize) -> Graph {
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        Graph::from_edges(m, &edges).unwrap()
    }

    #[test]
    fn cycles_have_their_own_length_only() {
        for m in 3..9 {
            let g = cycle(m);
            for k in 3..10 {
                assert_eq!(g.has_simple_cycle_of_length(k), k == m, "C{m} k={k}");
                assert_eq!(g.has_chordless_cycle_of_length(k), k == m, "C{m} k={k}");
            }
        }
    }

    #[test]
    fn a_chord_kills_the_induced_cycle() {
        // Square with one diagonal: a 4-cycle, but only triangles are induced.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(g.has_simple_cycle_of_length(4));
        assert!(!g.has_chordless_cycle_of_length(4));
        assert!(g.has_chordless_cycle_of_length(3));
    }

    #[test]
    fn edgeless_graph_has_no_cycles() {
        let g = Graph::empty(12);
        assert!((3..=12).all(|k| !g.has_simple_cycle_of_length(k)));
    }
}
