//! Characteristic-polynomial coefficients from linear subgraphs, and Newton
//! values recovered from them. Exponential; meant for small verification
//! graphs.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::facetgraph::Graph;

use super::AdjacencyMatrix;

/// Largest order accepted by [`sachs_coefficients`].
pub const SACHS_VERTEX_LIMIT: usize = 14;

/// `S_1..=S_up_to`, the elementary symmetric functions of the eigenvalues.
///
/// A linear subgraph is a vertex-disjoint union of single edges and simple
/// cycles. With `e` edge components and `c` cycles on `j` vertices it adds
/// `(-1)^j (-1)^(e+c) 2^c` to `S_j`.
pub fn sachs_coefficients(a: &AdjacencyMatrix, up_to: usize) -> Result<Vec<BigInt>> {
    let m = a.order();
    if m > SACHS_VERTEX_LIMIT {
        return Err(Error::ResourceLimit {
            what: "linear-subgraph enumeration vertex count",
            value: m,
            limit: SACHS_VERTEX_LIMIT,
        });
    }
    if up_to > m {
        return Err(Error::DomainError(format!(
            "coefficient S_{up_to} requested for order {m}"
        )));
    }
    // sums[j] collects (-1)^(e+c) 2^c over linear subgraphs on j vertices.
    let mut sums = vec![0i64; m + 1];
    let mut walker = LinearSubgraphs {
        g: a.graph(),
        used: vec![false; m],
        sums: &mut sums,
    };
    walker.visit(0, 0, 1);
    Ok((1..=up_to)
        .map(|j| {
            let s = BigInt::from(sums[j]);
            if j % 2 == 0 { s } else { -s }
        })
        .collect())
}

struct LinearSubgraphs<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    sums: &'a mut [i64],
}

impl LinearSubgraphs<'_> {
    /// Decides vertex `v` onwards; `covered` vertices are already in
    /// components, whose combined weight is `weight`.
    fn visit(&mut self, v: usize, covered: usize, weight: i64) {
        let m = self.g.order();
        let Some(v) = (v..m).find(|&u| !self.used[u]) else {
            self.sums[covered] += weight;
            return;
        };
        // v stays outside the subgraph.
        self.used[v] = true;
        self.visit(v + 1, covered, weight);
        // v is the smaller end of an edge component.
        for &w in self.g.neighbors(v) {
            if w > v && !self.used[w] {
                self.used[w] = true;
                self.visit(v + 1, covered + 2, -weight);
                self.used[w] = false;
            }
        }
        // v is the smallest vertex of a cycle.
        let mut path = vec![v];
        self.cycles_from(&mut path, covered, weight);
        self.used[v] = false;
    }

    /// Extends the path `v = path[0], ...` through unused vertices above
    /// `v`; each closed cycle is counted once by requiring
    /// `path[1] < path.last()`.
    fn cycles_from(&mut self, path: &mut Vec<usize>, covered: usize, weight: i64) {
        let v = path[0];
        let last = *path.last().expect("path starts with v");
        for i in 0..self.g.neighbors(last).len() {
            let w = self.g.neighbors(last)[i];
            if w <= v || self.used[w] {
                continue;
            }
            path.push(w);
            self.used[w] = true;
            if path.len() >= 3 && path[1] < w && self.g.are_adjacent(w, v) {
                self.visit(v + 1, covered + path.len(), -2 * weight);
            }
            self.cycles_from(path, covered, weight);
            self.used[w] = false;
            path.pop();
        }
    }
}

/// `N(A, k)` from the Sachs coefficients through Newton's identities:
/// with `a_j = (-1)^j S_j` the coefficient of `x^(m-j)`,
/// `N_k = -k a_k - sum_{j=1}^{k-1} a_j N_{k-j}`.
pub fn newton_recursive(a: &AdjacencyMatrix, k: usize) -> Result<BigInt> {
    let m = a.order();
    if k < 2 || k > m {
        return Err(Error::DomainError(format!(
            "recursive Newton value needs 2 <= k <= order, got k={k}, order={m}"
        )));
    }
    let s = sachs_coefficients(a, k)?;
    let coeff: Vec<BigInt> = s
        .iter()
        .enumerate()
        .map(|(i, sj)| if (i + 1) % 2 == 0 { sj.clone() } else { -sj })
        .collect();
    let mut n: Vec<BigInt> = Vec::with_capacity(k);
    for t in 1..=k {
        let mut value = -BigInt::from(t) * &coeff[t - 1];
        for j in 1..t {
            value -= &coeff[j - 1] * &n[t - j - 1];
        }
        n.push(value);
    }
    Ok(n.pop().expect("k >= 2"))
}
