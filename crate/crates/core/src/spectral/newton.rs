use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::facetgraph::{Graph, GraphKind};

use super::AdjacencyMatrix;

/// Default cap on `order * K` for [`newton_vector`].
pub const NEWTON_BUDGET: usize = 1_000_000;

/// Exact traces `N(A, k) = tr(A^k)` for `k = 1..=K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonVector {
    values: Vec<BigUint>,
}

impl NewtonVector {
    pub fn max_degree(&self) -> usize {
        self.values.len()
    }

    /// `N(A, k)`, 1-based.
    pub fn get(&self, k: usize) -> &BigUint {
        &self.values[k - 1]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// One CSV record per degree.
    pub fn rows(&self, n: usize, isomer_index: usize, graph_kind: GraphKind) -> Vec<NewtonRow> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| NewtonRow {
                n,
                isomer_index,
                graph_kind,
                k: i + 1,
                value: v.to_string(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonRow {
    pub n: usize,
    pub isomer_index: usize,
    pub graph_kind: GraphKind,
    pub k: usize,
    pub value: String,
}

pub fn newton_vector(a: &AdjacencyMatrix, max_k: usize) -> Result<NewtonVector> {
    newton_vector_with_budget(a, max_k, NEWTON_BUDGET)
}

/// Accumulates `A^k` by repeated multiplication and reads off each trace.
/// Entries stay in `u128` while they fit and move to big integers on the
/// first overflow.
pub fn newton_vector_with_budget(a: &AdjacencyMatrix, max_k: usize, budget: usize) -> Result<NewtonVector> {
    if max_k == 0 {
        return Err(Error::DomainError("Newton degree must be at least 1".into()));
    }
    let m = a.order();
    if m.saturating_mul(max_k) > budget {
        return Err(Error::ResourceLimit {
            what: "Newton order * degree",
            value: m.saturating_mul(max_k),
            limit: budget,
        });
    }
    let g = a.graph();
    let mut values = Vec::with_capacity(max_k);
    let mut power: Vec<u128> = (0..m * m).map(|x| u128::from(x % (m + 1) == 0)).collect();
    let mut k = 0;
    while k < max_k {
        match step_small(g, &power) {
            Some(next) => {
                power = next;
                k += 1;
                values.push(BigUint::from(trace(&power, m)));
            }
            None => break,
        }
    }
    if k < max_k {
        let mut big: Vec<BigUint> = power.into_iter().map(BigUint::from).collect();
        while k < max_k {
            big = step_big(g, &big);
            k += 1;
            values.push((0..m).map(|i| &big[i * m + i]).sum());
        }
    }
    Ok(NewtonVector { values })
}

fn trace(p: &[u128], m: usize) -> u128 {
    (0..m).map(|i| p[i * m + i]).sum()
}

/// `P A` in checked arithmetic; `None` on overflow. Rows of `P A` are sums
/// of rows of `P` picked by the neighbors of each column.
fn step_small(g: &Graph, p: &[u128]) -> Option<Vec<u128>> {
    let m = g.order();
    let mut next = vec![0u128; m * m];
    for i in 0..m {
        let row = &p[i * m..(i + 1) * m];
        for j in 0..m {
            let mut s: u128 = 0;
            for &l in g.neighbors(j) {
                s = s.checked_add(row[l])?;
            }
            next[i * m + j] = s;
        }
    }
    // The trace sums m entries; keep headroom so it cannot overflow either.
    let headroom = u128::MAX / (m.max(1) as u128);
    next.iter().all(|&x| x <= headroom).then_some(next)
}

fn step_big(g: &Graph, p: &[BigUint]) -> Vec<BigUint> {
    let m = g.order();
    let mut next = vec![BigUint::zero(); m * m];
    for i in 0..m {
        for j in 0..m {
            let cell = &mut next[i * m + j];
            for &l in g.neighbors(j) {
                *cell += &p[i * m + l];
            }
        }
    }
    next
}
