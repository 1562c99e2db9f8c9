use serde::Serialize;

use crate::error::{Error, Result};
use crate::facetgraph::GraphKind;

use super::{separates, NewtonTable};

/// Smallest even degrees that separate every isomer of a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KStarReport {
    pub n: usize,
    pub graph_kind: GraphKind,
    pub isomers: usize,
    pub k_single: usize,
    pub k_pair: usize,
    /// Every separating `(k1, k2)`, `k1 < k2 < k_single`, both even.
    pub admissible_pairs: Vec<(usize, usize)>,
    pub k_hierarchical: usize,
}

/// Searches even degrees up to the facet graph order; beyond it equal
/// Newton prefixes mean equal spectra, so no degree can help.
///
/// With fewer than two isomers every degree separates trivially and all
/// three values are 2. When `k_single` is 2 no smaller first degree exists
/// and `k_pair` is reported as 2 as well.
pub fn k_star(table: &NewtonTable) -> Result<KStarReport> {
    if table.is_empty() {
        return Err(Error::EmptyInput);
    }
    let bound = table.order().max(2);
    if table.max_k() < bound {
        return Err(Error::InvalidSchema(format!(
            "k* search needs Newton values up to {bound}, table has {}",
            table.max_k()
        )));
    }
    let evens: Vec<usize> = (2..=bound).step_by(2).collect();
    let k_single = evens
        .iter()
        .copied()
        .find(|&k| separates(table, &[k]))
        .ok_or_else(|| collision(table, bound))?;
    let admissible_pairs: Vec<(usize, usize)> = evens
        .iter()
        .copied()
        .filter(|&k2| k2 < k_single)
        .flat_map(|k2| evens.iter().copied().filter(move |&k1| k1 < k2).map(move |k1| (k1, k2)))
        .filter(|&(k1, k2)| separates(table, &[k1, k2]))
        .collect();
    let k_pair = admissible_pairs.iter().map(|p| p.1).min().unwrap_or(k_single);
    let k_hierarchical = evens
        .iter()
        .copied()
        .find(|&k| separates(table, &(2..=k).step_by(2).collect::<Vec<_>>()))
        .expect("the prefix up to k_single already separates");
    Ok(KStarReport {
        n: table.n(),
        graph_kind: table.graph_kind(),
        isomers: table.len(),
        k_single,
        k_pair,
        admissible_pairs,
        k_hierarchical,
    })
}

/// Evidence for a failed search: the first two isomers whose single value
/// at `bound` agrees, flagged cospectral when all values up to `bound` agree.
fn collision(table: &NewtonTable, bound: usize) -> Error {
    let mut order: Vec<usize> = (0..table.len()).collect();
    let vectors = table.vectors();
    order.sort_by(|&a, &b| vectors[a].get(bound).cmp(vectors[b].get(bound)).then(a.cmp(&b)));
    let (a, b) = order
        .windows(2)
        .find(|w| vectors[w[0]].get(bound) == vectors[w[1]].get(bound))
        .map(|w| (w[0], w[1]))
        .expect("no separating degree implies a collision at the bound");
    let cospectral = (1..=bound).all(|k| vectors[a].get(k) == vectors[b].get(k));
    let (first, second) = {
        let (x, y) = (table.indices()[a], table.indices()[b]);
        (x.min(y), x.max(y))
    };
    Error::NoCompleteClusterization {
        bound,
        first,
        second,
        cospectral,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spiral::enumerate_isomers;

    #[test]
    fn single_isomer() {
        let table = NewtonTable::compute(&enumerate_isomers(24, false).unwrap(), GraphKind::Hexagon, 2).unwrap();
        let r = k_star(&table).unwrap();
        assert_eq!((r.k_single, r.k_pair, r.k_hierarchical), (2, 2, 2));
        assert!(r.admissible_pairs.is_empty());
    }

    #[test]
    fn c28_separates_at_two() {
        let table = NewtonTable::compute(&enumerate_isomers(28, false).unwrap(), GraphKind::Hexagon, 4).unwrap();
        let r = k_star(&table).unwrap();
        assert_eq!((r.k_single, r.k_pair, r.k_hierarchical), (2, 2, 2));
    }

    #[test]
    fn cospectral_pair_blocks_completion() {
        // C32 has a cospectral pair of hexagon graphs.
        let table = NewtonTable::compute(&enumerate_isomers(32, false).unwrap(), GraphKind::Hexagon, 6).unwrap();
        match k_star(&table) {
            Err(Error::NoCompleteClusterization { cospectral, first, second, .. }) => {
                assert!(cospectral);
                assert!(first < second);
            }
            other => panic!("expected a collision, got {other:?}"),
        }
    }
}
