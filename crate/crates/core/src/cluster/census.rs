use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::facetgraph::{induced_subgraph, FacetSubgraph, GraphKind};
use crate::spectral::{char_poly, AdjacencyMatrix};
use crate::spiral::{enumerate_isomers, Isomer};

/// Ways of counting "non-unique spectra" for one graph kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusConvention {
    /// Spectra shared by at least two isomers.
    Groups,
    /// Isomers whose spectrum is shared with another isomer.
    Isomers,
    /// Unordered pairs of distinct cospectral isomers.
    Pairs,
}

impl CensusConvention {
    pub const ALL: [CensusConvention; 3] = [CensusConvention::Groups, CensusConvention::Isomers, CensusConvention::Pairs];
}

/// Isomers sharing one characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CospectralGroup {
    /// Sorted 1-based isomer indices.
    pub members: Vec<usize>,
    /// Members split into isomorphism classes of their facet graphs.
    pub isomorphism_classes: Vec<Vec<usize>>,
    /// Characteristic polynomial, highest degree first.
    pub char_poly: Vec<String>,
}

impl CospectralGroup {
    pub fn all_isomorphic(&self) -> bool {
        self.isomorphism_classes.len() == 1
    }

    pub fn pair_count(&self) -> usize {
        let s = self.members.len();
        s * (s - 1) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KindCensus {
    pub graph_kind: GraphKind,
    pub groups: usize,
    pub isomers: usize,
    pub pairs: usize,
    pub cospectral_groups: Vec<CospectralGroup>,
}

impl KindCensus {
    pub fn count(&self, convention: CensusConvention) -> usize {
        match convention {
            CensusConvention::Groups => self.groups,
            CensusConvention::Isomers => self.isomers,
            CensusConvention::Pairs => self.pairs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CospectralCensus {
    pub n: usize,
    pub isomer_count: usize,
    pub kinds: Vec<KindCensus>,
}

impl CospectralCensus {
    pub fn kind(&self, kind: GraphKind) -> Option<&KindCensus> {
        self.kinds.iter().find(|k| k.graph_kind == kind)
    }
}

/// Enumerates every isomer of `C_n` and takes its census.
pub fn cospectral_census(n: usize, graph_kinds: &[GraphKind]) -> Result<CospectralCensus> {
    let isomers = enumerate_isomers(n, false)?;
    cospectral_census_of(&isomers, graph_kinds)
}

/// Groups isomers by the exact characteristic polynomial of each requested
/// facet graph and splits every group into isomorphism classes.
pub fn cospectral_census_of(isomers: &[Isomer], graph_kinds: &[GraphKind]) -> Result<CospectralCensus> {
    let n = isomers.first().ok_or(Error::EmptyInput)?.spiral.n();
    if let Some(other) = isomers.iter().find(|i| i.spiral.n() != n) {
        return Err(Error::MixedAtomCounts(n, other.spiral.n()));
    }
    let duals = isomers
        .par_iter()
        .map(|i| i.dual())
        .collect::<Result<Vec<_>>>()?;
    let mut kinds = Vec::with_capacity(graph_kinds.len());
    for &kind in graph_kinds {
        let graphs: Vec<FacetSubgraph> = duals.par_iter().map(|d| induced_subgraph(d, kind)).collect();
        let polys: Vec<Vec<BigInt>> = graphs
            .par_iter()
            .map(|g| char_poly(&AdjacencyMatrix::from_graph(g.graph())).high_to_low())
            .collect();
        let mut by_poly: BTreeMap<&Vec<BigInt>, Vec<usize>> = BTreeMap::new();
        for (pos, p) in polys.iter().enumerate() {
            by_poly.entry(p).or_default().push(pos);
        }
        let mut groups = Vec::new();
        for (poly, positions) in by_poly.into_iter().filter(|(_, v)| v.len() > 1) {
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for &pos in &positions {
                let mut placed = false;
                for class in classes.iter_mut() {
                    if graphs[class[0]].is_isomorphic(&graphs[pos])? {
                        class.push(pos);
                        placed = true;
                        break;
                    }
                }
                if !placed {
                    classes.push(vec![pos]);
                }
            }
            let to_index = |v: &[usize]| {
                let mut out: Vec<usize> = v.iter().map(|&p| isomers[p].index).collect();
                out.sort_unstable();
                out
            };
            let mut isomorphism_classes: Vec<Vec<usize>> = classes.iter().map(|c| to_index(c)).collect();
            isomorphism_classes.sort();
            groups.push(CospectralGroup {
                members: to_index(&positions),
                isomorphism_classes,
                char_poly: poly.iter().map(ToString::to_string).collect(),
            });
        }
        groups.sort_by(|a, b| a.members.cmp(&b.members));
        kinds.push(KindCensus {
            graph_kind: kind,
            groups: groups.len(),
            isomers: groups.iter().map(|g| g.members.len()).sum(),
            pairs: groups.iter().map(CospectralGroup::pair_count).sum(),
            cospectral_groups: groups,
        });
    }
    Ok(CospectralCensus {
        n,
        isomer_count: isomers.len(),
        kinds,
    })
}
