//! Partitions of isomer sets by exact Newton values, the minimal separating
//! degrees, and the census of cospectral isomers.

mod census;
mod kstar;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::facetgraph::{induced_subgraph, GraphKind};
use crate::spectral::{newton_vector, AdjacencyMatrix, NewtonVector};
use crate::spiral::Isomer;

pub use census::{cospectral_census, cospectral_census_of, CensusConvention, CospectralCensus, CospectralGroup, KindCensus};
pub use kstar::{k_star, KStarReport};

/// Newton vectors of one facet graph kind for a set of isomers of equal
/// atom count, computed once and shared by every clustering query.
#[derive(Clone, Debug)]
pub struct NewtonTable {
    n: usize,
    graph_kind: GraphKind,
    order: usize,
    indices: Vec<usize>,
    vectors: Vec<NewtonVector>,
}

impl NewtonTable {
    /// Newton values up to `max_k` (raised to the graph order if smaller, so
    /// that cospectrality can always be decided from the table).
    pub fn compute(isomers: &[Isomer], graph_kind: GraphKind, max_k: usize) -> Result<NewtonTable> {
        let first = isomers.first().ok_or(Error::EmptyInput)?;
        let n = first.spiral.n();
        if let Some(other) = isomers.iter().find(|i| i.spiral.n() != n) {
            return Err(Error::MixedAtomCounts(n, other.spiral.n()));
        }
        let rows: Vec<(usize, NewtonVector)> = isomers
            .par_iter()
            .map(|iso| {
                let sub = induced_subgraph(&iso.dual()?, graph_kind);
                let k = max_k.max(sub.order()).max(1);
                Ok((sub.order(), newton_vector(&AdjacencyMatrix::from_graph(sub.graph()), k)?))
            })
            .collect::<Result<_>>()?;
        let order = rows[0].0;
        Ok(NewtonTable {
            n,
            graph_kind,
            order,
            indices: isomers.iter().map(|i| i.index).collect(),
            vectors: rows.into_iter().map(|(_, v)| v).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph_kind(&self) -> GraphKind {
        self.graph_kind
    }

    /// Vertex count of the facet graph (equal for every isomer).
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn max_k(&self) -> usize {
        self.vectors.iter().map(NewtonVector::max_degree).min().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn vectors(&self) -> &[NewtonVector] {
        &self.vectors
    }

    /// Newton vector of the isomer with 1-based `index`, if present.
    pub fn get(&self, index: usize) -> Option<&NewtonVector> {
        self.indices.iter().position(|&i| i == index).map(|p| &self.vectors[p])
    }
}

/// How a cluster key is assembled from Newton values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KeySchema {
    /// `N(A, k)`.
    Single(usize),
    /// `(N(A, k1), N(A, k2))`.
    Pair(usize, usize),
    /// `(N(A, 2), N(A, 4), ..., N(A, k))`.
    Hierarchical(usize),
}

impl KeySchema {
    /// Degrees whose values form the key.
    pub fn degrees(self) -> Vec<usize> {
        match self {
            KeySchema::Single(k) => vec![k],
            KeySchema::Pair(a, b) => vec![a, b],
            KeySchema::Hierarchical(k) => (2..=k).step_by(2).collect(),
        }
    }

    fn named_degrees(self) -> Vec<usize> {
        match self {
            KeySchema::Hierarchical(k) => vec![k],
            _ => self.degrees(),
        }
    }
}

impl fmt::Display for KeySchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KeySchema::Single(k) => write!(f, "single:{k}"),
            KeySchema::Pair(a, b) => write!(f, "pair:{a},{b}"),
            KeySchema::Hierarchical(k) => write!(f, "hierarchical:{k}"),
        }
    }
}

impl FromStr for KeySchema {
    type Err = Error;

    /// Accepts `single:K`, `pair:K1,K2` and `hierarchical:K`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSchema(format!("{s:?} (expected single:K, pair:K1,K2 or hierarchical:K)"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let schema = match (name, nums.as_slice()) {
            ("single", &[k]) => KeySchema::Single(k),
            ("pair", &[a, b]) => KeySchema::Pair(a, b),
            ("hierarchical", &[k]) => KeySchema::Hierarchical(k),
            _ => return Err(bad()),
        };
        if schema.named_degrees().contains(&0) {
            return Err(Error::InvalidSchema(format!("{s:?}: degrees start at 1")));
        }
        if let KeySchema::Pair(a, b) = schema {
            if a == b {
                return Err(Error::InvalidSchema(format!("{s:?}: pair degrees must differ")));
            }
        }
        Ok(schema)
    }
}

/// One group of isomers sharing a key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub key: Vec<BigUint>,
    /// Sorted 1-based isomer indices.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clusterization {
    pub n: usize,
    pub graph_kind: GraphKind,
    pub schema: KeySchema,
    /// Ordered by key.
    pub clusters: Vec<Cluster>,
}

impl Clusterization {
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn singleton_count(&self) -> usize {
        self.clusters.iter().filter(|c| c.members.len() == 1).count()
    }

    /// Every cluster is a single isomer.
    pub fn is_complete(&self) -> bool {
        self.clusters.iter().all(|c| c.members.len() == 1)
    }

    /// CSV: one column per key degree, then `cluster_size` and the
    /// pipe-separated member indices.
    pub fn write_csv(&self, writer: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header: Vec<String> = self.schema.degrees().iter().map(|k| format!("N{k}")).collect();
        header.push("cluster_size".into());
        header.push("isomer_indices".into());
        w.write_record(&header)?;
        for c in &self.clusters {
            let mut row: Vec<String> = c.key.iter().map(ToString::to_string).collect();
            row.push(c.members.len().to_string());
            row.push(
                c.members
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("|"),
            );
            w.write_record(&row)?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }

    pub fn summary(&self) -> ClusterSummary {
        ClusterSummary {
            n: self.n,
            graph_kind: self.graph_kind,
            schema: self.schema.to_string(),
            clusters: self.cluster_count(),
            singletons: self.singleton_count(),
            complete: self.is_complete(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterSummary {
    pub n: usize,
    pub graph_kind: GraphKind,
    pub schema: String,
    pub clusters: usize,
    pub singletons: usize,
    pub complete: bool,
}

/// Groups the table's isomers by `schema`. Odd degrees are refused unless
/// `allow_odd` is set: they do not help to separate isomers.
pub fn clusterize(table: &NewtonTable, schema: KeySchema, allow_odd: bool) -> Result<Clusterization> {
    if table.is_empty() {
        return Err(Error::EmptyInput);
    }
    let named = schema.named_degrees();
    if !allow_odd {
        if let Some(&k) = named.iter().find(|&&k| k % 2 == 1) {
            return Err(Error::OddDegreeRejected(k));
        }
    }
    let degrees = schema.degrees();
    if let Some(&k) = degrees.iter().find(|&&k| k > table.max_k()) {
        return Err(Error::InvalidSchema(format!(
            "degree {k} exceeds the {} computed Newton values",
            table.max_k()
        )));
    }
    Ok(group(table, schema, &degrees))
}

fn group(table: &NewtonTable, schema: KeySchema, degrees: &[usize]) -> Clusterization {
    let mut map: BTreeMap<Vec<&BigUint>, Vec<usize>> = BTreeMap::new();
    for (&index, v) in table.indices.iter().zip(&table.vectors) {
        let key = degrees.iter().map(|&k| v.get(k)).collect();
        map.entry(key).or_default().push(index);
    }
    let clusters = map
        .into_iter()
        .map(|(key, mut members)| {
            members.sort_unstable();
            Cluster {
                key: key.into_iter().cloned().collect(),
                members,
            }
        })
        .collect();
    Clusterization {
        n: table.n,
        graph_kind: table.graph_kind,
        schema,
        clusters,
    }
}

/// Whether `degrees` separate every isomer, without building the clusters.
fn separates(table: &NewtonTable, degrees: &[usize]) -> bool {
    let mut keys: Vec<Vec<&BigUint>> = table
        .vectors
        .iter()
        .map(|v| degrees.iter().map(|&k| v.get(k)).collect())
        .collect();
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spiral::enumerate_isomers;

    #[test]
    fn schema_parsing() {
        assert_eq!("single:4".parse::<KeySchema>().unwrap(), KeySchema::Single(4));
        assert_eq!("pair:6,8".parse::<KeySchema>().unwrap(), KeySchema::Pair(6, 8));
        assert_eq!("hierarchical:8".parse::<KeySchema>().unwrap(), KeySchema::Hierarchical(8));
        for bad in ["single", "single:x", "pair:2", "pair:4,4", "tree:2", "single:0"] {
            assert!(bad.parse::<KeySchema>().is_err(), "{bad}");
        }
        assert_eq!(KeySchema::Pair(6, 8).to_string(), "pair:6,8");
        assert_eq!(KeySchema::Hierarchical(8).degrees(), vec![2, 4, 6, 8]);
    }

    #[test]
    fn c28_hexagon_graphs() {
        let isomers = enumerate_isomers(28, false).unwrap();
        let table = NewtonTable::compute(&isomers, GraphKind::Hexagon, 4).unwrap();
        let c = clusterize(&table, KeySchema::Single(2), false).unwrap();
        assert!(c.is_complete());
        assert_eq!(c.cluster_count(), 2);
        assert!(matches!(
            clusterize(&table, KeySchema::Single(3), false),
            Err(Error::OddDegreeRejected(3))
        ));
        let odd = clusterize(&table, KeySchema::Single(3), true).unwrap();
        assert_eq!(odd.cluster_count(), 1);
        assert!(clusterize(&table, KeySchema::Single(99), false).is_err());
    }

    #[test]
    fn single_isomer_is_one_cluster() {
        let isomers = enumerate_isomers(20, false).unwrap();
        let table = NewtonTable::compute(&isomers, GraphKind::Full, 2).unwrap();
        for schema in [KeySchema::Single(2), KeySchema::Pair(2, 4), KeySchema::Hierarchical(6)] {
            let c = clusterize(&table, schema, false).unwrap();
            assert_eq!((c.cluster_count(), c.singleton_count()), (1, 1));
        }
    }

    #[test]
    fn empty_and_mixed_input() {
        assert!(matches!(NewtonTable::compute(&[], GraphKind::Full, 2), Err(Error::EmptyInput)));
        let mut mixed = enumerate_isomers(20, false).unwrap();
        mixed.extend(enumerate_isomers(24, false).unwrap());
        assert!(matches!(
            NewtonTable::compute(&mixed, GraphKind::Full, 2),
            Err(Error::MixedAtomCounts(20, 24))
        ));
    }

    #[test]
    fn csv_layout() {
        let isomers = enumerate_isomers(28, false).unwrap();
        let table = NewtonTable::compute(&isomers, GraphKind::Hexagon, 4).unwrap();
        let c = clusterize(&table, KeySchema::Single(3), true).unwrap();
        let mut buf = Vec::new();
        c.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "N3,cluster_size,isomer_indices\n0,2,1|2\n");
    }
}
