//! Per-isomer stability descriptors: pentagon indices and signature, the
//! asymmetry of the hexagon graph and headline Newton values.

use std::io::Write;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::dual::FullereneDual;
use crate::error::{Error, Result};
use crate::facetgraph::{format_ratio, induced_subgraph, GraphKind};
use crate::spectral::{eigenvalues, newton_vector, AdjacencyMatrix, DEFAULT_TOLERANCE};
use crate::spiral::{FaceKind, Isomer};

/// `p[i-1]` is the number of pentagons with exactly `i` pentagon neighbors.
pub fn pentagon_indices(dual: &FullereneDual) -> [usize; 5] {
    let mut p = [0; 5];
    for f in (0..dual.face_count()).filter(|&f| dual.kind(f) == FaceKind::Pentagon) {
        let i = dual
            .neighbors(f)
            .iter()
            .filter(|&&g| dual.kind(g) == FaceKind::Pentagon)
            .count();
        if i > 0 {
            p[i - 1] += 1;
        }
    }
    p
}

/// The two independent ways to obtain the pentagon signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignatureRoute {
    /// Half the weighted sum of pentagon indices.
    Direct,
    /// `N(A6, 2)/2 - 3n/2 + 60` from the hexagon graph's second Newton value.
    ViaNewton,
}

pub fn pentagon_signature(dual: &FullereneDual, route: SignatureRoute) -> Result<i64> {
    match route {
        SignatureRoute::Direct => {
            let weighted: usize = pentagon_indices(dual).iter().enumerate().map(|(i, &c)| (i + 1) * c).sum();
            Ok(weighted as i64 / 2)
        }
        SignatureRoute::ViaNewton => {
            let t6 = induced_subgraph(dual, GraphKind::Hexagon);
            if t6.order() == 0 {
                return Ok(60 - 3 * dual.n() as i64 / 2);
            }
            let n2 = newton_vector(&AdjacencyMatrix::from_graph(t6.graph()), 2)?
                .get(2)
                .to_i64()
                .expect("N(A,2) is twice an edge count");
            Ok(n2 / 2 - 3 * dual.n() as i64 / 2 + 60)
        }
    }
}

/// `theta = max degree - mean degree` of the hexagon graph.
pub fn asymmetry(dual: &FullereneDual) -> Ratio<i64> {
    induced_subgraph(dual, GraphKind::Hexagon).degree_summary().theta
}

#[derive(Clone, Debug, PartialEq)]
pub struct DescriptorRecord {
    pub n: usize,
    pub isomer_index: usize,
    /// `p1..p5`.
    pub p: [usize; 5],
    pub pentagon_signature: i64,
    pub theta: Ratio<i64>,
    pub ipr: bool,
    pub lambda_max: f64,
    /// `(k, N(A6, k))` for each configured degree.
    pub newton: Vec<(usize, BigUint)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescriptorConfig {
    /// Newton degrees of the hexagon graph to report.
    pub newton_degrees: Vec<usize>,
}

impl Default for DescriptorConfig {
    fn default() -> Self {
        DescriptorConfig {
            newton_degrees: vec![2, 4, 6, 8],
        }
    }
}

/// Descriptors for every isomer, ordered by isomer index. Fails if the two
/// signature routes ever disagree.
pub fn descriptor_table(isomers: &[Isomer], config: &DescriptorConfig) -> Result<Vec<DescriptorRecord>> {
    if let Some(&k) = config.newton_degrees.iter().find(|&&k| k == 0) {
        return Err(Error::DomainError(format!("Newton degree {k} is not positive")));
    }
    let max_k = config.newton_degrees.iter().copied().max().unwrap_or(0);
    let mut records = isomers
        .par_iter()
        .map(|iso| {
            let dual = iso.dual()?;
            let t6 = induced_subgraph(&dual, GraphKind::Hexagon);
            let a6 = AdjacencyMatrix::from_graph(t6.graph());
            let direct = pentagon_signature(&dual, SignatureRoute::Direct)?;
            let via_newton = pentagon_signature(&dual, SignatureRoute::ViaNewton)?;
            if direct != via_newton {
                return Err(Error::DomainError(format!(
                    "isomer {}: pentagon signature {direct} (direct) vs {via_newton} (via Newton)",
                    iso.index
                )));
            }
            let newton = if max_k == 0 {
                Vec::new()
            } else if t6.order() == 0 {
                config.newton_degrees.iter().map(|&k| (k, BigUint::default())).collect()
            } else {
                let nv = newton_vector(&a6, max_k)?;
                config.newton_degrees.iter().map(|&k| (k, nv.get(k).clone())).collect()
            };
            let lambda_max = eigenvalues(&a6, DEFAULT_TOLERANCE)?.lambda_max().unwrap_or(0.0);
            Ok(DescriptorRecord {
                n: iso.spiral.n(),
                isomer_index: iso.index,
                p: pentagon_indices(&dual),
                pentagon_signature: direct,
                theta: t6.degree_summary().theta,
                ipr: direct == 0,
                lambda_max,
                newton,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by_key(|r| r.isomer_index);
    Ok(records)
}

/// CSV with columns `n, isomer_index, p1..p5, P1, theta, ipr, lambda_max`
/// and `N<k>` per configured degree. `theta` has six decimals.
pub fn write_descriptor_csv(writer: impl Write, records: &[DescriptorRecord], config: &DescriptorConfig) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let mut header: Vec<String> = ["n", "isomer_index", "p1", "p2", "p3", "p4", "p5", "P1", "theta", "ipr", "lambda_max"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    header.extend(config.newton_degrees.iter().map(|k| format!("N{k}")));
    w.write_record(&header)?;
    for r in records {
        let mut row = vec![r.n.to_string(), r.isomer_index.to_string()];
        row.extend(r.p.iter().map(ToString::to_string));
        row.push(r.pentagon_signature.to_string());
        row.push(format_ratio(&r.theta, 6));
        row.push(r.ipr.to_string());
        row.push(format!("{:.10}", r.lambda_max));
        row.extend(r.newton.iter().map(|(_, v)| v.to_string()));
        w.write_record(&row)?;
    }
    Ok(w.flush().map_err(csv::Error::from)?)
}
