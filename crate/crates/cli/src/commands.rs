use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufReader;

use fullerene_core::cluster::{clusterize, cospectral_census_of, k_star, KStarReport, NewtonTable};
use fullerene_core::descriptors::{
    asymmetry, descriptor_table, pentagon_signature, write_descriptor_csv, DescriptorConfig, SignatureRoute,
};
use fullerene_core::facetgraph::{edge_relation_check, format_ratio, induced_subgraph};
use fullerene_core::spectral::{char_poly, eigenvalues, newton_vector, AdjacencyMatrix, NewtonRow, DEFAULT_TOLERANCE};
use fullerene_core::spiral::{
    canonical_spiral, enumerate_isomers, read_spirals, write_spirals, ENUMERATION_SOFT_LIMIT,
};
use fullerene_core::stats::{load_energies, regress, stability_criterion_check, RegressionResult, StabilityReport, Transform};
use fullerene_core::{Error, GraphKind, Isomer, Result, SpiralSequence};
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Cli, Command, Emit, Format, Source};
use crate::report::Sink;

pub fn run(cli: &Cli) -> Result<()> {
    let mut sink = Sink::new(cli.format);
    match &cli.command {
        Command::Enumerate { n, ipr } => enumerate(&mut sink, *n, *ipr)?,
        Command::Wind { source, emit, graph } => wind(&mut sink, source, *emit, (*graph).into())?,
        Command::Newton { source, graph, k } => newton(&mut sink, source, (*graph).into(), k)?,
        Command::Spectrum { source, graph } => spectrum(&mut sink, source, (*graph).into())?,
        Command::Charpoly { source, graph } => charpoly(&mut sink, source, (*graph).into())?,
        Command::Cluster {
            source,
            graph,
            schema,
            allow_odd,
        } => cluster(&mut sink, source, (*graph).into(), *schema, *allow_odd)?,
        Command::Kstar { source, graph } => kstar(&mut sink, source, (*graph).into())?,
        Command::Cospectral { source, graph } => cospectral(&mut sink, source, &graph.kinds())?,
        Command::Descriptors { source, k } => descriptors(&mut sink, source, k)?,
        Command::Correlate {
            source,
            energies,
            descriptor,
            transform,
            check,
        } => correlate(&mut sink, source, energies, descriptor, *transform, *check)?,
    }
    sink.finish(cli.out.as_deref())
}

fn enumerate_with_progress(n: usize, ipr: bool) -> Result<Vec<Isomer>> {
    if n > ENUMERATION_SOFT_LIMIT && !ipr {
        eprintln!("fullerene: enumerating all isomers of C{n} may take a long time");
    }
    enumerate_isomers(n, ipr)
}

fn load_isomers(source: &Source) -> Result<Vec<Isomer>> {
    let spirals: Vec<SpiralSequence> = if let Some(n) = source.n {
        return enumerate_with_progress(n, false);
    } else if let Some(path) = &source.spirals {
        let file = File::open(path).map_err(|e| Error::Io {
            path: path.clone(),
            source: e,
        })?;
        read_spirals(BufReader::new(file))?
    } else {
        vec![source.spiral.as_deref().unwrap_or_default().parse()?]
    };
    let isomers: Vec<Isomer> = spirals
        .into_iter()
        .enumerate()
        .map(|(i, spiral)| Isomer { index: i + 1, spiral })
        .collect();
    if isomers.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(isomers)
}

fn positions(s: &SpiralSequence) -> String {
    s.positions().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn isomer_count_summary(count: usize, ipr: bool) -> String {
    let what = if ipr { "IPR isomer" } else { "isomer" };
    if count == 1 {
        format!("1 {what}")
    } else {
        format!("{count} {what}s")
    }
}

#[derive(Serialize)]
struct IsomerRecord {
    index: usize,
    spiral: [u16; 12],
}

#[derive(Serialize)]
struct EnumerateReport {
    n: usize,
    ipr_only: bool,
    count: usize,
    summary: String,
    isomers: Vec<IsomerRecord>,
}

fn enumerate(sink: &mut Sink, n: usize, ipr: bool) -> Result<()> {
    let list = enumerate_with_progress(n, ipr)?;
    let summary = isomer_count_summary(list.len(), ipr);
    eprintln!("{summary}");
    match sink.format {
        Format::Csv => sink.csv(&[summary], |buf| {
            write_spirals(buf, &[], list.iter().map(|i| &i.spiral)).expect("writing to memory");
            Ok(())
        }),
        Format::Json => sink.json(&EnumerateReport {
            n,
            ipr_only: ipr,
            count: list.len(),
            summary,
            isomers: list
                .iter()
                .map(|i| IsomerRecord {
                    index: i.index,
                    spiral: *i.spiral.positions(),
                })
                .collect(),
        }),
    }
}

#[derive(Serialize)]
struct WindRow {
    isomer_index: usize,
    n: usize,
    spiral: String,
    canonical_spiral: String,
    faces: usize,
    dual_edges: usize,
    pentagon_edges: usize,
    hexagon_edges: usize,
}

#[derive(Serialize)]
struct EdgeRow {
    isomer_index: usize,
    graph_kind: GraphKind,
    /// 1-based spiral positions of the two faces.
    u: usize,
    v: usize,
}

#[derive(Serialize)]
struct Rows<T> {
    rows: Vec<T>,
}

fn emit_rows<T: Serialize>(sink: &mut Sink, comments: &[String], rows: Vec<T>) -> Result<()> {
    match sink.format {
        Format::Csv => sink.csv_records(comments, &rows),
        Format::Json => sink.json(&Rows { rows }),
    }
}

fn wind(sink: &mut Sink, source: &Source, emit: Emit, kind: GraphKind) -> Result<()> {
    let isomers = load_isomers(source)?;
    let duals = isomers
        .par_iter()
        .map(|i| i.dual())
        .collect::<Result<Vec<_>>>()?;
    match emit {
        Emit::Summary => {
            let rows = isomers
                .par_iter()
                .zip(&duals)
                .map(|(iso, d)| {
                    let rel = edge_relation_check(d);
                    Ok(WindRow {
                        isomer_index: iso.index,
                        n: d.n(),
                        spiral: positions(&iso.spiral),
                        canonical_spiral: positions(&canonical_spiral(d)?),
                        faces: d.face_count(),
                        dual_edges: d.edge_count(),
                        pentagon_edges: rel.e5,
                        hexagon_edges: rel.e6,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            emit_rows(sink, &[], rows)
        }
        Emit::Edges => {
            let mut rows = Vec::new();
            for (iso, d) in isomers.iter().zip(&duals) {
                let g = induced_subgraph(d, kind);
                for (u, v) in g.edges() {
                    rows.push(EdgeRow {
                        isomer_index: iso.index,
                        graph_kind: kind,
                        u: g.faces()[u] + 1,
                        v: g.faces()[v] + 1,
                    });
                }
            }
            emit_rows(sink, &[], rows)
        }
    }
}

fn adjacency(iso: &Isomer, kind: GraphKind) -> Result<AdjacencyMatrix> {
    let g = induced_subgraph(&iso.dual()?, kind);
    Ok(AdjacencyMatrix::from_graph(g.graph()))
}

fn newton(sink: &mut Sink, source: &Source, kind: GraphKind, degrees: &[usize]) -> Result<()> {
    let isomers = load_isomers(source)?;
    let max_k = degrees.iter().copied().max().unwrap_or(1);
    let per_isomer = isomers
        .par_iter()
        .map(|iso| {
            let nv = newton_vector(&adjacency(iso, kind)?, max_k)?;
            let all = nv.rows(iso.spiral.n(), iso.index, kind);
            Ok(degrees.iter().map(|&k| all[k - 1].clone()).collect::<Vec<NewtonRow>>())
        })
        .collect::<Result<Vec<_>>>()?;
    emit_rows(sink, &[], per_isomer.into_iter().flatten().collect())
}

/// Ten decimals, without negative zero.
fn fixed(x: f64) -> String {
    let s = format!("{x:.10}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

#[derive(Serialize)]
struct SpectrumRow<E: Serialize> {
    n: usize,
    isomer_index: usize,
    graph_kind: GraphKind,
    order: usize,
    lambda_max: Option<String>,
    eigenvalues: E,
}

fn spectrum(sink: &mut Sink, source: &Source, kind: GraphKind) -> Result<()> {
    let isomers = load_isomers(source)?;
    let spectra = isomers
        .par_iter()
        .map(|iso| eigenvalues(&adjacency(iso, kind)?, DEFAULT_TOLERANCE))
        .collect::<Result<Vec<_>>>()?;
    let rows = isomers.iter().zip(spectra).map(|(iso, s)| SpectrumRow {
        n: iso.spiral.n(),
        isomer_index: iso.index,
        graph_kind: kind,
        order: s.values.len(),
        lambda_max: s.lambda_max().map(fixed),
        eigenvalues: s.values.iter().map(|&x| fixed(x)).collect::<Vec<_>>(),
    });
    match sink.format {
        Format::Csv => sink.csv_records(
            &[],
            &rows
                .map(|r| SpectrumRow {
                    eigenvalues: r.eigenvalues.join(" "),
                    n: r.n,
                    isomer_index: r.isomer_index,
                    graph_kind: r.graph_kind,
                    order: r.order,
                    lambda_max: r.lambda_max,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Json => sink.json(&Rows { rows: rows.collect() }),
    }
}

#[derive(Serialize)]
struct CharpolyRow<C: Serialize> {
    n: usize,
    isomer_index: usize,
    graph_kind: GraphKind,
    degree: usize,
    /// Highest degree first.
    coefficients: C,
    polynomial: String,
}

fn charpoly(sink: &mut Sink, source: &Source, kind: GraphKind) -> Result<()> {
    let isomers = load_isomers(source)?;
    let polys = isomers
        .par_iter()
        .map(|iso| Ok(char_poly(&adjacency(iso, kind)?)))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<CharpolyRow<Vec<String>>> = isomers
        .iter()
        .zip(polys)
        .map(|(iso, p)| CharpolyRow {
            n: iso.spiral.n(),
            isomer_index: iso.index,
            graph_kind: kind,
            degree: p.degree(),
            coefficients: p.high_to_low().iter().map(ToString::to_string).collect(),
            polynomial: p.to_string(),
        })
        .collect();
    match sink.format {
        Format::Csv => sink.csv_records(
            &[],
            &rows
                .into_iter()
                .map(|r| CharpolyRow {
                    coefficients: r.coefficients.join(" "),
                    n: r.n,
                    isomer_index: r.isomer_index,
                    graph_kind: r.graph_kind,
                    degree: r.degree,
                    polynomial: r.polynomial,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Json => sink.json(&Rows { rows }),
    }
}

#[derive(Serialize)]
struct ClusterRecord {
    key: Vec<String>,
    size: usize,
    members: Vec<usize>,
}

#[derive(Serialize)]
struct ClusterReport {
    n: usize,
    graph_kind: GraphKind,
    schema: String,
    cluster_count: usize,
    singletons: usize,
    complete: bool,
    clusters: Vec<ClusterRecord>,
}

fn cluster(
    sink: &mut Sink,
    source: &Source,
    kind: GraphKind,
    schema: fullerene_core::cluster::KeySchema,
    allow_odd: bool,
) -> Result<()> {
    let isomers = load_isomers(source)?;
    let max_k = schema.degrees().into_iter().max().unwrap_or(2);
    let table = NewtonTable::compute(&isomers, kind, max_k)?;
    let c = clusterize(&table, schema, allow_odd)?;
    let s = c.summary();
    eprintln!("{} clusters, {} singletons", s.clusters, s.singletons);
    match sink.format {
        Format::Csv => {
            let comments = [format!(
                "n={} graph={} schema={} clusters={} singletons={} complete={}",
                s.n, s.graph_kind, s.schema, s.clusters, s.singletons, s.complete
            )];
            sink.csv(&comments, |buf| c.write_csv(buf))
        }
        Format::Json => sink.json(&ClusterReport {
            n: s.n,
            graph_kind: s.graph_kind,
            schema: s.schema,
            cluster_count: s.clusters,
            singletons: s.singletons,
            complete: s.complete,
            clusters: c
                .clusters
                .iter()
                .map(|c| ClusterRecord {
                    key: c.key.iter().map(ToString::to_string).collect(),
                    size: c.members.len(),
                    members: c.members.clone(),
                })
                .collect(),
        }),
    }
}

#[derive(Serialize)]
struct KStarRow {
    n: usize,
    graph_kind: GraphKind,
    isomers: usize,
    k_single: usize,
    k_pair: usize,
    k_hierarchical: usize,
    /// `k1:k2` pairs separated by spaces.
    admissible_pairs: String,
}

fn kstar(sink: &mut Sink, source: &Source, kind: GraphKind) -> Result<()> {
    let isomers = load_isomers(source)?;
    let table = NewtonTable::compute(&isomers, kind, 2)?;
    let r: KStarReport = k_star(&table)?;
    match sink.format {
        Format::Csv => sink.csv_records(
            &[],
            &[KStarRow {
                n: r.n,
                graph_kind: r.graph_kind,
                isomers: r.isomers,
                k_single: r.k_single,
                k_pair: r.k_pair,
                k_hierarchical: r.k_hierarchical,
                admissible_pairs: r
                    .admissible_pairs
                    .iter()
                    .map(|(a, b)| format!("{a}:{b}"))
                    .collect::<Vec<_>>()
                    .join(" "),
            }],
        ),
        Format::Json => sink.json(&r),
    }
}

#[derive(Serialize)]
struct GroupRecord {
    members: Vec<usize>,
    spirals: Vec<String>,
    isomorphism_classes: Vec<Vec<usize>>,
    all_isomorphic: bool,
    char_poly: Vec<String>,
}

#[derive(Serialize)]
struct KindRecord {
    graph_kind: GraphKind,
    groups: usize,
    isomers: usize,
    pairs: usize,
    cospectral_groups: Vec<GroupRecord>,
}

#[derive(Serialize)]
struct CensusReport {
    n: usize,
    isomer_count: usize,
    kinds: Vec<KindRecord>,
}

#[derive(Serialize)]
struct GroupRow {
    graph_kind: GraphKind,
    /// Member indices separated by `|`.
    members: String,
    /// Member spirals separated by `|`.
    spirals: String,
    /// Isomorphism classes separated by `;`, members by `|`.
    isomorphism_classes: String,
    all_isomorphic: bool,
}

fn cospectral(sink: &mut Sink, source: &Source, kinds: &[GraphKind]) -> Result<()> {
    let isomers = load_isomers(source)?;
    let census = cospectral_census_of(&isomers, kinds)?;
    let by_index: BTreeMap<usize, &SpiralSequence> = isomers.iter().map(|i| (i.index, &i.spiral)).collect();
    let report = CensusReport {
        n: census.n,
        isomer_count: census.isomer_count,
        kinds: census
            .kinds
            .iter()
            .map(|k| KindRecord {
                graph_kind: k.graph_kind,
                groups: k.groups,
                isomers: k.isomers,
                pairs: k.pairs,
                cospectral_groups: k
                    .cospectral_groups
                    .iter()
                    .map(|g| GroupRecord {
                        members: g.members.clone(),
                        spirals: g.members.iter().map(|i| by_index[i].to_string()).collect(),
                        isomorphism_classes: g.isomorphism_classes.clone(),
                        all_isomorphic: g.all_isomorphic(),
                        char_poly: g.char_poly.clone(),
                    })
                    .collect(),
            })
            .collect(),
    };
    for k in &report.kinds {
        eprintln!("{}: {} shared spectra, {} isomers, {} pairs", k.graph_kind, k.groups, k.isomers, k.pairs);
    }
    match sink.format {
        Format::Csv => {
            let comments: Vec<String> = std::iter::once(format!("n={} isomers={}", report.n, report.isomer_count))
                .chain(report.kinds.iter().map(|k| {
                    format!("{}: groups={} isomers={} pairs={}", k.graph_kind, k.groups, k.isomers, k.pairs)
                }))
                .collect();
            let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join("|");
            let rows: Vec<GroupRow> = report
                .kinds
                .iter()
                .flat_map(|k| {
                    k.cospectral_groups.iter().map(move |g| GroupRow {
                        graph_kind: k.graph_kind,
                        members: join(&g.members),
                        spirals: g.spirals.join("|"),
                        isomorphism_classes: g.isomorphism_classes.iter().map(|c| join(c)).collect::<Vec<_>>().join(";"),
                        all_isomorphic: g.all_isomorphic,
                    })
                })
                .collect();
            sink.csv_records(&comments, &rows)
        }
        Format::Json => sink.json(&report),
    }
}

#[derive(Serialize)]
struct NewtonValue {
    k: usize,
    value: String,
}

#[derive(Serialize)]
struct DescriptorJson {
    n: usize,
    isomer_index: usize,
    p: [usize; 5],
    pentagon_signature: i64,
    theta: String,
    theta_exact: String,
    ipr: bool,
    lambda_max: String,
    newton: Vec<NewtonValue>,
}

fn descriptors(sink: &mut Sink, source: &Source, degrees: &[usize]) -> Result<()> {
    let isomers = load_isomers(source)?;
    let config = DescriptorConfig {
        newton_degrees: degrees.to_vec(),
    };
    let records = descriptor_table(&isomers, &config)?;
    match sink.format {
        Format::Csv => sink.csv(&[], |buf| write_descriptor_csv(buf, &records, &config)),
        Format::Json => sink.json(&Rows {
            rows: records
                .iter()
                .map(|r| DescriptorJson {
                    n: r.n,
                    isomer_index: r.isomer_index,
                    p: r.p,
                    pentagon_signature: r.pentagon_signature,
                    theta: format_ratio(&r.theta, 6),
                    theta_exact: r.theta.to_string(),
                    ipr: r.ipr,
                    lambda_max: fixed(r.lambda_max),
                    newton: r
                        .newton
                        .iter()
                        .map(|(k, v)| NewtonValue { k: *k, value: v.to_string() })
                        .collect(),
                })
                .collect(),
        }),
    }
}

/// Per-isomer values of a named descriptor.
fn descriptor_values(isomers: &[Isomer], name: &str) -> Result<BTreeMap<usize, f64>> {
    let newton_degree = name
        .strip_prefix('N')
        .or_else(|| name.strip_prefix('n'))
        .and_then(|k| k.parse::<usize>().ok());
    if let Some(k) = newton_degree {
        if k == 0 {
            return Err(Error::DomainError("Newton degree must be positive".into()));
        }
        let table = NewtonTable::compute(isomers, GraphKind::Hexagon, k)?;
        return Ok(table
            .indices()
            .iter()
            .zip(table.vectors())
            .map(|(&i, v)| (i, v.get(k).to_f64().unwrap_or(f64::INFINITY)))
            .collect());
    }
    isomers
        .par_iter()
        .map(|iso| {
            let d = iso.dual()?;
            let value = match name {
                "p1" | "P1" => pentagon_signature(&d, SignatureRoute::Direct)? as f64,
                "theta" => {
                    let t = asymmetry(&d);
                    *t.numer() as f64 / *t.denom() as f64
                }
                "lambda_max" => {
                    let g = induced_subgraph(&d, GraphKind::Hexagon);
                    eigenvalues(&AdjacencyMatrix::from_graph(g.graph()), DEFAULT_TOLERANCE)?
                        .lambda_max()
                        .unwrap_or(0.0)
                }
                other => {
                    return Err(Error::DomainError(format!(
                        "unknown descriptor {other:?} (N<k>, p1, theta or lambda_max)"
                    )))
                }
            };
            Ok((iso.index, value))
        })
        .collect()
}

#[derive(Serialize)]
struct CorrelateReport {
    n: usize,
    descriptor: String,
    regression: RegressionResult,
    stability: Option<StabilityReport>,
}

#[derive(Serialize)]
struct CorrelateRow {
    n: usize,
    descriptor: String,
    transform: Transform,
    samples: usize,
    rho: String,
    slope: String,
    intercept: String,
    passes: Option<bool>,
    best_identified: Option<bool>,
    worst_identified: Option<bool>,
    correlation_ok: Option<bool>,
    subsets_consistent: Option<bool>,
}

fn correlate(
    sink: &mut Sink,
    source: &Source,
    energies: &std::path::Path,
    descriptor: &str,
    transform: Transform,
    check: bool,
) -> Result<()> {
    // Fail on an unreadable energy file before any expensive work.
    File::open(energies).map_err(|e| Error::Io {
        path: energies.to_path_buf(),
        source: e,
    })?;
    let isomers = load_isomers(source)?;
    let n = isomers[0].spiral.n();
    let table = load_energies(energies, n, isomers.len())?;
    let values = descriptor_values(&isomers, descriptor)?;
    let regression = regress(&values, &table, transform)?;
    let stability = if check {
        let signatures = isomers
            .par_iter()
            .map(|iso| Ok((iso.index, pentagon_signature(&iso.dual()?, SignatureRoute::Direct)?)))
            .collect::<Result<BTreeMap<usize, i64>>>()?;
        Some(stability_criterion_check(&table, &values, &signatures, transform)?)
    } else {
        None
    };
    match sink.format {
        Format::Csv => {
            let row = CorrelateRow {
                n,
                descriptor: descriptor.to_string(),
                transform,
                samples: regression.samples,
                rho: fixed(regression.rho),
                slope: fixed(regression.slope),
                intercept: fixed(regression.intercept),
                passes: stability.as_ref().map(|s| s.passes),
                best_identified: stability.as_ref().map(|s| s.best_identified),
                worst_identified: stability.as_ref().map(|s| s.worst_identified),
                correlation_ok: stability.as_ref().map(|s| s.correlation_ok),
                subsets_consistent: stability.as_ref().map(|s| s.subsets_consistent),
            };
            sink.csv_records(&[], &[row])
        }
        Format::Json => sink.json(&CorrelateReport {
            n,
            descriptor: descriptor.to_string(),
            regression,
            stability,
        }),
    }
}
