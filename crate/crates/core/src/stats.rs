//! Relative-energy tables and the correlation/regression analyses between
//! descriptors and energies.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative energies (kcal/mol) keyed by 1-based isomer index.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyTable {
    pub n: usize,
    pub energies: BTreeMap<usize, f64>,
}

impl EnergyTable {
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<f64> {
        self.energies.get(&index).copied()
    }

    /// Isomer indices from most to least stable; ties keep index order.
    pub fn stability_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = self.energies.keys().copied().collect();
        order.sort_by(|a, b| self.energies[a].total_cmp(&self.energies[b]).then(a.cmp(b)));
        order
    }
}

#[derive(Deserialize)]
struct EnergyRow {
    isomer_index: usize,
    relative_energy: f64,
}

/// Reads `isomer_index,relative_energy` CSV for `C_n`, which has
/// `isomer_count` isomers.
pub fn load_energies(path: &Path, n: usize, isomer_count: usize) -> Result<EnergyTable> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_energies(file, n, isomer_count)
}

pub fn read_energies(reader: impl Read, n: usize, isomer_count: usize) -> Result<EnergyTable> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let header = rdr.headers().map_err(|e| parse_error(1, e))?.clone();
    if header.iter().collect::<Vec<_>>() != ["isomer_index", "relative_energy"] {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected header isomer_index,relative_energy, found {:?}", header.as_slice()),
        });
    }
    let mut energies = BTreeMap::new();
    for (i, row) in rdr.deserialize::<EnergyRow>().enumerate() {
        let line = i + 2;
        let row = row.map_err(|e| parse_error(line, e))?;
        if row.isomer_index == 0 || row.isomer_index > isomer_count {
            return Err(Error::IndexOutOfRange {
                index: row.isomer_index,
                max: isomer_count,
            });
        }
        if !row.relative_energy.is_finite() {
            return Err(Error::Parse {
                line,
                message: format!("energy {} is not finite", row.relative_energy),
            });
        }
        if row.relative_energy < 0.0 {
            return Err(Error::NegativeEnergy {
                index: row.isomer_index,
                value: row.relative_energy,
            });
        }
        if energies.insert(row.isomer_index, row.relative_energy).is_some() {
            return Err(Error::Parse {
                line,
                message: format!("isomer {} listed twice", row.isomer_index),
            });
        }
    }
    Ok(EnergyTable { n, energies })
}

fn parse_error(line: usize, e: csv::Error) -> Error {
    let line = e.position().map_or(line, |p| p.line() as usize);
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transform {
    Identity,
    /// Natural logarithm.
    Log,
}

impl std::str::FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(Transform::Identity),
            "log" => Ok(Transform::Log),
            other => Err(Error::DomainError(format!("unknown transform {other:?} (identity or log)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegressionResult {
    pub rho: f64,
    pub slope: f64,
    pub intercept: f64,
    pub samples: usize,
    pub transform: Transform,
}

/// Ordinary least squares of energy on the (transformed) predictor over the
/// isomers present in both inputs, with the sample Pearson correlation.
pub fn regress(predictor: &BTreeMap<usize, f64>, energies: &EnergyTable, transform: Transform) -> Result<RegressionResult> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (&index, &x) in predictor {
        let Some(y) = energies.get(index) else {
            continue;
        };
        let x = match transform {
            Transform::Identity => x,
            Transform::Log if x > 0.0 => x.ln(),
            Transform::Log => {
                return Err(Error::DomainError(format!(
                    "log of non-positive predictor {x} for isomer {index}"
                )))
            }
        };
        xs.push(x);
        ys.push(y);
    }
    let (rho, slope, intercept) = least_squares(&xs, &ys)?;
    Ok(RegressionResult {
        rho,
        slope,
        intercept,
        samples: xs.len(),
        transform,
    })
}

/// `(rho, slope, intercept)` of `y` on `x`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    if xs.len() < 2 || xs.len() != ys.len() {
        return Err(Error::DegenerateInput("regression needs at least two paired samples"));
    }
    let len = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / len;
    let my = ys.iter().sum::<f64>() / len;
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateInput("predictor is constant"));
    }
    if syy == 0.0 {
        return Err(Error::DegenerateInput("energies are constant"));
    }
    let slope = sxy / sxx;
    let rho = (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0);
    Ok((rho, slope, my - slope * mx))
}

/// Regression restricted to the isomers of one pentagon signature.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubsetRegression {
    pub signature: i64,
    pub size: usize,
    /// `None` when the subset is too small or the predictor is constant on it.
    pub result: Option<RegressionResult>,
    pub sign_consistent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityReport {
    pub global: RegressionResult,
    /// Two most stable isomers by energy, most stable first.
    pub energy_best: Vec<usize>,
    /// Three least stable isomers by energy, least stable last.
    pub energy_worst: Vec<usize>,
    pub best_identified: bool,
    pub worst_identified: bool,
    pub correlation_ok: bool,
    pub subsets: Vec<SubsetRegression>,
    pub subsets_consistent: bool,
    pub passes: bool,
}

/// Signatures whose subsets the stability check regresses on.
pub const SUBSET_SIGNATURES: std::ops::RangeInclusive<i64> = 4..=14;

/// A descriptor is a good stability criterion when it singles out the two
/// most stable and the three least stable isomers in energetic order, its
/// correlation with energy exceeds 0.6, and every signature subset
/// regresses with the same sign of slope and correlation as the whole set.
///
/// `descriptor` and `signature` must cover the same isomers; `energies`
/// must cover them all.
pub fn stability_criterion_check(
    energies: &EnergyTable,
    descriptor: &BTreeMap<usize, f64>,
    signature: &BTreeMap<usize, i64>,
    transform: Transform,
) -> Result<StabilityReport> {
    let missing = descriptor.keys().filter(|i| energies.get(**i).is_none()).count();
    if missing > 0 {
        return Err(Error::IncompleteEnergies {
            missing,
            expected: descriptor.len(),
        });
    }
    if descriptor.len() < 5 {
        return Err(Error::DegenerateInput("stability check needs at least five isomers"));
    }
    let global = regress(descriptor, energies, transform)?;
    let orient = if global.rho < 0.0 { -1.0 } else { 1.0 };
    let order: Vec<usize> = energies
        .stability_order()
        .into_iter()
        .filter(|i| descriptor.contains_key(i))
        .collect();
    let value = |i: &usize| orient * descriptor[i];
    let energy_best = order[..2].to_vec();
    let energy_worst = order[order.len() - 3..].to_vec();
    let others_best = order.iter().filter(|i| !energy_best.contains(i));
    let best_identified = value(&energy_best[0]) < value(&energy_best[1])
        && others_best.map(value).all(|v| value(&energy_best[1]) < v);
    let others_worst = order.iter().filter(|i| !energy_worst.contains(i));
    let worst_identified = energy_worst.windows(2).all(|w| value(&w[0]) < value(&w[1]))
        && others_worst.map(value).all(|v| v < value(&energy_worst[0]));

    let mut subsets = Vec::new();
    for sig in SUBSET_SIGNATURES {
        let members: BTreeMap<usize, f64> = descriptor
            .iter()
            .filter(|(i, _)| signature.get(i) == Some(&sig))
            .map(|(&i, &v)| (i, v))
            .collect();
        let result = regress(&members, energies, transform).ok();
        let sign_consistent = result.map(|r| {
            r.rho.signum() == global.rho.signum() && r.slope.signum() == global.slope.signum()
        });
        subsets.push(SubsetRegression {
            signature: sig,
            size: members.len(),
            result,
            sign_consistent,
        });
    }
    let subsets_consistent = subsets.iter().all(|s| s.sign_consistent != Some(false));
    let correlation_ok = global.rho.abs() > 0.6;
    Ok(StabilityReport {
        passes: best_identified && worst_identified && correlation_ok && subsets_consistent,
        global,
        energy_best,
        energy_worst,
        best_identified,
        worst_identified,
        correlation_ok,
        subsets,
        subsets_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[(usize, f64)]) -> EnergyTable {
        EnergyTable {
            n: 60,
            energies: rows.iter().copied().collect(),
        }
    }

    #[test]
    fn reads_two_rows() {
        let t = read_energies("isomer_index,relative_energy\n1,0.0\n2, 3.5\n".as_bytes(), 28, 2).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(2), Some(3.5));
    }

    #[test]
    fn reader_errors() {
        let out_of_range = read_energies("isomer_index,relative_energy\n2000,1\n".as_bytes(), 60, 1812);
        assert!(matches!(out_of_range, Err(Error::IndexOutOfRange { index: 2000, max: 1812 })));
        let negative = read_energies("isomer_index,relative_energy\n3,-1\n".as_bytes(), 60, 1812);
        assert!(matches!(negative, Err(Error::NegativeEnergy { index: 3, .. })));
        let garbage = read_energies("isomer_index,relative_energy\n1,0\nx,y\n".as_bytes(), 60, 1812);
        assert!(matches!(garbage, Err(Error::Parse { line: 3, .. })));
        let header = read_energies("index,energy\n1,0\n".as_bytes(), 60, 1812);
        assert!(matches!(header, Err(Error::Parse { line: 1, .. })));
        let twice = read_energies("isomer_index,relative_energy\n1,0\n1,2\n".as_bytes(), 60, 1812);
        assert!(matches!(twice, Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn missing_file_is_io() {
        assert!(matches!(
            load_energies(Path::new("/nonexistent/energies.csv"), 60, 1812),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn identical_predictor() {
        let e = table(&[(1, 0.0), (2, 1.0), (3, 5.0)]);
        let p: BTreeMap<usize, f64> = e.energies.clone();
        let r = regress(&p, &e, Transform::Identity).unwrap();
        assert!((r.rho - 1.0).abs() < 1e-12 && (r.slope - 1.0).abs() < 1e-12 && r.intercept.abs() < 1e-12);
    }

    #[test]
    fn exact_line() {
        let xs: Vec<f64> = (0..10).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x + 3.0).collect();
        let (rho, slope, intercept) = least_squares(&xs, &ys).unwrap();
        assert!((rho - 1.0).abs() < 1e-12 && (slope - 2.0).abs() < 1e-12 && (intercept - 3.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        let e = table(&[(1, 0.0), (2, 1.0)]);
        let constant: BTreeMap<usize, f64> = [(1, 4.0), (2, 4.0)].into_iter().collect();
        assert!(matches!(regress(&constant, &e, Transform::Identity), Err(Error::DegenerateInput(_))));
        let nonpositive: BTreeMap<usize, f64> = [(1, 0.0), (2, 4.0)].into_iter().collect();
        assert!(matches!(regress(&nonpositive, &e, Transform::Log), Err(Error::DomainError(_))));
        let single: BTreeMap<usize, f64> = [(1, 1.0)].into_iter().collect();
        assert!(matches!(regress(&single, &e, Transform::Identity), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn log_transform() {
        let e = table(&[(1, 0.0), (2, 1.0), (3, 2.0)]);
        let p: BTreeMap<usize, f64> = [(1, 1.0), (2, std::f64::consts::E), (3, std::f64::consts::E.powi(2))]
            .into_iter()
            .collect();
        let r = regress(&p, &e, Transform::Log).unwrap();
        assert!((r.slope - 1.0).abs() < 1e-12 && (r.rho - 1.0).abs() < 1e-12);
    }

    #[test]
    fn stability_check_on_synthetic_data() {
        // Energy grows with the descriptor; isomer 7 is most stable.
        let rows: Vec<(usize, f64)> = (1..=7).map(|i| (i, (7 - i) as f64)).collect();
        let e = table(&rows);
        let good: BTreeMap<usize, f64> = rows.iter().map(|&(i, y)| (i, 2.0 * y + 1.0)).collect();
        let sig: BTreeMap<usize, i64> = (1..=7).map(|i| (i, if i <= 3 { 4 } else { 5 })).collect();
        let r = stability_criterion_check(&e, &good, &sig, Transform::Identity).unwrap();
        assert_eq!(r.energy_best, vec![7, 6]);
        assert_eq!(r.energy_worst, vec![3, 2, 1]);
        assert!(r.passes, "{r:?}");
        assert_eq!(r.subsets.iter().find(|s| s.signature == 4).unwrap().size, 3);

        // Ties at the top hide the order of the least stable isomers.
        let mut tied = good.clone();
        tied.insert(1, tied[&2]);
        tied.insert(3, tied[&2]);
        let r = stability_criterion_check(&e, &tied, &sig, Transform::Identity).unwrap();
        assert!(!r.worst_identified && !r.passes);

        let mut partial = e.clone();
        partial.energies.remove(&1);
        assert!(matches!(
            stability_criterion_check(&partial, &good, &sig, Transform::Identity),
            Err(Error::IncompleteEnergies { missing: 1, expected: 7 })
        ));
        let constant: BTreeMap<usize, f64> = (1..=7).map(|i| (i, 1.0)).collect();
        assert!(matches!(
            stability_criterion_check(&e, &constant, &sig, Transform::Identity),
            Err(Error::DegenerateInput(_))
        ));
    }
}
