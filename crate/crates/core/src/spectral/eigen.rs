//! Floating-point eigenvalues by cyclic Jacobi rotations.

use crate::error::{Error, Result};
use crate::facetgraph::{DegreeSummary, Graph};

use super::AdjacencyMatrix;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Off-diagonal Frobenius norm the iteration stopped at or below.
    pub tolerance: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn lambda_max(&self) -> Option<f64> {
        self.values.first().copied()
    }
}

/// Runs cyclic Jacobi sweeps until the off-diagonal Frobenius norm is at
/// most `tol`.
pub fn eigenvalues(a: &AdjacencyMatrix, tol: f64) -> Result<Spectrum> {
    let m = a.order();
    let mut w: Vec<f64> = a
        .to_rows()
        .into_iter()
        .flatten()
        .map(f64::from)
        .collect();
    let off = |w: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    s += w[i * m + j] * w[i * m + j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&w) > tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..m {
            for q in p + 1..m {
                rotate(&mut w, m, p, q);
            }
        }
    }
    let mut values: Vec<f64> = (0..m).map(|i| w[i * m + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        values,
        tolerance: tol,
        sweeps,
    })
}

/// Zeroes `w[p][q]` with a Givens rotation applied on both sides.
fn rotate(w: &mut [f64], m: usize, p: usize, q: usize) {
    let apq = w[p * m + q];
    if apq == 0.0 {
        return;
    }
    let app = w[p * m + p];
    let aqq = w[q * m + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..m {
        let akp = w[k * m + p];
        let akq = w[k * m + q];
        w[k * m + p] = c * akp - s * akq;
        w[k * m + q] = s * akp + c * akq;
    }
    for k in 0..m {
        let apk = w[p * m + k];
        let aqk = w[q * m + k];
        w[p * m + k] = c * apk - s * aqk;
        w[q * m + k] = s * apk + c * aqk;
    }
}

/// Degree-based bounds on the largest eigenvalue: the mean degree (a lower
/// bound for connected graphs), the root-mean-square degree (always a lower
/// bound) and the maximum degree (an upper bound).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaBounds {
    pub lower_mean: f64,
    pub lower_rms: f64,
    pub upper: f64,
    pub connected: bool,
}

pub fn lambda_max_bounds(g: &Graph) -> LambdaBounds {
    let d = DegreeSummary::of(g);
    LambdaBounds {
        lower_mean: d.mean_f64(),
        lower_rms: d.rms(),
        upper: d.max as f64,
        connected: g.is_connected(),
    }
}

impl LambdaBounds {
    /// Whether `lambda` respects every bound that applies, with slack `tol`.
    pub fn admits(&self, lambda: f64, tol: f64) -> bool {
        let mean_ok = !self.connected || self.lower_mean <= lambda + tol;
        mean_ok && self.lower_rms <= lambda + tol && lambda <= self.upper + tol
    }
}

/// Absolute values of a spectrum, descending, split into `[0, 1)` and
/// `[1, inf)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AbsoluteSpectrum {
    pub all: Vec<f64>,
    pub below_one: Vec<f64>,
    pub at_least_one: Vec<f64>,
}

/// Values within the spectrum's own tolerance of 1 count as 1.
pub fn absolute_spectrum(s: &Spectrum) -> AbsoluteSpectrum {
    let mut all: Vec<f64> = s.values.iter().map(|x| x.abs()).collect();
    all.sort_by(|x, y| y.total_cmp(x));
    let slack = s.tolerance.max(1e-9) * 10.0;
    let (at_least_one, below_one) = all.iter().partition(|&&x| x >= 1.0 - slack);
    AbsoluteSpectrum {
        all,
        below_one,
        at_least_one,
    }
}
