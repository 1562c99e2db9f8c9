use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::Graph;

/// Degree histogram, mean and maximum valency and the asymmetry
/// `theta = max - mean`, kept as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSummary {
    /// `histogram[d]` is the number of vertices of degree `d`.
    pub histogram: Vec<usize>,
    pub mean: Ratio<i64>,
    pub max: usize,
    pub theta: Ratio<i64>,
}

impl DegreeSummary {
    pub fn of(g: &Graph) -> DegreeSummary {
        let max = g.max_degree();
        let mut histogram = vec![0; max + 1];
        for v in 0..g.order() {
            histogram[g.degree(v)] += 1;
        }
        let mean = if g.order() == 0 {
            Ratio::zero()
        } else {
            Ratio::new(2 * g.edge_count() as i64, g.order() as i64)
        };
        let theta = Ratio::from_integer(max as i64) - mean;
        DegreeSummary {
            histogram,
            mean,
            max,
            theta,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.theta.is_zero()
    }

    /// `sqrt(sum of squared degrees / order)`, zero for the empty graph.
    pub fn rms(&self) -> f64 {
        let order: usize = self.histogram.iter().sum();
        if order == 0 {
            return 0.0;
        }
        let sq: usize = self.histogram.iter().enumerate().map(|(d, &c)| d * d * c).sum();
        (sq as f64 / order as f64).sqrt()
    }

    pub fn mean_f64(&self) -> f64 {
        self.mean.to_f64().unwrap_or(f64::NAN)
    }

    pub fn theta_f64(&self) -> f64 {
        self.theta.to_f64().unwrap_or(f64::NAN)
    }
}

/// Decimal rendering with exactly `places` digits after the point, rounded
/// half away from zero.
pub fn format_ratio(r: &Ratio<i64>, places: u32) -> String {
    let scale = 10i128.pow(places);
    let num = *r.numer() as i128 * scale;
    let den = *r.denom() as i128;
    let q = (2 * num + num.signum() * den) / (2 * den);
    let sign = if q < 0 { "-" } else { "" };
    let q = q.abs();
    if places == 0 {
        return format!("{sign}{q}");
    }
    format!(
        "{sign}{}.{:0width$}",
        q / scale,
        q % scale,
        width = places as usize
    )
}
