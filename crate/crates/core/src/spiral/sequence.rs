use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of pentagonal faces of every fullerene.
pub const PENTAGONS: usize = 12;

/// Label of a facet: pentagon or hexagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FaceKind {
    Pentagon,
    Hexagon,
}

impl FaceKind {
    /// Number of edges (and hence dual neighbors) of the facet.
    pub const fn valency(self) -> usize {
        match self {
            FaceKind::Pentagon => 5,
            FaceKind::Hexagon => 6,
        }
    }
}

/// `true` for n = 20 and every even n >= 24.
pub fn is_feasible(n: usize) -> bool {
    n == 20 || (n >= 24 && n.is_multiple_of(2))
}

/// Number of facets `n/2 + 2` of a fullerene with `n` atoms.
pub fn face_count(n: usize) -> usize {
    n / 2 + 2
}

/// Number of hexagons `n/2 - 10`.
pub fn hexagon_count(n: usize) -> usize {
    n / 2 - 10
}

/// The 1-based positions of the twelve pentagons in a facet spiral of a
/// fullerene with `n` atoms.
///
/// Ordering is lexicographic on `positions` (ties broken by `n`), which is the
/// order used to number isomers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpiralSequence {
    n: usize,
    positions: [u16; PENTAGONS],
}

impl SpiralSequence {
    pub fn new(n: usize, positions: [u16; PENTAGONS]) -> Result<Self> {
        if !is_feasible(n) {
            return Err(Error::InfeasibleN(n));
        }
        let m = face_count(n);
        if positions[0] < 1 {
            return Err(Error::InvalidSequence("positions are 1-based".into()));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(
                "positions must be strictly increasing".into(),
            ));
        }
        if positions[PENTAGONS - 1] as usize > m {
            return Err(Error::InvalidSequence(format!(
                "position {} exceeds the face count {m}",
                positions[PENTAGONS - 1]
            )));
        }
        Ok(SpiralSequence { n, positions })
    }

    pub fn from_slice(n: usize, positions: &[u16]) -> Result<Self> {
        let positions: [u16; PENTAGONS] = positions.try_into().map_err(|_| {
            Error::InvalidSequence(format!(
                "expected {PENTAGONS} pentagon positions, got {}",
                positions.len()
            ))
        })?;
        Self::new(n, positions)
    }

    /// Builds the sequence from a face-label string of length `n/2 + 2`.
    pub fn from_labels(n: usize, labels: &[FaceKind]) -> Result<Self> {
        if labels.len() != face_count(n) {
            return Err(Error::InvalidSequence(format!(
                "expected {} face labels, got {}",
                face_count(n),
                labels.len()
            )));
        }
        let positions: Vec<u16> = labels
            .iter()
            .enumerate()
            .filter(|(_, &k)| k == FaceKind::Pentagon)
            .map(|(i, _)| i as u16 + 1)
            .collect();
        Self::from_slice(n, &positions)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[u16; PENTAGONS] {
        &self.positions
    }

    pub fn face_count(&self) -> usize {
        face_count(self.n)
    }

    /// Face labels in spiral order.
    pub fn labels(&self) -> Vec<FaceKind> {
        let mut labels = vec![FaceKind::Hexagon; self.face_count()];
        for &p in &self.positions {
            labels[p as usize - 1] = FaceKind::Pentagon;
        }
        labels
    }
}

impl PartialOrd for SpiralSequence {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SpiralSequence {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.positions
            .cmp(&other.positions)
            .then(self.n.cmp(&other.n))
    }
}

/// Spiral-file record: `n` followed by the twelve positions.
impl fmt::Display for SpiralSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        for p in &self.positions {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

impl FromStr for SpiralSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        if fields.len() != PENTAGONS + 1 {
            return Err(Error::InvalidSequence(format!(
                "expected {} integers, got {}",
                PENTAGONS + 1,
                fields.len()
            )));
        }
        let n: usize = fields[0]
            .parse()
            .map_err(|_| Error::InvalidSequence(format!("bad atom count {:?}", fields[0])))?;
        let positions = fields[1..]
            .iter()
            .map(|f| {
                f.parse::<u16>()
                    .map_err(|_| Error::InvalidSequence(format!("bad position {f:?}")))
            })
            .collect::<Result<Vec<u16>>>()?;
        Self::from_slice(n, &positions)
    }
}
