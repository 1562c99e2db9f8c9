use rayon::prelude::*;

use crate::dual::FullereneDual;
use crate::error::{Error, Result};

use super::canonical::is_canonical;
use super::frontier::{FaceId, Frontier};
use super::{face_count, hexagon_count, is_feasible, wind, FaceKind, SpiralSequence, PENTAGONS};

/// Largest atom count enumerated without a resource warning.
pub const ENUMERATION_SOFT_LIMIT: usize = 60;

/// Faces fixed sequentially before the search fans out to worker threads.
const SPLIT_DEPTH: usize = 12;

/// One combinatorial isomer: its canonical spiral and 1-based rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Isomer {
    pub index: usize,
    pub spiral: SpiralSequence,
}

impl Isomer {
    pub fn dual(&self) -> Result<FullereneDual> {
        Ok(wind(&self.spiral)?.with_isomer_index(self.index))
    }
}

/// Enumerates every combinatorial isomer of `C_n`, sorted by canonical
/// spiral; `index` is the rank in that order. With `ipr_only`, only isomers
/// without adjacent pentagons are kept (their indices are ranks among IPR
/// isomers).
///
/// The search fixes face labels one at a time and winds incrementally, so a
/// prefix that cannot be wound is abandoned together with every extension.
/// A complete spiral is kept only if it is the canonical spiral of its own
/// dual. Work is spread over the current rayon pool; the result does not
/// depend on the number of threads.
pub fn enumerate_isomers(n: usize, ipr_only: bool) -> Result<Vec<Isomer>> {
    if !is_feasible(n) {
        return Err(Error::InfeasibleN(n));
    }
    let search = Search {
        n,
        m: face_count(n),
        ipr_only,
    };
    let mut tasks = Vec::new();
    search.expand(Prefix::root(), SPLIT_DEPTH.min(search.m - 1), &mut tasks);
    let mut spirals: Vec<SpiralSequence> = tasks
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let mut found = Vec::new();
            search.complete(prefix, &mut found);
            found
        })
        .collect();
    spirals.sort_unstable();
    spirals.dedup();
    Ok(spirals
        .into_iter()
        .enumerate()
        .map(|(i, spiral)| Isomer { index: i + 1, spiral })
        .collect())
}

struct Search {
    n: usize,
    m: usize,
    ipr_only: bool,
}

#[derive(Clone)]
struct Prefix {
    labels: Vec<FaceKind>,
    frontier: Frontier,
    pentagons_left: usize,
}

impl Prefix {
    fn root() -> Prefix {
        Prefix {
            labels: Vec::new(),
            frontier: Frontier::default(),
            pentagons_left: PENTAGONS,
        }
    }
}

impl Search {
    fn hexagons_left(&self, p: &Prefix) -> usize {
        hexagon_count(self.n) - (p.labels.len() - (PENTAGONS - p.pentagons_left))
    }

    /// Extends `p` by one face of `kind`, or `None` if the boundary rejects it.
    fn extend(&self, p: &Prefix, kind: FaceKind) -> Option<Prefix> {
        let k = p.labels.len();
        match kind {
            FaceKind::Pentagon if p.pentagons_left == 0 => return None,
            FaceKind::Hexagon if self.hexagons_left(p) == 0 => return None,
            _ => {}
        }
        let mut next = p.clone();
        next.labels.push(kind);
        if kind == FaceKind::Pentagon {
            next.pentagons_left -= 1;
        }
        match k {
            0 => {}
            1 => {
                if self.ipr_only && kind == FaceKind::Pentagon && p.labels[0] == FaceKind::Pentagon {
                    return None;
                }
                next.frontier = Frontier::start(
                    (0, p.labels[0].valency()),
                    (1, kind.valency()),
                );
            }
            _ => {
                let att = next.frontier.attach(k as FaceId, kind.valency())?;
                if self.ipr_only
                    && kind == FaceKind::Pentagon
                    && att.neighbors().any(|u| p.labels[u as usize] == FaceKind::Pentagon)
                {
                    return None;
                }
            }
        }
        Some(next)
    }

    fn children(&self, p: &Prefix) -> impl Iterator<Item = Prefix> + '_ {
        let p = p.clone();
        [FaceKind::Pentagon, FaceKind::Hexagon]
            .into_iter()
            .filter_map(move |kind| self.extend(&p, kind))
    }

    fn expand(&self, p: Prefix, depth: usize, out: &mut Vec<Prefix>) {
        if p.labels.len() == depth {
            out.push(p);
            return;
        }
        for child in self.children(&p) {
            self.expand(child, depth, out);
        }
    }

    fn complete(&self, p: Prefix, found: &mut Vec<SpiralSequence>) {
        if p.labels.len() + 1 < self.m {
            for child in self.children(&p) {
                self.complete(child, found);
            }
            return;
        }
        let last = if p.pentagons_left == 1 {
            FaceKind::Pentagon
        } else {
            FaceKind::Hexagon
        };
        let Some(ring) = p.frontier.close(last.valency()) else {
            return;
        };
        if self.ipr_only
            && last == FaceKind::Pentagon
            && ring.iter().any(|&u| p.labels[u as usize] == FaceKind::Pentagon)
        {
            return;
        }
        let mut labels = p.labels;
        labels.push(last);
        let Ok(spiral) = SpiralSequence::from_labels(self.n, &labels) else {
            return;
        };
        let Ok(dual) = wind(&spiral) else {
            return;
        };
        if is_canonical(&dual, &labels) {
            found.push(spiral);
        }
    }
}
