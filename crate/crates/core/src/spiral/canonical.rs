//! Spiral unwinding and the canonical (lexicographically smallest) spiral.
//!
//! A spiral is fixed by a start face, a neighbor of it and a turning
//! direction. Each further face is the third corner of the triangle glued on
//! the boundary edge between the newest face and the oldest face that still
//! has free edges. The same [`Frontier`] used for winding tracks the boundary,
//! and every step is checked against the dual's actual adjacency, so any
//! completed unwinding is a sequence that winds back to this graph.
//!
//! Comparing pentagon-position vectors lexicographically is the same as
//! comparing label strings face by face with pentagon < hexagon, which lets
//! an unwinding stop as soon as it falls behind the best one seen so far.

use std::cmp::Ordering;

use crate::dual::{FullereneDual, Turn};
use crate::error::{Error, Result};

use super::frontier::{FaceId, Frontier};
use super::{FaceKind, SpiralSequence};

pub(crate) struct Unwinder<'a> {
    dual: &'a FullereneDual,
    used: Vec<bool>,
    labels: Vec<FaceKind>,
}

impl<'a> Unwinder<'a> {
    pub fn new(dual: &'a FullereneDual) -> Self {
        Unwinder {
            dual,
            used: vec![false; dual.face_count()],
            labels: Vec::with_capacity(dual.face_count()),
        }
    }

    pub fn labels(&self) -> &[FaceKind] {
        &self.labels
    }

    /// Unwinds from `(first, second, turn)`. Returns the comparison of the
    /// produced labels against `bound`, or `None` when the unwinding breaks
    /// down or is certain to end up larger than `bound`. Without a bound a
    /// completed unwinding reports `Less`.
    pub fn run(&mut self, first: usize, second: usize, turn: Turn, bound: Option<&[FaceKind]>) -> Option<Ordering> {
        let dual = self.dual;
        let m = dual.face_count();
        self.used.iter_mut().for_each(|u| *u = false);
        self.labels.clear();
        let mut order = if bound.is_some() { Ordering::Equal } else { Ordering::Less };

        for face in [first, second] {
            self.place(face, bound, &mut order)?;
        }
        let mut frontier = Frontier::start(
            (first as FaceId, dual.kind(first).valency()),
            (second as FaceId, dual.kind(second).valency()),
        );
        for k in 2..m {
            let front = frontier.front() as usize;
            let back = frontier.back() as usize;
            let next = dual.turn(front, back, turn);
            if self.used[next] {
                return None;
            }
            self.place(next, bound, &mut order)?;
            let valency = dual.kind(next).valency();
            let fits = if k + 1 < m {
                let att = frontier.attach(next as FaceId, valency)?;
                self.matches_graph(next, att.neighbors(), att.degree())
            } else {
                let ring = frontier.close(valency)?;
                self.matches_graph(next, ring.iter().copied(), ring.len())
            };
            if !fits {
                return None;
            }
        }
        Some(order)
    }

    fn place(&mut self, face: usize, bound: Option<&[FaceKind]>, order: &mut Ordering) -> Option<()> {
        let kind = self.dual.kind(face);
        if *order == Ordering::Equal {
            if let Some(bound) = bound {
                match kind.cmp(&bound[self.labels.len()]) {
                    Ordering::Greater => return None,
                    o => *order = o,
                }
            }
        }
        self.used[face] = true;
        self.labels.push(kind);
        Some(())
    }

    /// The faces the frontier glued `face` to must be exactly its already
    /// placed neighbors in the dual.
    fn matches_graph(&self, face: usize, acquired: impl Iterator<Item = FaceId>, count: usize) -> bool {
        let placed = self
            .dual
            .neighbors(face)
            .iter()
            .filter(|&&u| self.used[u])
            .count();
        placed == count && acquired.into_iter().all(|u| self.dual.are_adjacent(face, u as usize))
    }
}

/// Every `(start face, second face, direction)` triple, pentagon starts first.
fn starts(dual: &FullereneDual) -> impl Iterator<Item = (usize, usize, Turn)> + '_ {
    let m = dual.face_count();
    let pentagons = (0..m).filter(|&f| dual.kind(f) == FaceKind::Pentagon);
    let hexagons = (0..m).filter(|&f| dual.kind(f) == FaceKind::Hexagon);
    pentagons.chain(hexagons).flat_map(move |f| {
        dual.neighbors(f)
            .iter()
            .flat_map(move |&g| [(f, g, Turn::Ccw), (f, g, Turn::Cw)])
    })
}

/// Lexicographically smallest pentagon-position vector over all unwindings
/// of the dual.
pub fn canonical_spiral(dual: &FullereneDual) -> Result<SpiralSequence> {
    let mut unwinder = Unwinder::new(dual);
    let mut best: Option<Vec<FaceKind>> = None;
    for (first, second, turn) in starts(dual) {
        if unwinder.run(first, second, turn, best.as_deref()) == Some(Ordering::Less) {
            best = Some(unwinder.labels().to_vec());
        }
    }
    let best = best.ok_or(Error::NotSpiralable)?;
    SpiralSequence::from_labels(dual.n(), &best)
}

/// Every spiral that winds back to `dual`: one per start face, second face
/// and direction that closes, in that order (pentagon starts first).
pub fn all_unwindings(dual: &FullereneDual) -> Vec<(usize, usize, Turn, SpiralSequence)> {
    let mut unwinder = Unwinder::new(dual);
    starts(dual)
        .filter_map(|(first, second, turn)| {
            unwinder.run(first, second, turn, None)?;
            let spiral = SpiralSequence::from_labels(dual.n(), unwinder.labels()).ok()?;
            Some((first, second, turn, spiral))
        })
        .collect()
}

/// `true` when no unwinding of `dual` is lexicographically smaller than
/// `labels`.
pub fn is_canonical(dual: &FullereneDual, labels: &[FaceKind]) -> bool {
    let mut unwinder = Unwinder::new(dual);
    starts(dual).all(|(first, second, turn)| unwinder.run(first, second, turn, Some(labels)) != Some(Ordering::Less))
}
