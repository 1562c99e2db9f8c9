//! Open boundary of a partially wound spiral.
//!
//! The boundary is a closed walk `front, ..., back` of faces that still have
//! unmatched edges, each stored with its count of open slots. A new face is
//! glued across the closing edge `back -> front`; whenever the front (or
//! back) runs out of slots it leaves the boundary and the new face is glued
//! to its successor as well.
//!
//! Orientation convention: walking the boundary from front to back keeps the
//! wound patch on the left, so every triangle emitted here is counter-clockwise.

use std::collections::VecDeque;

use arrayvec::ArrayVec;

pub(crate) type FaceId = u16;

#[derive(Clone, Debug, Default)]
pub(crate) struct Frontier {
    open: VecDeque<(FaceId, u8)>,
}

/// Neighbors acquired by one attached face, split by the side of the boundary
/// they were consumed from. `front[0]` and `back[0]` are the two ends of the
/// closing edge; later entries were exposed by saturated faces leaving.
#[derive(Clone, Debug, Default)]
pub(crate) struct Attachment {
    pub front: ArrayVec<FaceId, 6>,
    pub back: ArrayVec<FaceId, 6>,
}

impl Attachment {
    pub fn degree(&self) -> usize {
        self.front.len() + self.back.len()
    }

    fn contains(&self, face: FaceId) -> bool {
        self.front.contains(&face) || self.back.contains(&face)
    }

    pub fn neighbors(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.front.iter().chain(self.back.iter()).copied()
    }

    /// Counter-clockwise triangles created by gluing `face`.
    pub fn triangles(&self, face: FaceId) -> impl Iterator<Item = [FaceId; 3]> + '_ {
        let first = std::iter::once([self.front[0], self.back[0], face]);
        let fronts = self.front.windows(2).map(move |w| [w[1], w[0], face]);
        let backs = self.back.windows(2).map(move |w| [w[0], w[1], face]);
        first.chain(fronts).chain(backs)
    }
}

impl Frontier {
    /// Boundary after gluing the first two faces along a shared edge.
    pub fn start(first: (FaceId, usize), second: (FaceId, usize)) -> Frontier {
        let mut open = VecDeque::with_capacity(32);
        open.push_back((first.0, first.1 as u8 - 1));
        open.push_back((second.0, second.1 as u8 - 1));
        Frontier { open }
    }

    pub fn front(&self) -> FaceId {
        self.open[0].0
    }

    pub fn back(&self) -> FaceId {
        self.open[self.open.len() - 1].0
    }

    /// Glues a face of the given valency that is not the last one. Returns
    /// `None` when the boundary cannot host it.
    pub fn attach(&mut self, face: FaceId, valency: usize) -> Option<Attachment> {
        if self.open.len() < 2 {
            return None;
        }
        let mut att = Attachment::default();

        let back = self.open.back_mut()?;
        back.1 = back.1.checked_sub(1)?;
        att.back.push(back.0);
        let front = self.open.front_mut()?;
        front.1 = front.1.checked_sub(1)?;
        att.front.push(front.0);

        while self.open.front()?.1 == 0 {
            self.open.pop_front();
            let next = self.open.front_mut()?;
            if att.contains(next.0) {
                return None;
            }
            next.1 = next.1.checked_sub(1)?;
            att.front.try_push(next.0).ok()?;
            if att.degree() > valency {
                return None;
            }
        }
        while self.open.back()?.1 == 0 {
            self.open.pop_back();
            let next = self.open.back_mut()?;
            if att.contains(next.0) {
                return None;
            }
            next.1 = next.1.checked_sub(1)?;
            att.back.try_push(next.0).ok()?;
            if att.degree() > valency {
                return None;
            }
        }
        // The next face needs at least one free slot on this one.
        if att.degree() >= valency {
            return None;
        }
        self.open.push_back((face, (valency - att.degree()) as u8));
        Some(att)
    }

    /// Glues the final face, which must close the boundary exactly. Returns the
    /// boundary ring (front to back).
    pub fn close(&self, valency: usize) -> Option<ArrayVec<FaceId, 6>> {
        if self.open.len() != valency || self.open.iter().any(|&(_, slots)| slots != 1) {
            return None;
        }
        Some(self.open.iter().map(|&(f, _)| f).collect())
    }

    /// Counter-clockwise triangles closing the ring around the last face.
    pub fn closing_triangles(ring: &[FaceId], face: FaceId) -> impl Iterator<Item = [FaceId; 3]> + '_ {
        (0..ring.len()).map(move |i| [ring[(i + 1) % ring.len()], ring[i], face])
    }
}
