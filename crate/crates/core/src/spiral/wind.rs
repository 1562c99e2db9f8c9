use crate::dual::FullereneDual;
use crate::error::{Error, Result};

use super::frontier::{FaceId, Frontier};
use super::SpiralSequence;

/// Reconstructs the dual facet graph from a face spiral.
///
/// Face `k` of the spiral becomes vertex `k - 1` of the dual. Fails with
/// [`Error::InvalidSpiral`] when the boundary cannot host some face or the
/// last face does not close it; this is the ordinary outcome for most
/// pentagon-position vectors.
pub fn wind(spiral: &SpiralSequence) -> Result<FullereneDual> {
    let labels = spiral.labels();
    let m = labels.len();
    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(spiral.n());
    let mut push = |t: [FaceId; 3]| triangles.push(t.map(usize::from));

    let mut frontier = Frontier::start((0, labels[0].valency()), (1, labels[1].valency()));
    for (k, kind) in labels.iter().enumerate().take(m - 1).skip(2) {
        let att = frontier
            .attach(k as FaceId, kind.valency())
            .ok_or(Error::InvalidSpiral { step: k + 1 })?;
        att.triangles(k as FaceId).for_each(&mut push);
    }
    let last = (m - 1) as FaceId;
    let ring = frontier
        .close(labels[m - 1].valency())
        .ok_or(Error::InvalidSpiral { step: m })?;
    Frontier::closing_triangles(&ring, last).for_each(&mut push);

    FullereneDual::from_triangles(spiral.n(), labels, &triangles)
        .map_err(|_| Error::InvalidSpiral { step: m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spiral::FaceKind;

    fn buckminster() -> SpiralSequence {
        SpiralSequence::new(60, [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).unwrap()
    }

    #[test]
    fn buckminster_winds() {
        let dual = wind(&buckminster()).unwrap();
        assert_eq!(dual.face_count(), 32);
        assert_eq!(dual.edge_count(), 90);
        assert_eq!(dual.triangles().len(), 60);
        let hex_hex = dual
            .edges()
            .into_iter()
            .filter(|&(u, v)| dual.kind(u) == FaceKind::Hexagon && dual.kind(v) == FaceKind::Hexagon)
            .count();
        assert_eq!(hex_hex, 30);
        for f in 0..32 {
            if dual.kind(f) == FaceKind::Hexagon {
                let hex_nbrs = dual
                    .neighbors(f)
                    .iter()
                    .filter(|&&u| dual.kind(u) == FaceKind::Hexagon)
                    .count();
                assert_eq!(hex_nbrs, 3);
            }
        }
    }

    #[test]
    fn icosahedron() {
        let s = SpiralSequence::new(20, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]).unwrap();
        let dual = wind(&s).unwrap();
        assert_eq!(dual.face_count(), 12);
        assert_eq!(dual.edge_count(), 30);
        assert_eq!(dual.triangles().len(), 20);
        assert!((0..12).all(|f| dual.neighbors(f).len() == 5));
    }

    #[test]
    fn leading_pentagon_cap_starves() {
        // The first twelve faces close into an icosahedral cap, so face 12
        // cannot be a non-final face.
        let s = SpiralSequence::new(60, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]).unwrap();
        match wind(&s) {
            Err(Error::InvalidSpiral { step }) => assert!(step <= 12, "failed at {step}"),
            other => panic!("expected InvalidSpiral, got {other:?}"),
        }
    }
}
