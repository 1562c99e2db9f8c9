mod common;

use std::collections::BTreeSet;

use common::oracles::{closed_walks, det_char_poly};
use common::{feasible_up_to, isomers};
use fullerene_core::facetgraph::{induced_subgraph, GraphKind};
use fullerene_core::spectral::{char_poly, newton_recursive, newton_vector, AdjacencyMatrix};
use fullerene_core::spiral::{canonical_spiral, enumerate_isomers, face_count, wind, SpiralSequence, PENTAGONS};
use num_bigint::BigInt;

/// Every 12-subset of face positions that winds, canonicalized.
fn brute_force_isomers(n: usize) -> BTreeSet<SpiralSequence> {
    let f = face_count(n);
    let mut out = BTreeSet::new();
    let mut pos = [0u16; PENTAGONS];
    fn rec(f: usize, n: usize, depth: usize, start: usize, pos: &mut [u16; PENTAGONS], out: &mut BTreeSet<SpiralSequence>) {
        if depth == PENTAGONS {
            let s = SpiralSequence::new(n, *pos).unwrap();
            if let Ok(d) = wind(&s) {
                out.insert(canonical_spiral(&d).unwrap());
            }
            return;
        }
        for p in start..=f - (PENTAGONS - depth) + 1 {
            pos[depth] = p as u16;
            rec(f, n, depth + 1, p + 1, pos, out);
        }
    }
    rec(f, n, 0, 1, &mut pos, &mut out);
    out
}

#[test]
fn enumeration_matches_brute_force_up_to_34() {
    for n in feasible_up_to(34) {
        let expected: Vec<SpiralSequence> = brute_force_isomers(n).into_iter().collect();
        let got: Vec<SpiralSequence> = enumerate_isomers(n, false).unwrap().into_iter().map(|i| i.spiral).collect();
        assert_eq!(got, expected, "n={n}");
    }
}

#[test]
fn enumeration_does_not_depend_on_thread_count() {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let multi = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    for n in [36, 40] {
        let a = single.install(|| enumerate_isomers(n, false).unwrap());
        let b = multi.install(|| enumerate_isomers(n, false).unwrap());
        assert_eq!(a, b, "n={n}");
    }
}

#[test]
fn pentagon_graphs_agree_with_oracles() {
    for n in feasible_up_to(44) {
        for iso in isomers(n).iter() {
            let t5 = induced_subgraph(&iso.dual().unwrap(), GraphKind::Pentagon);
            let a = AdjacencyMatrix::from_graph(t5.graph());
            let m = a.order();
            assert_eq!(m, 12);
            let nv = newton_vector(&a, m).unwrap();
            for k in 2..=m {
                let rec = newton_recursive(&a, k).unwrap();
                assert_eq!(rec, BigInt::from(nv.get(k).clone()), "n={n} isomer {} k={k}", iso.index);
            }
            assert_eq!(char_poly(&a).low_to_high(), det_char_poly(t5.graph()).as_slice(), "n={n} isomer {}", iso.index);
            for k in 1..=6 {
                assert_eq!(nv.get(k).clone(), closed_walks(t5.graph(), k).into(), "n={n} k={k}");
            }
        }
    }
}

#[test]
fn small_facet_graphs_match_walk_counts() {
    let mut checked = 0;
    for n in feasible_up_to(44) {
        for iso in isomers(n).iter() {
            let dual = iso.dual().unwrap();
            for kind in GraphKind::ALL {
                let g = induced_subgraph(&dual, kind);
                if g.order() == 0 || g.order() > 12 {
                    continue;
                }
                let nv = newton_vector(&AdjacencyMatrix::from_graph(g.graph()), 6).unwrap();
                for k in 1..=6 {
                    assert_eq!(nv.get(k).clone(), closed_walks(g.graph(), k).into());
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn hexagon_char_polys_match_determinant() {
    for n in feasible_up_to(36) {
        for iso in isomers(n).iter() {
            let t6 = induced_subgraph(&iso.dual().unwrap(), GraphKind::Hexagon);
            let a = AdjacencyMatrix::from_graph(t6.graph());
            assert_eq!(char_poly(&a).low_to_high(), det_char_poly(t6.graph()).as_slice());
        }
    }
}
