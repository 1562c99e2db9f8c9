//! Shared inputs for the benchmarks.

use fullerene_core::{wind, FullereneDual, SpiralSequence};

/// Canonical spiral of the icosahedral C60.
pub fn buckminster_spiral() -> SpiralSequence {
    SpiralSequence::new(60, [1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32]).expect("valid spiral")
}

pub fn buckminster() -> FullereneDual {
    wind(&buckminster_spiral()).expect("spiral winds")
}
