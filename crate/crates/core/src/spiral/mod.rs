//! Face spirals: parsing, winding into a dual graph, canonicalization and
//! isomer enumeration.

mod canonical;
mod enumerate;
mod file;
mod frontier;
mod sequence;
mod wind;

pub use canonical::{all_unwindings, canonical_spiral, is_canonical};
pub use enumerate::{enumerate_isomers, Isomer, ENUMERATION_SOFT_LIMIT};
pub use file::{read_spirals, write_spirals};
pub use sequence::{face_count, hexagon_count, is_feasible, FaceKind, SpiralSequence, PENTAGONS};
pub use wind::wind;
