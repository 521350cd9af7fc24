//! Flip algebra, flatness and wideness witnesses, and the conversion of flip-flatness
//! witnesses into deletion-based wideness witnesses for weakly sparse graphs.

pub mod bitset;
pub mod cli;
pub mod conversion;
pub mod error;
pub mod flip;
pub mod io;
pub mod report;
pub mod graph;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use flip::{
    apply_flip, apply_flips, atom_partition, isolating_flips, normalize, star_product, AtomPartition, Flip,
    FlipSet, FlippedView, NormalizedFlipSet,
};
pub use graph::{Distance, DistanceVector, Graph, Relabeling};
pub mod families;
pub mod search;
pub mod witness;
