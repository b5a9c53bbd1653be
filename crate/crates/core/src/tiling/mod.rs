//! Rectangular tilings by a coprime prototile set.

mod cover;
mod fill;
mod frobenius;
pub mod io;
mod marker;
mod partition;
mod search;
mod tileset;

use thiserror::Error;

use crate::lattice::{LatticeError, Site};

pub use cover::{
    tile_rectangle, tile_rectangle_variants, variant_count, Placement, Rect, Tiling,
};
pub use fill::flexible_tile_fill;
pub use frobenius::frobenius_decompose;
pub use marker::{centred_offset, marker_tiling_set, MarkerTiling, MarkerTilingFamily};
pub use partition::partition_complement;
pub use search::{count_tilings, enumerate_tilings};
pub use tileset::{is_coprime, TileSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("tile set is empty")]
    EmptyTileSet,
    #[error("invalid or duplicate prototile {0:?}")]
    BadPrototile(Vec<u32>),
    #[error("prototile index {0} out of range")]
    BadPrototileIndex(usize),
    #[error("cannot parse tile set {0:?}")]
    Parse(String),
    #[error("dimension mismatch between tile set and region")]
    DimensionMismatch,
    #[error("tile set not coprime in this coordinate")]
    NotCoprime,
    #[error("length {0} is not representable by the tile lengths")]
    NotRepresentable(u32),
    #[error("rectangle not certified tileable: {0:?} has neither all sides multiples of M nor one side >= M with the rest multiples of M")]
    NotCertified(Vec<u32>),
    #[error("padded block leaves the box through the {} face normal to axis {axis}", if *upper { "upper" } else { "lower" })]
    Face { axis: usize, upper: bool },
    #[error("tile covers {0}, outside the region")]
    OutOfRegion(Site),
    #[error("tiles overlap at {0}")]
    Overlap(Site),
    #[error("cell {0} is not covered")]
    Uncovered(Site),
    #[error("padded blocks at {0} and {1} intersect")]
    Separation(Site, Site),
    #[error("padded block at {0} is not contained in the box")]
    BlockContainment(Site),
    #[error("block at {0} is not a tiling of B_kM by this tile set")]
    BlockMismatch(Site),
    #[error("grid-aligned enlargements of blocks at {0} and {1} intersect")]
    EnlargedOverlap(Site, Site),
    #[error("a single coprime prototile gives the trivial one point system")]
    TrivialTileSet,
    #[error("no pair of prototiles yields an extendable two-ring marker at n = {0}")]
    NoMarkerPair(u32),
    #[error("node budget of {0} exceeded")]
    Budget(u64),
}
