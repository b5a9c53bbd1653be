//! Graph-homomorphism patterns: enumeration, the checkerboard and marker
//! families, and the constructive extension lemmas.

mod contraction;
mod enumerate;
mod extend;
mod family;
mod graph;
pub mod io;
mod marker;
mod pattern;

use thiserror::Error;

use crate::lattice::{LatticeError, Site};

pub(crate) use enumerate::{hat_constraints, marker_constraints};
pub use contraction::{level, tau, tau_n};
pub use enumerate::{
    checkerboard_set, count_constrained, enumerate_constrained, enumerate_hom, hat_set, marker_set,
    Constraints,
};
pub use extend::{embed_in_marker, flexible_fill, hat_extend, path_extend, HatExtension};
pub use family::{finite_entropy_estimate, FlexibleFamily};
pub use graph::{EdgeList, TargetGraph, MAX_VERTICES};
pub use marker::{first_consistent_overlap, verify_marker_spacing, MarkerVerdict, Overlap};
pub use pattern::{residue_mask, Pattern, PatternSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("target graph must have 1..=64 vertices, got {0}")]
    GraphSize(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("no such N exists: target graph is bipartite or disconnected")]
    NotPrimitive,
    #[error("pattern has {got} values but region has {expected} sites")]
    PatternShape { expected: usize, got: usize },
    #[error("boundary site {0} lies outside the region")]
    BoundaryOutsideRegion(Site),
    #[error("({0}, {1}) is not an edge of the target graph")]
    NotAnEdge(u8, u8),
    #[error("marker colours v1 and v2 must differ")]
    MarkerColoursEqual,
    #[error("radius must be at least 1")]
    RadiusZero,
    #[error("extension length too short: k = {k}, need at least {min}")]
    ExtensionTooShort { k: u32, min: u32 },
    #[error("input not a homomorphism: sites {0} and {1}")]
    NotHomomorphism(Site, Site),
    #[error("pattern is not on a centred box F_n")]
    NotCentredBox,
    #[error("input not in the required pattern family")]
    NotInFamily,
    #[error("no homomorphic extension of the shell residues to the unit cube")]
    NoCubeLift,
    #[error("sites {0} and {1} violate the spacing precondition")]
    Spacing(Site, Site),
    #[error("padded block at {0} is not contained in the box")]
    Containment(Site),
    #[error("blocks must all live on the same box F_k")]
    BlockShape,
    #[error("family has no patterns stored at n = {0}")]
    MissingLevel(u32),
    #[error("node budget of {0} exceeded")]
    Budget(u64),
}
