//! Height functions of proper 3-colourings and the uniform filling property.

mod cocycle;
mod ufp;

use thiserror::Error;

use crate::homshift::HomError;
use crate::lattice::{LatticeError, Site};

pub use cocycle::{
    checker_pattern, height_cocycle, lipschitz_check, quasiflat_gap, sample_coloring,
    striped_pattern, HeightField, LipschitzViolation,
};
pub use ufp::{glue, ufp_window_check, UfpMode, UfpVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeightError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("not a proper 3-colouring at {0}, {1}")]
    NotProper(Site, Site),
    #[error("base site {0} lies outside the region")]
    BaseOutside(Site),
    #[error("region is disconnected: {0} is unreachable")]
    Disconnected(Site),
    #[error("height increments do not close up around {0}")]
    Conflict(Site),
    #[error("sampler has no colour left at {0}")]
    Stuck(Site),
    #[error("samples live on different regions")]
    RegionMismatch,
    #[error("gluing needs a box-shaped region")]
    NotBox,
    #[error("expected {expected} fixed entries, got {got}")]
    FixedShape { expected: usize, got: usize },
    #[error("box too wide for the gluing frontier ({0} sites)")]
    FrontierTooWide(usize),
    #[error("targeted mode needs H = K3")]
    NotK3,
    #[error("buffer must be at least 1")]
    BufferZero,
    #[error("node budget of {0} exceeded")]
    Budget(u64),
}

impl HeightError {
    pub fn is_budget(&self) -> bool {
        matches!(self, HeightError::Budget(_) | HeightError::Hom(HomError::Budget(_)))
    }
}
