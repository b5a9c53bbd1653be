//! Counting engines: transfer matrices, dimer formulas and entropy reports.

mod dimers;
mod report;
mod transfer;

use thiserror::Error;

use crate::homshift::HomError;
use crate::lattice::LatticeError;

pub use dimers::{count_dimer_tilings_kasteleyn, count_dimer_tilings_transfer};
pub use report::{entropy_ratio_report, ln_big, EntropyReport, EntropyRow};
pub use transfer::{
    count_hom_box, count_hom_torus, strip_entropy, Boundary, TransferOperator, POWER_MAX_ITER,
    POWER_TOL,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EntropyError {
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("unsupported width {0}")]
    Width(u32),
    #[error("unsupported dimension {0}")]
    Dimension(usize),
    #[error("target graph has no vertex with two distinct neighbours")]
    NoMarkerColours,
    #[error("product formula not within 1e-6 of an integer (distance {0})")]
    Precision(f64),
    #[error("power iteration did not converge in {0} iterations")]
    NotConverged(usize),
    #[error("node budget of {0} exceeded")]
    Budget(u64),
}

impl EntropyError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            EntropyError::Budget(_) | EntropyError::Hom(HomError::Budget(_))
        )
    }
}
