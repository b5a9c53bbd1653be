//! Constructive combinatorics for Z^d subshifts: hom-shift pattern families
//! and their extension lemmas, rectangular tilings, counting engines and
//! height cocycles of 3-colourings.

pub mod lattice;
pub mod homshift;
pub mod tiling;
pub mod entropy;
pub mod height;
pub mod cli;

use thiserror::Error;

/// Search-node budget shared by all exhaustive engines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

/// Environment variable overriding [`Budget::default`].
pub const BUDGET_ENV: &str = "SUBSHIFT_LAB_BUDGET";

impl Budget {
    pub const DEFAULT_NODES: u64 = 2_000_000_000;

    /// The budget from `SUBSHIFT_LAB_BUDGET`, if set to a positive integer.
    pub fn from_env() -> Option<Budget> {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&b| b > 0)
            .map(Budget)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(Self::DEFAULT_NODES)
    }
}

/// Errors reading or writing the on-disk formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid file: {0}")]
    Invalid(String),
}
