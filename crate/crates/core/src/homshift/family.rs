use std::collections::BTreeMap;

use super::enumerate::marker_set;
use super::graph::TargetGraph;
use super::pattern::PatternSet;
use super::HomError;
use crate::Budget;

/// A finite window n ∈ range of a flexible sequence of pattern families on F_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlexibleFamily {
    pub sets: BTreeMap<u32, PatternSet>,
    pub gap: BTreeMap<u32, u32>,
    pub marker: bool,
}

impl FlexibleFamily {
    /// The two-layer checkerboard marker families C̃_n on F_n for n in
    /// `ns` (each n ≥ 2), with constant gap N + 2.
    pub fn tilde(
        h: &TargetGraph,
        (v0, v1, v2): (u8, u8, u8),
        ns: impl IntoIterator<Item = u32>,
        d: usize,
        budget: Budget,
    ) -> Result<Self, HomError> {
        let g = h.min_universal_path_length()? as u32 + 2;
        let mut sets = BTreeMap::new();
        let mut gap = BTreeMap::new();
        for n in ns {
            if n < 2 {
                return Err(HomError::RadiusZero);
            }
            sets.insert(n, marker_set(h, v0, v1, v2, n - 1, d, budget)?);
            gap.insert(n, g);
        }
        Ok(FlexibleFamily {
            sets,
            gap,
            marker: true,
        })
    }

    /// g(n)/n is nonincreasing over the stored range.
    pub fn gap_ratio_nonincreasing(&self) -> bool {
        let ratios: Vec<f64> = self
            .gap
            .iter()
            .filter(|(&n, _)| n > 0)
            .map(|(&n, &g)| g as f64 / n as f64)
            .collect();
        ratios.windows(2).all(|w| w[1] <= w[0])
    }
}

/// log|C_n| / |F_n| in nats; negative infinity for an empty set.
pub fn finite_entropy_estimate(family: &FlexibleFamily, n: u32) -> Result<f64, HomError> {
    let set = family.sets.get(&n).ok_or(HomError::MissingLevel(n))?;
    if set.is_empty() {
        return Ok(f64::NEG_INFINITY);
    }
    Ok((set.len() as f64).ln() / set.region().len() as f64)
}
