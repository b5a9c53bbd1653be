use std::collections::HashMap;
use std::hash::Hash;

use rayon::prelude::*;

use super::pattern::{Pattern, PatternSet};
use crate::lattice::{Region, Site};

/// Two family members that agree on the overlap of their domains when the
/// second is translated by `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub first: usize,
    pub second: usize,
    pub offset: Site,
}

/// Nonzero offsets with ‖t‖∞ ≤ max in the half-space whose first nonzero
/// coordinate is positive, ordered by ‖t‖₁ and then lexicographically.
fn half_space_offsets(d: usize, max: u32) -> Vec<Site> {
    let mut out: Vec<Site> = Region::box_f(max, d)
        .expect("valid dimension")
        .sites()
        .iter()
        .copied()
        .filter(|t| t.coords().iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .collect();
    out.sort_by_key(|t| (t.norm_l1(), *t));
    out
}

/// Searches for a, b in `members` (cell labels over `region`) and an offset t
/// with 0 < ‖t‖∞ ≤ max_offset such that a(x) = b(x - t) wherever both are
/// defined. Pairs with a = b are included.
///
/// Only half of the offsets are scanned: (a, b, t) is consistent exactly when
/// (b, a, -t) is.
pub fn first_consistent_overlap<L>(
    region: &Region,
    members: &[Vec<L>],
    max_offset: u32,
) -> Option<Overlap>
where
    L: Eq + Hash + Sync,
{
    if members.is_empty() || max_offset == 0 {
        return None;
    }
    let offsets = half_space_offsets(region.dim(), max_offset);
    offsets.par_iter().find_map_first(|t| {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (i, x) in region.sites().iter().enumerate() {
            if let Some(j) = region.index_of(&x.sub(t)) {
                xs.push(i);
                ys.push(j);
            }
        }
        let mut by_key: HashMap<Vec<&L>, usize> = HashMap::new();
        for (b, m) in members.iter().enumerate() {
            let key: Vec<&L> = ys.iter().map(|&j| &m[j]).collect();
            by_key.entry(key).or_insert(b);
        }
        members.iter().enumerate().find_map(|(a, m)| {
            let key: Vec<&L> = xs.iter().map(|&i| &m[i]).collect();
            by_key.get(&key).map(|&b| Overlap {
                first: a,
                second: b,
                offset: *t,
            })
        })
    })
}

/// Result of a marker spacing check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkerVerdict {
    Ok,
    /// Inconclusive: the pair is locally consistent at this offset, which
    /// does not by itself disprove the marker property.
    Counterexample {
        first: Pattern,
        second: Pattern,
        offset: Site,
    },
}

impl MarkerVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, MarkerVerdict::Ok)
    }
}

/// Checks that no two members (possibly equal) can occur at distinct
/// positions closer than 2·spacing_n + 1 in sup norm.
pub fn verify_marker_spacing(family: &PatternSet, spacing_n: u32) -> MarkerVerdict {
    match first_consistent_overlap(family.region(), family.raw(), 2 * spacing_n) {
        None => MarkerVerdict::Ok,
        Some(o) => MarkerVerdict::Counterexample {
            first: family.get(o.first),
            second: family.get(o.second),
            offset: o.offset,
        },
    }
}
