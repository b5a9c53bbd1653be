use num_bigint::BigUint;

use super::graph::TargetGraph;
use super::HomError;
use crate::lattice::{parity, Region, RegionKind, Site};

/// A total assignment of target vertices to the sites of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    region: Region,
    values: Vec<u8>,
}

impl Pattern {
    pub fn new(region: Region, values: Vec<u8>) -> Result<Self, HomError> {
        if values.len() != region.len() {
            return Err(HomError::PatternShape {
                expected: region.len(),
                got: values.len(),
            });
        }
        Ok(Pattern { region, values })
    }

    pub fn from_fn(region: Region, mut f: impl FnMut(&Site) -> u8) -> Self {
        let values = region.sites().iter().map(&mut f).collect();
        Pattern { region, values }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    #[inline]
    pub fn get(&self, s: &Site) -> Option<u8> {
        self.region.index_of(s).map(|i| self.values[i])
    }

    #[inline]
    pub fn at(&self, idx: usize) -> u8 {
        self.values[idx]
    }

    /// First adjacent pair of sites whose values are not adjacent in `h`.
    pub fn first_bad_edge(&self, h: &TargetGraph) -> Option<(Site, Site)> {
        if self.values.iter().any(|&v| v as usize >= h.vertex_count()) {
            let i = self
                .values
                .iter()
                .position(|&v| v as usize >= h.vertex_count())
                .unwrap();
            let s = self.region.site(i);
            return Some((s, s));
        }
        for (i, s) in self.region.sites().iter().enumerate() {
            for t in 0..s.dim() {
                let nb = s.step(t, 1);
                if let Some(j) = self.region.index_of(&nb) {
                    if !h.adjacent(self.values[i], self.values[j]) {
                        return Some((*s, nb));
                    }
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self, h: &TargetGraph) -> bool {
        self.first_bad_edge(h).is_none()
    }

    /// Restriction to `sub`, which must lie inside the region.
    pub fn restrict(&self, sub: &Region) -> Option<Pattern> {
        let values = sub
            .sites()
            .iter()
            .map(|s| self.get(s))
            .collect::<Option<Vec<u8>>>()?;
        Some(Pattern {
            region: sub.clone(),
            values,
        })
    }

    /// `S^offset(self)` restricted to `window`: the value at `j` is `self[offset + j]`.
    pub fn shifted_window(&self, offset: &Site, window: &Region) -> Option<Pattern> {
        let values = window
            .sites()
            .iter()
            .map(|s| self.get(&s.add(offset)))
            .collect::<Option<Vec<u8>>>()?;
        Some(Pattern {
            region: window.clone(),
            values,
        })
    }

    /// The box index n when the pattern lives on F_n.
    pub fn box_f_radius(&self) -> Option<u32> {
        match self.region.kind() {
            RegionKind::BoxF { n } => Some(*n),
            _ => None,
        }
    }

    /// The edge (v0, v1) if the outer shell of an F_n pattern is the
    /// (v0, v1)-checkerboard (v0 on even sites). Returns None for n = 0 or a
    /// non-checkerboard shell.
    pub fn checkerboard_edge(&self) -> Option<(u8, u8)> {
        let n = self.box_f_radius()?;
        if n == 0 {
            return None;
        }
        let mut edge: [Option<u8>; 2] = [None, None];
        for (i, s) in self.region.sites().iter().enumerate() {
            if s.norm_inf() != n {
                continue;
            }
            let p = parity(s) as usize;
            match edge[p] {
                None => edge[p] = Some(self.values[i]),
                Some(v) if v != self.values[i] => return None,
                _ => {}
            }
        }
        // d = 1 shells contain a single parity class
        match (edge[0], edge[1]) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        }
    }

    /// Membership in C_n^{(v0,v1)}: a homomorphism whose shell is the
    /// (v0, v1)-checkerboard.
    pub fn in_checkerboard_family(&self, h: &TargetGraph, edge: (u8, u8)) -> bool {
        let Some(n) = self.box_f_radius() else {
            return false;
        };
        if n == 0 || !self.is_homomorphism(h) {
            return false;
        }
        self.region
            .sites()
            .iter()
            .zip(&self.values)
            .filter(|(s, _)| s.norm_inf() == n)
            .all(|(s, &v)| v == if parity(s) == 0 { edge.0 } else { edge.1 })
    }

    /// Membership in the hat family: a homomorphism whose shell is constant on
    /// residue classes mod 2Z^d.
    pub fn in_hat_family(&self, h: &TargetGraph) -> bool {
        let Some(n) = self.box_f_radius() else {
            return false;
        };
        if n == 0 || !self.is_homomorphism(h) {
            return false;
        }
        let mut by_residue = std::collections::HashMap::new();
        for (s, &v) in self.region.sites().iter().zip(&self.values) {
            if s.norm_inf() != n {
                continue;
            }
            if *by_residue.entry(residue_mask(s)).or_insert(v) != v {
                return false;
            }
        }
        true
    }
}

/// Residue of a site mod 2Z^d as a bit mask (bit t set iff coordinate t is odd).
#[inline]
pub fn residue_mask(s: &Site) -> usize {
    s.coords()
        .iter()
        .enumerate()
        .fold(0, |m, (t, &c)| m | ((c.rem_euclid(2) as usize) << t))
}

/// Patterns sharing one region, kept in canonical (lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    region: Region,
    members: Vec<Vec<u8>>,
}

impl PatternSet {
    /// Builds a set from raw value vectors, sorting and deduplicating.
    pub fn from_values(region: Region, mut members: Vec<Vec<u8>>) -> Result<Self, HomError> {
        if let Some(m) = members.iter().find(|m| m.len() != region.len()) {
            return Err(HomError::PatternShape {
                expected: region.len(),
                got: m.len(),
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(PatternSet { region, members })
    }

    pub(crate) fn from_sorted(region: Region, members: Vec<Vec<u8>>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        PatternSet { region, members }
    }

    pub fn empty(region: Region) -> Self {
        PatternSet {
            region,
            members: Vec::new(),
        }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn count(&self) -> BigUint {
        BigUint::from(self.members.len())
    }

    pub fn raw(&self) -> &[Vec<u8>] {
        &self.members
    }

    pub fn get(&self, idx: usize) -> Pattern {
        Pattern {
            region: self.region.clone(),
            values: self.members[idx].clone(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Pattern> + '_ {
        (0..self.members.len()).map(|i| self.get(i))
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        p.region == self.region && self.members.binary_search(&p.values).is_ok()
    }

    pub fn is_subset_of(&self, other: &PatternSet) -> bool {
        self.region == other.region
            && self
                .members
                .iter()
                .all(|m| other.members.binary_search(m).is_ok())
    }
}
