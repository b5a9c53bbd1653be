//! Depth-first enumeration of graph homomorphisms on a region.
//!
//! Sites are filled in canonical order; each site's candidate set is the
//! intersection of the neighbourhoods of its already-assigned and its fixed
//! neighbours. Work is split on the values of the first few sites and the
//! partial results are concatenated in prefix order, so the output never
//! depends on the number of worker threads.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::graph::TargetGraph;
use super::pattern::{residue_mask, PatternSet};
use super::HomError;
use crate::lattice::{parity, Region, Site};
use crate::Budget;

/// Per-site restrictions on top of the homomorphism condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraints {
    /// Forced value at a site.
    pub fixed: Vec<Option<u8>>,
    /// Site must equal an earlier site (by canonical index).
    pub tie: Vec<Option<usize>>,
}

impl Constraints {
    pub fn none(len: usize) -> Self {
        Constraints {
            fixed: vec![None; len],
            tie: vec![None; len],
        }
    }

    pub fn from_boundary(region: &Region, boundary: &[(Site, u8)]) -> Result<Self, HomError> {
        let mut c = Constraints::none(region.len());
        for (s, v) in boundary {
            let i = region.index_of(s).ok_or(HomError::BoundaryOutsideRegion(*s))?;
            match c.fixed[i] {
                Some(w) if w != *v => return Ok(Constraints::contradictory(region.len())),
                _ => c.fixed[i] = Some(*v),
            }
        }
        Ok(c)
    }

    fn contradictory(len: usize) -> Self {
        let mut c = Constraints::none(len);
        if len > 0 {
            c.fixed[0] = Some(u8::MAX);
        }
        c
    }

    /// Forces the outer shell of F_n to the (v0, v1)-checkerboard.
    pub fn force_checkerboard_shell(&mut self, region: &Region, radius: u32, edge: (u8, u8)) {
        for (i, s) in region.sites().iter().enumerate() {
            if s.norm_inf() == radius {
                self.fixed[i] = Some(if parity(s) == 0 { edge.0 } else { edge.1 });
            }
        }
    }

    /// Ties every shell site of F_n to the first shell site of its residue class mod 2.
    pub fn tie_shell_residues(&mut self, region: &Region, radius: u32) {
        let d = region.dim();
        let mut first: Vec<Option<usize>> = vec![None; 1 << d];
        for (i, s) in region.sites().iter().enumerate() {
            if s.norm_inf() != radius {
                continue;
            }
            let r = residue_mask(s);
            match first[r] {
                None => first[r] = Some(i),
                Some(j) => self.tie[i] = Some(j),
            }
        }
    }
}

struct Search<'a> {
    h: &'a TargetGraph,
    /// candidate mask from fixed values and fixed neighbours
    base: Vec<u64>,
    /// earlier, non-fixed neighbours
    earlier: Vec<Vec<usize>>,
    tie: Vec<Option<usize>>,
    len: usize,
}

enum Sink<'s> {
    Collect(&'s mut Vec<Vec<u8>>),
    Count(&'s mut u128),
}

impl<'a> Search<'a> {
    fn new(h: &'a TargetGraph, region: &Region, c: &Constraints) -> Option<Self> {
        let len = region.len();
        let nb = region.neighbor_indices();
        let all = h.all_mask();
        let mut base = vec![all; len];
        for i in 0..len {
            if let Some(v) = c.fixed[i] {
                if v as usize >= h.vertex_count() {
                    return None;
                }
                base[i] &= 1 << v;
            }
            for &j in &nb[i] {
                if let Some(v) = c.fixed[j] {
                    if v as usize >= h.vertex_count() {
                        return None;
                    }
                    base[i] &= h.neighbor_mask(v);
                }
            }
            if base[i] == 0 {
                return None;
            }
        }
        let earlier = (0..len)
            .map(|i| {
                nb[i]
                    .iter()
                    .copied()
                    .filter(|&j| j < i && c.fixed[j].is_none())
                    .collect()
            })
            .collect();
        Some(Search {
            h,
            base,
            earlier,
            tie: c.tie.clone(),
            len,
        })
    }

    #[inline]
    fn candidates(&self, i: usize, vals: &[u8]) -> u64 {
        let mut m = self.base[i];
        for &j in &self.earlier[i] {
            m &= self.h.neighbor_mask(vals[j]);
        }
        if let Some(j) = self.tie[i] {
            m &= 1 << vals[j];
        }
        m
    }

    /// Prefixes of length `depth`, in lexicographic order.
    fn prefixes(&self, depth: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for i in 0..depth.min(self.len) {
            let mut next = Vec::new();
            for p in out {
                let mut m = self.candidates(i, &p);
                while m != 0 {
                    let v = m.trailing_zeros() as u8;
                    m &= m - 1;
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }

    fn run(
        &self,
        vals: &mut Vec<u8>,
        sink: &mut Sink<'_>,
        nodes: &AtomicU64,
        limit: u64,
        stop: &AtomicBool,
    ) -> bool {
        let i = vals.len();
        if i == self.len {
            match sink {
                Sink::Collect(v) => v.push(vals.clone()),
                Sink::Count(c) => **c += 1,
            }
            return true;
        }
        if nodes.fetch_add(1, Ordering::Relaxed) >= limit || stop.load(Ordering::Relaxed) {
            stop.store(true, Ordering::Relaxed);
            return false;
        }
        let mut m = self.candidates(i, vals);
        while m != 0 {
            let v = m.trailing_zeros() as u8;
            m &= m - 1;
            vals.push(v);
            let ok = self.run(vals, sink, nodes, limit, stop);
            vals.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

const SPLIT_DEPTH: usize = 3;

/// All homomorphisms `region -> h` satisfying `c`, in canonical order.
pub fn enumerate_constrained(
    h: &TargetGraph,
    region: &Region,
    c: &Constraints,
    budget: Budget,
) -> Result<PatternSet, HomError> {
    let Some(search) = Search::new(h, region, c) else {
        return Ok(PatternSet::empty(region.clone()));
    };
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let parts: Vec<Vec<Vec<u8>>> = search
        .prefixes(SPLIT_DEPTH)
        .into_par_iter()
        .map(|p| {
            let mut out = Vec::new();
            let mut vals = p;
            vals.reserve(search.len);
            search.run(&mut vals, &mut Sink::Collect(&mut out), &nodes, budget.0, &stop);
            out
        })
        .collect();
    if stop.load(Ordering::Relaxed) {
        return Err(HomError::Budget(budget.0));
    }
    Ok(PatternSet::from_sorted(
        region.clone(),
        parts.into_iter().flatten().collect(),
    ))
}

/// Number of homomorphisms `region -> h` satisfying `c`, without storing them.
pub fn count_constrained(
    h: &TargetGraph,
    region: &Region,
    c: &Constraints,
    budget: Budget,
) -> Result<BigUint, HomError> {
    let Some(search) = Search::new(h, region, c) else {
        return Ok(BigUint::from(0u8));
    };
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let total: u128 = search
        .prefixes(SPLIT_DEPTH)
        .into_par_iter()
        .map(|p| {
            let mut count = 0u128;
            let mut vals = p;
            search.run(&mut vals, &mut Sink::Count(&mut count), &nodes, budget.0, &stop);
            count
        })
        .sum();
    if stop.load(Ordering::Relaxed) {
        return Err(HomError::Budget(budget.0));
    }
    Ok(BigUint::from(total))
}

/// Hom(region, H), optionally conditioned on a partial boundary assignment.
pub fn enumerate_hom(
    h: &TargetGraph,
    region: &Region,
    boundary: Option<&[(Site, u8)]>,
    budget: Budget,
) -> Result<PatternSet, HomError> {
    let c = match boundary {
        Some(b) => Constraints::from_boundary(region, b)?,
        None => Constraints::none(region.len()),
    };
    enumerate_constrained(h, region, &c, budget)
}

fn require_edge(h: &TargetGraph, e: (u8, u8)) -> Result<(), HomError> {
    let n = h.vertex_count();
    if (e.0 as usize) < n && (e.1 as usize) < n && h.adjacent(e.0, e.1) {
        Ok(())
    } else {
        Err(HomError::NotAnEdge(e.0, e.1))
    }
}

pub(crate) fn checkerboard_constraints(
    h: &TargetGraph,
    edge: (u8, u8),
    n: u32,
    d: usize,
) -> Result<(Region, Constraints), HomError> {
    require_edge(h, edge)?;
    if n == 0 {
        return Err(HomError::RadiusZero);
    }
    let region = Region::box_f(n, d)?;
    let mut c = Constraints::none(region.len());
    c.force_checkerboard_shell(&region, n, edge);
    Ok((region, c))
}

/// C_n^{(v0,v1)}: homomorphisms on F_n whose outer shell is the (v0, v1) checkerboard.
pub fn checkerboard_set(
    h: &TargetGraph,
    v0: u8,
    v1: u8,
    n: u32,
    d: usize,
    budget: Budget,
) -> Result<PatternSet, HomError> {
    let (region, c) = checkerboard_constraints(h, (v0, v1), n, d)?;
    enumerate_constrained(h, &region, &c, budget)
}

pub(crate) fn marker_constraints(
    h: &TargetGraph,
    (v0, v1, v2): (u8, u8, u8),
    n: u32,
    d: usize,
) -> Result<(Region, Constraints), HomError> {
    if v1 == v2 {
        return Err(HomError::MarkerColoursEqual);
    }
    require_edge(h, (v0, v1))?;
    require_edge(h, (v0, v2))?;
    if n == 0 {
        return Err(HomError::RadiusZero);
    }
    let region = Region::box_f(n + 1, d)?;
    let mut c = Constraints::none(region.len());
    c.force_checkerboard_shell(&region, n + 1, (v0, v1));
    c.force_checkerboard_shell(&region, n, (v0, v2));
    Ok((region, c))
}

/// The two-layer marker family on F_{n+1}: outer shell the (v0, v1)
/// checkerboard, the next shell the (v0, v2) checkerboard.
pub fn marker_set(
    h: &TargetGraph,
    v0: u8,
    v1: u8,
    v2: u8,
    n: u32,
    d: usize,
    budget: Budget,
) -> Result<PatternSet, HomError> {
    let (region, c) = marker_constraints(h, (v0, v1, v2), n, d)?;
    enumerate_constrained(h, &region, &c, budget)
}

pub(crate) fn hat_constraints(n: u32, d: usize) -> Result<(Region, Constraints), HomError> {
    if n == 0 {
        return Err(HomError::RadiusZero);
    }
    let region = Region::box_f(n, d)?;
    let mut c = Constraints::none(region.len());
    c.tie_shell_residues(&region, n);
    Ok((region, c))
}

/// Homomorphisms on F_n whose outer shell is 2Z^d-periodic.
pub fn hat_set(h: &TargetGraph, n: u32, d: usize, budget: Budget) -> Result<PatternSet, HomError> {
    let (region, c) = hat_constraints(n, d)?;
    enumerate_constrained(h, &region, &c, budget)
}
