//! Exact-cover backtracking over a finite region.
//!
//! The lexicographically first uncovered cell must be the least corner of the
//! tile covering it, so each step branches over the prototiles only.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::cover::{Placement, Rect, Tiling};
use super::tileset::TileSet;
use super::TilingError;
use crate::lattice::{Region, Site};
use crate::Budget;

struct Engine<'a> {
    f: &'a TileSet,
    region: &'a Region,
    shapes: Vec<Vec<Site>>,
    nodes: AtomicU64,
    stop: AtomicBool,
    limit: u64,
}

impl<'a> Engine<'a> {
    fn new(f: &'a TileSet, region: &'a Region, budget: Budget) -> Self {
        let d = f.dim();
        let shapes = f
            .protos()
            .iter()
            .map(|p| {
                Rect::new(Site::splat(d, -1), p.clone())
                    .cells()
            })
            .collect();
        Engine {
            f,
            region,
            shapes,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            limit: budget.0,
        }
    }

    /// Cell indices covered by prototile `p` anchored at `anchor`, if it fits.
    fn fit(&self, covered: &[bool], anchor: &Site, p: usize) -> Option<Vec<usize>> {
        self.shapes[p]
            .iter()
            .map(|rel| {
                self.region
                    .index_of(&anchor.add(rel))
                    .filter(|&i| !covered[i])
            })
            .collect()
    }

    fn tick(&self) -> bool {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit || self.stop.load(Ordering::Relaxed) {
            self.stop.store(true, Ordering::Relaxed);
            false
        } else {
            true
        }
    }

    fn run(
        &self,
        covered: &mut Vec<bool>,
        from: usize,
        stack: &mut Vec<Placement>,
        visit: &mut dyn FnMut(&[Placement]) -> bool,
    ) -> bool {
        let Some(i) = (from..covered.len()).find(|&i| !covered[i]) else {
            return visit(stack);
        };
        if !self.tick() {
            return false;
        }
        let anchor = self.region.site(i);
        for p in 0..self.f.len() {
            if let Some(cells) = self.fit(covered, &anchor, p) {
                for &c in &cells {
                    covered[c] = true;
                }
                stack.push(Placement::new(p, anchor.sub(&Site::splat(anchor.dim(), 1))));
                let go_on = self.run(covered, i + 1, stack, visit);
                stack.pop();
                for &c in &cells {
                    covered[c] = false;
                }
                if !go_on {
                    return false;
                }
            }
        }
        true
    }

    /// Runs the search split over the prototile placed at the first cell.
    fn split<T: Send>(
        &self,
        initial: &[bool],
        make: impl Fn() -> T + Sync,
        visit: impl Fn(&mut T, &[Placement]) -> bool + Sync,
    ) -> Result<Vec<T>, TilingError> {
        let Some(first) = initial.iter().position(|&c| !c) else {
            let mut acc = make();
            visit(&mut acc, &[]);
            return Ok(vec![acc]);
        };
        let anchor = self.region.site(first);
        let parts: Vec<T> = (0..self.f.len())
            .into_par_iter()
            .map(|p| {
                let mut acc = make();
                let mut covered = initial.to_vec();
                if let Some(cells) = self.fit(&covered, &anchor, p) {
                    for c in cells {
                        covered[c] = true;
                    }
                    let mut stack =
                        vec![Placement::new(p, anchor.sub(&Site::splat(anchor.dim(), 1)))];
                    self.run(&mut covered, first + 1, &mut stack, &mut |s| visit(&mut acc, s));
                }
                acc
            })
            .collect();
        if self.stop.load(Ordering::Relaxed) {
            return Err(TilingError::Budget(self.limit));
        }
        Ok(parts)
    }
}

fn check_dims(f: &TileSet, region: &Region) -> Result<(), TilingError> {
    if f.dim() != region.dim() {
        Err(TilingError::DimensionMismatch)
    } else {
        Ok(())
    }
}

/// Exact number of perfect tilings of `region`.
pub fn count_tilings(f: &TileSet, region: &Region, budget: Budget) -> Result<BigUint, TilingError> {
    check_dims(f, region)?;
    let engine = Engine::new(f, region, budget);
    let parts = engine.split(
        &vec![false; region.len()],
        || 0u128,
        |n, _| {
            *n += 1;
            true
        },
    )?;
    Ok(BigUint::from(parts.into_iter().sum::<u128>()))
}

/// All perfect tilings of `region`, in search order.
pub fn enumerate_tilings(
    f: &TileSet,
    region: &Region,
    budget: Budget,
) -> Result<Vec<Tiling>, TilingError> {
    check_dims(f, region)?;
    let engine = Engine::new(f, region, budget);
    let parts = engine.split(
        &vec![false; region.len()],
        Vec::new,
        |acc: &mut Vec<Vec<Placement>>, s| {
            acc.push(s.to_vec());
            true
        },
    )?;
    parts
        .into_iter()
        .flatten()
        .map(|p| Tiling::new(f.clone(), region.clone(), p))
        .collect()
}

/// First tiling of `region` extending the fixed placements, if any.
pub(crate) fn complete_tiling(
    f: &TileSet,
    region: &Region,
    fixed: &[Placement],
    budget: Budget,
) -> Result<Option<Tiling>, TilingError> {
    check_dims(f, region)?;
    let engine = Engine::new(f, region, budget);
    let mut covered = vec![false; region.len()];
    for p in fixed {
        for c in Rect::new(p.offset, f.proto(p.proto).to_vec()).cells() {
            let i = region.index_of(&c).ok_or(TilingError::OutOfRegion(c))?;
            if covered[i] {
                return Err(TilingError::Overlap(c));
            }
            covered[i] = true;
        }
    }
    let mut found: Option<Vec<Placement>> = None;
    let mut stack = Vec::new();
    engine.run(&mut covered, 0, &mut stack, &mut |s| {
        found = Some(s.to_vec());
        false
    });
    if found.is_none() && engine.stop.load(Ordering::Relaxed) {
        return Err(TilingError::Budget(budget.0));
    }
    found
        .map(|mut s| {
            s.extend_from_slice(fixed);
            Tiling::new(f.clone(), region.clone(), s)
        })
        .transpose()
}
