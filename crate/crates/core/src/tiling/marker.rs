use super::cover::{grid_fill, Placement, Rect, Tiling};
use super::cover::tile_rectangle_variants;
use super::partition::split_complement;
use super::search::complete_tiling;
use super::tileset::{lcm, TileSet};
use super::TilingError;
use crate::homshift::{first_consistent_overlap, Overlap};
use crate::lattice::Site;
use crate::Budget;

/// A marker tiling of the centred box B_s inside F_n: two rings of
/// thickness `ring`, the outer tiled by `outer_proto` alone and the next by
/// `inner_proto` alone, plus a tiling of B_S (S ≥ 2n+1) extending it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerTiling {
    pub outer_proto: usize,
    pub inner_proto: usize,
    pub ring: u32,
    pub tiling: Tiling,
    pub extension: Tiling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerTilingFamily {
    pub tileset: TileSet,
    pub n: u32,
    /// s = M⌊(2n+1)/M⌋
    pub side: u32,
    /// S = M⌈(2n+1)/M⌉
    pub outer_side: u32,
    pub members: Vec<MarkerTiling>,
}

/// Lower corner offset placing B_side approximately centred on the origin.
pub fn centred_offset(side: u32, d: usize) -> Site {
    Site::splat(d, -(((side + 1) / 2) as i32))
}

/// Smallest multiple of the lcm of both tiles' sides with M | 4t.
fn ring_thickness(f: &TileSet, a: usize, b: usize) -> u64 {
    let l = f.proto(a).iter().chain(f.proto(b)).fold(1, |acc, &s| lcm(acc, s as u64));
    let m = f.m();
    (1..).map(|j| j * l).find(|t| (4 * t) % m == 0).expect("t = M works")
}

fn ring_fill(f: &TileSet, proto: usize, outer: &Rect, inner: &Rect) -> Vec<Placement> {
    split_complement(outer, inner)
        .iter()
        .flat_map(|piece| grid_fill(f, proto, piece))
        .collect()
}

fn shrink(r: &Rect, by: u32) -> Rect {
    let d = r.dim();
    let mut off = r.offset;
    for t in 0..d {
        off.set(t, off.get(t) + by as i32);
    }
    Rect::new(off, r.dims.iter().map(|&s| s - 2 * by).collect())
}

/// The marker tilings for window F_n: for each ordered pair of distinct
/// prototiles, the two single-tile rings around up to `max_interiors` M-cube
/// interior tilings, the first of which is the plain grid fill.
///
/// Members without a tiling of B_S extending them are dropped.
pub fn marker_tiling_set(
    f: &TileSet,
    n: u32,
    max_interiors: usize,
    budget: Budget,
) -> Result<MarkerTilingFamily, TilingError> {
    if f.len() < 2 {
        return Err(TilingError::TrivialTileSet);
    }
    if !f.is_coprime() {
        return Err(TilingError::NotCoprime);
    }
    let d = f.dim();
    let m = f.m();
    let w = 2 * n as u64 + 1;
    let side = (m * (w / m)) as u32;
    let outer_side = (m * w.div_ceil(m)) as u32;
    let box_rect = Rect::new(centred_offset(side, d), vec![side; d]);
    let big = Rect::new(centred_offset(outer_side, d), vec![outer_side; d]);
    let box_region = box_rect.region()?;
    let big_region = big.region()?;

    let mut members = Vec::new();
    for a in 0..f.len() {
        for b in 0..f.len() {
            if a == b {
                continue;
            }
            let t = ring_thickness(f, a, b) as u32;
            if side < 4 * t || side == 0 {
                continue;
            }
            let mid = shrink(&box_rect, t);
            let core = shrink(&box_rect, 2 * t);
            let mut rings = ring_fill(f, a, &box_rect, &mid);
            rings.extend(ring_fill(f, b, &mid, &core));
            let interiors: Vec<Vec<Placement>> = if core.dims[0] == 0 {
                vec![Vec::new()]
            } else {
                tile_rectangle_variants(f, &core.dims)?
                    .take(max_interiors.max(1))
                    .map(|t| {
                        t.placements
                            .iter()
                            .map(|p| Placement::new(p.proto, p.offset.add(&core.offset)))
                            .collect()
                    })
                    .collect()
            };
            for inner in interiors {
                let mut placements = rings.clone();
                placements.extend(inner);
                let tiling = Tiling::new(f.clone(), box_region.clone(), placements)?;
                if let Some(extension) =
                    complete_tiling(f, &big_region, &tiling.placements, budget)?
                {
                    members.push(MarkerTiling {
                        outer_proto: a,
                        inner_proto: b,
                        ring: t,
                        tiling,
                        extension,
                    });
                }
            }
        }
    }
    if members.is_empty() {
        return Err(TilingError::NoMarkerPair(n));
    }
    Ok(MarkerTilingFamily {
        tileset: f.clone(),
        n,
        side,
        outer_side,
        members,
    })
}

impl MarkerTilingFamily {
    /// Largest offset still checked for consistent overlaps: anything up to
    /// s - t - 1 keeps part of a ring inside the other copy.
    pub fn overlap_radius(&self) -> u32 {
        let t = self.members.iter().map(|m| m.ring).min().unwrap_or(0);
        self.side.saturating_sub(t + 1)
    }

    /// First pair of members consistent at an offset within the overlap radius.
    pub fn find_overlap(&self) -> Option<Overlap> {
        let labels: Vec<Vec<(usize, Site)>> =
            self.members.iter().map(|m| m.tiling.labels()).collect();
        let region = &self.members.first()?.tiling.region;
        first_consistent_overlap(region, &labels, self.overlap_radius())
    }
}
