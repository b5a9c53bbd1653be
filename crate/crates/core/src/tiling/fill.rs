use super::cover::{grid_fill, tile_rect, Placement, Rect, Tiling};
use super::partition::split_complement;
use super::tileset::TileSet;
use super::TilingError;
use crate::lattice::Site;

/// Union of the M-grid cubes of B_{nM} meeting `r`.
fn enlarge_to_grid(r: &Rect, m: i32) -> Rect {
    let d = r.dim();
    let mut off = Site::origin(d);
    let mut dims = Vec::with_capacity(d);
    for t in 0..d {
        let first = (r.lo(t) - 1).div_euclid(m);
        let last = (r.hi(t) - 1).div_euclid(m);
        off.set(t, first * m);
        dims.push(((last - first + 1) * m) as u32);
    }
    Rect::new(off, dims)
}

/// A perfect tiling of B_{nM} that reproduces the tiling W(i) of B_{kM} on
/// i + B_{kM} for every block (i, W(i)).
///
/// Each padded block i + B_{kM} + F_M must lie in B_{nM} and the padded
/// blocks must be pairwise disjoint. Every block is grown to the union of the
/// M-grid cubes it meets; the ring around W(i) is cut into boxes with one side
/// at least M and the rest multiples of M, each tiled by the simple-rectangle
/// construction. Untouched grid cubes are grid-tiled by the first prototile.
pub fn flexible_tile_fill(
    f: &TileSet,
    n: u32,
    k: u32,
    blocks: &[(Site, Tiling)],
) -> Result<Tiling, TilingError> {
    let d = f.dim();
    let m = f.m() as u32;
    let outer = Rect::cube(n * m, d);
    let block_rect = |i: &Site| Rect::new(*i, vec![k * m; d]);
    let padded = |i: &Site| {
        let mut off = *i;
        for t in 0..d {
            off.set(t, i.get(t) - m as i32);
        }
        Rect::new(off, vec![(k + 2) * m; d])
    };
    let want = Rect::cube(k * m, d).region()?;
    for (i, w) in blocks {
        if i.dim() != d || !outer.contains_rect(&padded(i)) {
            return Err(TilingError::BlockContainment(*i));
        }
        if w.region != want || w.tileset != *f {
            return Err(TilingError::BlockMismatch(*i));
        }
        w.validate()?;
    }
    for (a, (i, _)) in blocks.iter().enumerate() {
        for (j, _) in &blocks[a + 1..] {
            if padded(i).intersects(&padded(j)) {
                return Err(TilingError::Separation(*i, *j));
            }
        }
    }
    let enlarged: Vec<Rect> = blocks
        .iter()
        .map(|(i, _)| enlarge_to_grid(&padded(i), m as i32))
        .collect();
    for (a, ra) in enlarged.iter().enumerate() {
        for (b, rb) in enlarged.iter().enumerate().skip(a + 1) {
            if ra.intersects(rb) {
                return Err(TilingError::EnlargedOverlap(blocks[a].0, blocks[b].0));
            }
        }
    }

    let mut placements = Vec::new();
    for ((i, w), big) in blocks.iter().zip(&enlarged) {
        placements.extend(w.placements.iter().map(|p| Placement::new(p.proto, p.offset.add(i))));
        for piece in split_complement(big, &block_rect(i)) {
            placements.extend(tile_rect(f, &piece)?);
        }
    }
    for cube in Rect::new(Site::origin(d), vec![n; d]).cells() {
        let mut off = Site::origin(d);
        for t in 0..d {
            off.set(t, (cube.get(t) - 1) * m as i32);
        }
        let cell = Rect::new(off, vec![m; d]);
        if !enlarged.iter().any(|b| b.contains_rect(&cell)) {
            placements.extend(grid_fill(f, 0, &cell));
        }
    }
    Tiling::new(f.clone(), outer.region()?, placements)
}
