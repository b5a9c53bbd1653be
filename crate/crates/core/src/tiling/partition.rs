use super::cover::Rect;
use super::TilingError;
use crate::lattice::Site;

/// Partitions `outer \ inner` (inner ⊆ outer) into boxes by cutting along
/// the two faces of `inner` normal to the last axis, then recursing on the
/// middle slab with the remaining axes.
pub(crate) fn split_complement(outer: &Rect, inner: &Rect) -> Vec<Rect> {
    debug_assert!(outer.contains_rect(inner));
    let mut out = Vec::new();
    split_axes(outer.clone(), inner, outer.dim(), &mut out);
    out
}

fn split_axes(mut slab: Rect, inner: &Rect, axes: usize, out: &mut Vec<Rect>) {
    if axes == 0 {
        return;
    }
    let t = axes - 1;
    let below = inner.lo(t) - slab.lo(t);
    if below > 0 {
        let mut dims = slab.dims.clone();
        dims[t] = below as u32;
        out.push(Rect::new(slab.offset, dims));
    }
    let above = slab.hi(t) - inner.hi(t);
    if above > 0 {
        let mut off = slab.offset;
        off.set(t, inner.hi(t));
        let mut dims = slab.dims.clone();
        dims[t] = above as u32;
        out.push(Rect::new(off, dims));
    }
    slab.offset.set(t, inner.offset.get(t));
    slab.dims[t] = inner.dims[t];
    split_axes(slab, inner, t, out);
}

/// Partition of B_{(n+n')M} \ (offset + B_{nM}) into boxes with one side at
/// least N and the others multiples of M.
///
/// Requires offset + B_{nM} + F_N ⊆ B_{(n+n')M}; the first violated face is
/// reported as (axis, upper).
pub fn partition_complement(
    n: u32,
    n_prime: u32,
    big_n: u32,
    m: u32,
    offset: &Site,
) -> Result<Vec<Rect>, TilingError> {
    let d = offset.dim();
    let outer = Rect::cube((n + n_prime) * m, d);
    let inner = Rect::new(*offset, vec![n * m; d]);
    for t in 0..d {
        if inner.lo(t) - (big_n as i32) < outer.lo(t) {
            return Err(TilingError::Face { axis: t, upper: false });
        }
        if inner.hi(t) + big_n as i32 > outer.hi(t) {
            return Err(TilingError::Face { axis: t, upper: true });
        }
    }
    Ok(split_complement(&outer, &inner))
}
