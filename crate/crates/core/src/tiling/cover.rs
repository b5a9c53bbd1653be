use std::collections::HashSet;

use num_bigint::BigUint;

use super::frobenius::frobenius_decompose;
use super::tileset::TileSet;
use super::TilingError;
use crate::lattice::{Region, Site};

/// A prototile placed to cover offset + T_proto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub offset: Site,
    pub proto: usize,
}

impl Placement {
    pub fn new(proto: usize, offset: Site) -> Self {
        Placement { offset, proto }
    }
}

/// An axis-parallel box offset + {1..dims[0]} x ... x {1..dims[d-1]}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rect {
    pub offset: Site,
    pub dims: Vec<u32>,
}

impl Rect {
    pub fn new(offset: Site, dims: Vec<u32>) -> Self {
        Rect { offset, dims }
    }

    /// B_side = {1..side}^d.
    pub fn cube(side: u32, d: usize) -> Self {
        Rect::new(Site::origin(d), vec![side; d])
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn lo(&self, t: usize) -> i32 {
        self.offset.get(t) + 1
    }

    pub fn hi(&self, t: usize) -> i32 {
        self.offset.get(t) + self.dims[t] as i32
    }

    pub fn volume(&self) -> u64 {
        self.dims.iter().map(|&s| s as u64).product()
    }

    pub fn region(&self) -> Result<Region, TilingError> {
        Ok(Region::rectangle(&self.dims, self.offset)?)
    }

    pub fn contains(&self, s: &Site) -> bool {
        (0..self.dim()).all(|t| self.lo(t) <= s.get(t) && s.get(t) <= self.hi(t))
    }

    pub fn contains_rect(&self, o: &Rect) -> bool {
        (0..self.dim()).all(|t| self.lo(t) <= o.lo(t) && o.hi(t) <= self.hi(t))
    }

    pub fn intersects(&self, o: &Rect) -> bool {
        (0..self.dim()).all(|t| self.lo(t) <= o.hi(t) && o.lo(t) <= self.hi(t))
    }

    /// Cells in lexicographic order.
    pub fn cells(&self) -> Vec<Site> {
        let d = self.dim();
        let mut out = Vec::with_capacity(self.volume() as usize);
        let mut cur: Vec<i32> = (0..d).map(|t| self.lo(t)).collect();
        if self.dims.iter().any(|&s| s == 0) {
            return out;
        }
        loop {
            out.push(Site::new(&cur).expect("valid dimension"));
            let mut t = d;
            loop {
                if t == 0 {
                    return out;
                }
                t -= 1;
                if cur[t] < self.hi(t) {
                    cur[t] += 1;
                    break;
                }
                cur[t] = self.lo(t);
            }
        }
    }

    /// One side is at least `n` and the others are multiples of `m`.
    pub fn side_condition(&self, n: u64, m: u64) -> bool {
        (0..self.dim()).any(|t| {
            self.dims[t] as u64 >= n
                && (0..self.dim()).all(|s| s == t || self.dims[s] as u64 % m == 0)
        })
    }
}

/// A finite list of placements claimed to tile `region` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    pub tileset: TileSet,
    pub region: Region,
    pub placements: Vec<Placement>,
}

impl Tiling {
    /// Builds and validates; placements are stored in canonical order.
    pub fn new(
        tileset: TileSet,
        region: Region,
        mut placements: Vec<Placement>,
    ) -> Result<Self, TilingError> {
        placements.sort_unstable();
        let t = Tiling {
            tileset,
            region,
            placements,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn footprint(&self, p: &Placement) -> Rect {
        Rect::new(p.offset, self.tileset.proto(p.proto).to_vec())
    }

    /// Exact cover check: every tile inside the region, no overlaps, no gaps.
    pub fn validate(&self) -> Result<(), TilingError> {
        let mut covered = vec![false; self.region.len()];
        for p in &self.placements {
            if p.proto >= self.tileset.len() {
                return Err(TilingError::BadPrototileIndex(p.proto));
            }
            if p.offset.dim() != self.region.dim() {
                return Err(TilingError::OutOfRegion(p.offset));
            }
            for c in self.footprint(p).cells() {
                let i = self.region.index_of(&c).ok_or(TilingError::OutOfRegion(c))?;
                if covered[i] {
                    return Err(TilingError::Overlap(c));
                }
                covered[i] = true;
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(i) => Err(TilingError::Uncovered(self.region.site(i))),
            None => Ok(()),
        }
    }

    /// For each region cell: the covering prototile and the cell's position
    /// inside it.
    pub fn labels(&self) -> Vec<(usize, Site)> {
        let mut out = vec![(usize::MAX, Site::origin(self.region.dim())); self.region.len()];
        for p in &self.placements {
            for c in self.footprint(p).cells() {
                if let Some(i) = self.region.index_of(&c) {
                    out[i] = (p.proto, c.sub(&p.offset));
                }
            }
        }
        out
    }

    /// True when every placement of `other`, shifted by `by`, occurs here.
    pub fn contains_translate(&self, other: &Tiling, by: &Site) -> bool {
        let own: HashSet<&Placement> = self.placements.iter().collect();
        other.placements.iter().all(|p| {
            own.contains(&Placement {
                offset: p.offset.add(by),
                proto: p.proto,
            })
        })
    }
}

/// Tiles `rect` by the aligned grid of one prototile.
pub(crate) fn grid_fill(f: &TileSet, proto: usize, rect: &Rect) -> Vec<Placement> {
    let side = f.proto(proto);
    let d = rect.dim();
    debug_assert!((0..d).all(|t| rect.dims[t] % side[t] == 0));
    let counts: Vec<u32> = (0..d).map(|t| rect.dims[t] / side[t]).collect();
    Rect::new(Site::origin(d), counts)
        .cells()
        .into_iter()
        .map(|c| {
            let mut off = rect.offset;
            for t in 0..d {
                off.set(t, rect.offset.get(t) + (c.get(t) - 1) * side[t] as i32);
            }
            Placement::new(proto, off)
        })
        .collect()
}

/// Placements tiling `rect` when its sides satisfy either condition of the
/// simple-rectangle lemma: all multiples of M, or one side at least M and the
/// rest multiples of M.
pub(crate) fn tile_rect(f: &TileSet, rect: &Rect) -> Result<Vec<Placement>, TilingError> {
    let m = f.m();
    let odd: Vec<usize> = (0..rect.dim())
        .filter(|&t| rect.dims[t] as u64 % m != 0)
        .collect();
    match odd.as_slice() {
        [] => Ok(grid_fill(f, 0, rect)),
        [t] if rect.dims[*t] as u64 >= m => {
            let t = *t;
            if !f.coprime_axes()[t] {
                return Err(TilingError::NotCoprime);
            }
            let lengths: Vec<u32> = f.protos().iter().map(|p| p[t]).collect();
            let coeffs = frobenius_decompose(&lengths, rect.dims[t])?
                .ok_or(TilingError::NotRepresentable(rect.dims[t]))?;
            let mut out = Vec::new();
            let mut cursor = rect.offset.get(t);
            let mut used = HashSet::new();
            for (j, p) in f.protos().iter().enumerate() {
                if !used.insert(p[t]) {
                    continue;
                }
                let Some(&c) = coeffs.get(&p[t]) else {
                    continue;
                };
                let mut off = rect.offset;
                off.set(t, cursor);
                let mut dims = rect.dims.clone();
                dims[t] = c * p[t];
                out.extend(grid_fill(f, j, &Rect::new(off, dims)));
                cursor += (c * p[t]) as i32;
            }
            Ok(out)
        }
        _ => Err(TilingError::NotCertified(rect.dims.clone())),
    }
}

/// A perfect tiling of B_dims = {1..dims[0]} x ... under either condition of
/// the simple-rectangle lemma.
pub fn tile_rectangle(f: &TileSet, dims: &[u32]) -> Result<Tiling, TilingError> {
    if dims.len() != f.dim() {
        return Err(TilingError::DimensionMismatch);
    }
    let rect = Rect::new(Site::origin(dims.len()), dims.to_vec());
    let placements = tile_rect(f, &rect)?;
    Tiling::new(f.clone(), rect.region()?, placements)
}

/// Number of M-cube grid tilings of B_dims, |F|^(number of M-cubes).
pub fn variant_count(f: &TileSet, dims: &[u32]) -> Result<BigUint, TilingError> {
    let cubes = cube_grid(f, dims)?.len();
    Ok(BigUint::from(f.len()).pow(cubes as u32))
}

fn cube_grid(f: &TileSet, dims: &[u32]) -> Result<Vec<Rect>, TilingError> {
    let m = f.m();
    if dims.len() != f.dim() {
        return Err(TilingError::DimensionMismatch);
    }
    if dims.iter().any(|&s| s == 0 || s as u64 % m != 0) {
        return Err(TilingError::NotCertified(dims.to_vec()));
    }
    let m = m as u32;
    let counts: Vec<u32> = dims.iter().map(|&s| s / m).collect();
    let d = dims.len();
    Ok(Rect::new(Site::origin(d), counts)
        .cells()
        .into_iter()
        .map(|c| {
            let mut off = Site::origin(d);
            for t in 0..d {
                off.set(t, (c.get(t) - 1) * m as i32);
            }
            Rect::new(off, vec![m; d])
        })
        .collect())
}

/// The M-cube variants of B_dims (all sides multiples of M): each cube is
/// grid-tiled by a prototile chosen independently, cube choices enumerated
/// in mixed-radix order with the first cube varying slowest.
pub fn tile_rectangle_variants<'a>(
    f: &'a TileSet,
    dims: &[u32],
) -> Result<impl Iterator<Item = Tiling> + 'a, TilingError> {
    let cubes = cube_grid(f, dims)?;
    let region = Rect::new(Site::origin(dims.len()), dims.to_vec()).region()?;
    let q = f.len();
    let mut code: Option<Vec<usize>> = Some(vec![0; cubes.len()]);
    Ok(std::iter::from_fn(move || {
        let cur = code.take()?;
        let placements = cubes
            .iter()
            .zip(&cur)
            .flat_map(|(c, &p)| grid_fill(f, p, c))
            .collect();
        let mut next = cur;
        let mut t = next.len();
        code = loop {
            if t == 0 {
                break None;
            }
            t -= 1;
            next[t] += 1;
            if next[t] < q {
                break Some(next);
            }
            next[t] = 0;
        };
        Some(Tiling::new(f.clone(), region.clone(), placements).expect("grid variants are exact covers"))
    }))
}
