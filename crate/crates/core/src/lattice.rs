//! Geometry of finite subsets of Z^d: sites, boxes, shells and spacing.
//!
//! Every [`Region`] keeps its sites sorted lexicographically. That order is the
//! canonical order used by every enumeration in the crate, so pattern values
//! can be stored as plain vectors aligned with [`Region::sites`].

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported lattice dimension.
pub const MAX_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension {0} outside 1..={MAX_DIM}")]
    Dimension(usize),
    #[error("box side length must be positive")]
    EmptyBox,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

pub(crate) fn check_dim(d: usize) -> Result<(), LatticeError> {
    if d == 0 || d > MAX_DIM {
        Err(LatticeError::Dimension(d))
    } else {
        Ok(())
    }
}

/// A point of Z^d. Unused trailing coordinates are kept at zero so the derived
/// ordering is lexicographic on the live coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Site {
    coords: [i32; MAX_DIM],
    dim: u8,
}

impl Site {
    pub fn new(coords: &[i32]) -> Result<Self, LatticeError> {
        check_dim(coords.len())?;
        let mut c = [0; MAX_DIM];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Site {
            coords: c,
            dim: coords.len() as u8,
        })
    }

    pub fn origin(d: usize) -> Self {
        assert!(d >= 1 && d <= MAX_DIM, "dimension {d} out of range");
        Site {
            coords: [0; MAX_DIM],
            dim: d as u8,
        }
    }

    /// The standard basis vector e_{axis+1}.
    pub fn unit(d: usize, axis: usize) -> Self {
        let mut s = Site::origin(d);
        s.coords[axis] = 1;
        s
    }

    pub fn splat(d: usize, v: i32) -> Self {
        let mut s = Site::origin(d);
        for c in &mut s.coords[..d] {
            *c = v;
        }
        s
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    #[inline]
    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.dim as usize]
    }

    #[inline]
    pub fn get(&self, axis: usize) -> i32 {
        self.coords[axis]
    }

    #[inline]
    pub fn set(&mut self, axis: usize, v: i32) {
        debug_assert!(axis < self.dim());
        self.coords[axis] = v;
    }

    #[inline]
    pub fn add(&self, other: &Site) -> Site {
        debug_assert_eq!(self.dim, other.dim);
        let mut s = *self;
        for t in 0..self.dim() {
            s.coords[t] += other.coords[t];
        }
        s
    }

    #[inline]
    pub fn sub(&self, other: &Site) -> Site {
        debug_assert_eq!(self.dim, other.dim);
        let mut s = *self;
        for t in 0..self.dim() {
            s.coords[t] -= other.coords[t];
        }
        s
    }

    pub fn neg(&self) -> Site {
        let mut s = *self;
        for t in 0..self.dim() {
            s.coords[t] = -s.coords[t];
        }
        s
    }

    #[inline]
    pub fn step(&self, axis: usize, delta: i32) -> Site {
        let mut s = *self;
        s.coords[axis] += delta;
        s
    }

    pub fn is_origin(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    #[inline]
    pub fn norm_inf(&self) -> u32 {
        self.coords().iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    #[inline]
    pub fn norm_l1(&self) -> u32 {
        self.coords().iter().map(|c| c.unsigned_abs()).sum()
    }

    /// Nearest neighbours in the standard Cayley graph, in canonical order.
    pub fn neighbors(&self) -> impl Iterator<Item = Site> + '_ {
        (0..self.dim()).flat_map(move |t| [self.step(t, -1), self.step(t, 1)])
    }

    pub fn is_adjacent(&self, other: &Site) -> bool {
        self.dim == other.dim && self.sub(other).norm_l1() == 1
    }
}

impl fmt::Debug for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Site {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Site {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<i32> = Vec::deserialize(d)?;
        Site::new(&v).map_err(serde::de::Error::custom)
    }
}

/// Parity of the coordinate sum, in {0, 1}.
#[inline]
pub fn parity(site: &Site) -> u8 {
    (site.coords().iter().map(|&c| c as i64).sum::<i64>().rem_euclid(2)) as u8
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum RegionKind {
    /// {-n..n}^d
    BoxF { n: u32 },
    /// {1..n}^d
    BoxB { n: u32 },
    /// offset + {1..dims[0]} x ... x {1..dims[d-1]}
    Rectangle { dims: Vec<u32>, offset: Site },
    General,
}

/// Axis-aligned bounds used for arithmetic indexing of box-shaped regions.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BoxIndex {
    lo: Site,
    extents: [u32; MAX_DIM],
}

impl BoxIndex {
    fn index(&self, s: &Site) -> Option<usize> {
        let d = self.lo.dim();
        let mut idx = 0usize;
        for t in 0..d {
            let off = s.get(t) - self.lo.get(t);
            if off < 0 || off as u32 >= self.extents[t] {
                return None;
            }
            idx = idx * self.extents[t] as usize + off as usize;
        }
        Some(idx)
    }
}

/// A finite set of sites in canonical (lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    dim: usize,
    kind: RegionKind,
    sites: Vec<Site>,
    boxed: Option<BoxIndex>,
}

impl Region {
    fn from_bounds(lo: Site, extents: &[u32], kind: RegionKind) -> Region {
        let d = lo.dim();
        let mut ext = [1u32; MAX_DIM];
        ext[..d].copy_from_slice(extents);
        let total: usize = extents.iter().map(|&e| e as usize).product();
        let mut sites = Vec::with_capacity(total);
        if total > 0 {
            let mut cur = lo;
            'outer: loop {
                sites.push(cur);
                let mut t = d;
                loop {
                    if t == 0 {
                        break 'outer;
                    }
                    t -= 1;
                    let v = cur.get(t) + 1;
                    if v - lo.get(t) < ext[t] as i32 {
                        cur.set(t, v);
                        break;
                    }
                    cur.set(t, lo.get(t));
                }
            }
        }
        Region {
            dim: d,
            kind,
            sites,
            boxed: Some(BoxIndex { lo, extents: ext }),
        }
    }

    /// The centred box F_n = {-n..n}^d.
    pub fn box_f(n: u32, d: usize) -> Result<Region, LatticeError> {
        check_dim(d)?;
        let side = 2 * n + 1;
        Ok(Region::from_bounds(
            Site::splat(d, -(n as i32)),
            &vec![side; d],
            RegionKind::BoxF { n },
        ))
    }

    /// The corner box B_n = {1..n}^d.
    pub fn box_b(n: u32, d: usize) -> Result<Region, LatticeError> {
        check_dim(d)?;
        if n == 0 {
            return Err(LatticeError::EmptyBox);
        }
        Ok(Region::from_bounds(
            Site::splat(d, 1),
            &vec![n; d],
            RegionKind::BoxB { n },
        ))
    }

    /// offset + {1..dims[0]} x ... ; the shape of a placed rectangular tile.
    pub fn rectangle(dims: &[u32], offset: Site) -> Result<Region, LatticeError> {
        check_dim(dims.len())?;
        if offset.dim() != dims.len() {
            return Err(LatticeError::DimensionMismatch {
                expected: dims.len(),
                got: offset.dim(),
            });
        }
        if dims.iter().any(|&x| x == 0) {
            return Err(LatticeError::EmptyBox);
        }
        Ok(Region::from_bounds(
            offset.add(&Site::splat(dims.len(), 1)),
            dims,
            RegionKind::Rectangle {
                dims: dims.to_vec(),
                offset,
            },
        ))
    }

    pub fn from_sites<I: IntoIterator<Item = Site>>(d: usize, sites: I) -> Result<Region, LatticeError> {
        check_dim(d)?;
        let mut v: Vec<Site> = sites.into_iter().collect();
        if let Some(s) = v.iter().find(|s| s.dim() != d) {
            return Err(LatticeError::DimensionMismatch {
                expected: d,
                got: s.dim(),
            });
        }
        v.sort_unstable();
        v.dedup();
        Ok(Region {
            dim: d,
            kind: RegionKind::General,
            sites: v,
            boxed: None,
        })
    }

    /// The outer shell F_n \ F_{n-1} (F_0 itself when n = 0).
    pub fn shell(n: u32, d: usize) -> Result<Region, LatticeError> {
        let f = Region::box_f(n, d)?;
        Region::from_sites(d, f.sites.into_iter().filter(|s| s.norm_inf() == n))
    }

    /// F_outer \ F_inner.
    pub fn annulus(inner: u32, outer: u32, d: usize) -> Result<Region, LatticeError> {
        let f = Region::box_f(outer, d)?;
        Region::from_sites(d, f.sites.into_iter().filter(|s| s.norm_inf() > inner))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &RegionKind {
        &self.kind
    }

    #[inline]
    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    #[inline]
    pub fn site(&self, idx: usize) -> Site {
        self.sites[idx]
    }

    /// Position of `s` in canonical order.
    #[inline]
    pub fn index_of(&self, s: &Site) -> Option<usize> {
        if s.dim() != self.dim {
            return None;
        }
        match &self.boxed {
            Some(b) => b.index(s),
            None => self.sites.binary_search(s).ok(),
        }
    }

    #[inline]
    pub fn contains(&self, s: &Site) -> bool {
        self.index_of(s).is_some()
    }

    pub fn is_subset_of(&self, other: &Region) -> bool {
        self.sites.iter().all(|s| other.contains(s))
    }

    pub fn translate(&self, by: &Site) -> Region {
        let sites: Vec<Site> = self.sites.iter().map(|s| s.add(by)).collect();
        let kind = match &self.kind {
            RegionKind::Rectangle { dims, offset } => RegionKind::Rectangle {
                dims: dims.clone(),
                offset: offset.add(by),
            },
            RegionKind::BoxB { n } => RegionKind::Rectangle {
                dims: vec![*n; self.dim],
                offset: by.clone(),
            },
            _ => RegionKind::General,
        };
        Region {
            dim: self.dim,
            kind,
            sites,
            boxed: self.boxed.as_ref().map(|b| BoxIndex {
                lo: b.lo.add(by),
                extents: b.extents,
            }),
        }
    }

    /// For every site, the canonical indices of its neighbours inside the region.
    pub fn neighbor_indices(&self) -> Vec<Vec<usize>> {
        self.sites
            .iter()
            .map(|s| s.neighbors().filter_map(|t| self.index_of(&t)).collect())
            .collect()
    }

    /// Whether the induced subgraph of the Cayley graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.sites.is_empty() {
            return true;
        }
        let nb = self.neighbor_indices();
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &j in &nb[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == self.len()
    }

    /// Side lengths when the region is an axis-aligned box.
    pub fn box_extents(&self) -> Option<Vec<u32>> {
        self.boxed.as_ref().map(|b| b.extents[..self.dim].to_vec())
    }

    /// Lowest corner when the region is an axis-aligned box.
    pub fn box_low_corner(&self) -> Option<Site> {
        self.boxed.as_ref().map(|b| b.lo)
    }
}

/// Whether the translates `p + K`, `p` in `points`, are pairwise disjoint.
///
/// Two translates `i + K` and `j + K` meet iff `i - j` lies in the difference
/// set `K - K`, which is what is tested here.
pub fn is_k_spaced(points: &[Site], k: &Region) -> bool {
    let diffs: HashSet<Site> = k
        .sites()
        .iter()
        .flat_map(|a| k.sites().iter().map(move |b| a.sub(b)))
        .collect();
    for (a, p) in points.iter().enumerate() {
        for q in &points[a + 1..] {
            if p == q || diffs.contains(&p.sub(q)) {
                return false;
            }
        }
    }
    true
}

/// First pair of points whose K-translates intersect, if any.
pub fn first_spacing_violation(points: &[Site], k: &Region) -> Option<(Site, Site)> {
    let diffs: HashSet<Site> = k
        .sites()
        .iter()
        .flat_map(|a| k.sites().iter().map(move |b| a.sub(b)))
        .collect();
    for (a, p) in points.iter().enumerate() {
        for q in &points[a + 1..] {
            if p == q || diffs.contains(&p.sub(q)) {
                return Some((*p, *q));
            }
        }
    }
    None
}
