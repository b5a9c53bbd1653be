use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::HeightError;
use crate::homshift::Pattern;
use crate::lattice::{parity, Region, Site};

/// Integer lift of a proper 3-colouring, normalised to 0 at `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightField {
    pub region: Region,
    pub base: Site,
    pub heights: Vec<i64>,
}

impl HeightField {
    pub fn get(&self, s: &Site) -> Option<i64> {
        self.region.index_of(s).map(|i| self.heights[i])
    }

    /// Height per unit displacement, max of |h(i) - h(base)| / ‖i - base‖₁
    /// over the sites farthest from the base. A heuristic in [0, 1]; near
    /// sites are skipped since any colouring has slope 1 across one edge.
    pub fn slope_estimate(&self) -> f64 {
        let h0 = self.get(&self.base).unwrap_or(0);
        let dist: Vec<u32> = self.region.sites().iter().map(|s| s.sub(&self.base).norm_l1()).collect();
        let far = dist.iter().copied().max().unwrap_or(0);
        if far == 0 {
            return 0.0;
        }
        dist.iter()
            .zip(&self.heights)
            .filter(|(&d, _)| d == far)
            .map(|(_, h)| (h - h0).abs() as f64 / far as f64)
            .fold(0.0, f64::max)
    }
}

/// +1 when the colour steps up by one mod 3, -1 when it steps down.
#[inline]
fn increment(from: u8, to: u8) -> i64 {
    match (to as i64 - from as i64).rem_euclid(3) {
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

fn check_proper(x: &Pattern) -> Result<(), HeightError> {
    let r = x.region();
    if let Some(i) = x.values().iter().position(|&v| v > 2) {
        let s = r.site(i);
        return Err(HeightError::NotProper(s, s));
    }
    for (i, s) in r.sites().iter().enumerate() {
        for t in 0..s.dim() {
            let nb = s.step(t, 1);
            if let Some(j) = r.index_of(&nb) {
                if x.at(i) == x.at(j) {
                    return Err(HeightError::NotProper(*s, nb));
                }
            }
        }
    }
    Ok(())
}

/// The height cocycle c(x, ·) - c(x, base), built by breadth-first search
/// and then checked on every edge of the region.
pub fn height_cocycle(x: &Pattern, base: &Site) -> Result<HeightField, HeightError> {
    check_proper(x)?;
    let r = x.region();
    let b = r.index_of(base).ok_or(HeightError::BaseOutside(*base))?;
    let nb = r.neighbor_indices();
    let mut h: Vec<Option<i64>> = vec![None; r.len()];
    h[b] = Some(0);
    let mut queue = VecDeque::from([b]);
    while let Some(i) = queue.pop_front() {
        let hi = h[i].expect("queued sites have heights");
        for &j in &nb[i] {
            let want = hi + increment(x.at(i), x.at(j));
            match h[j] {
                None => {
                    h[j] = Some(want);
                    queue.push_back(j);
                }
                Some(hj) if hj != want => return Err(HeightError::Conflict(r.site(j))),
                _ => {}
            }
        }
    }
    let heights = h
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or(HeightError::Disconnected(r.site(i))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HeightField {
        region: r.clone(),
        base: *base,
        heights,
    })
}

/// A site whose height exceeds its l1 distance from the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LipschitzViolation {
    pub site: Site,
    pub height: i64,
    pub bound: u32,
}

/// Checks |h(i) - h(base)| ≤ ‖i - base‖₁ for every site.
pub fn lipschitz_check(h: &HeightField) -> Option<LipschitzViolation> {
    let h0 = h.get(&h.base).unwrap_or(0);
    h.region
        .sites()
        .iter()
        .zip(&h.heights)
        .find_map(|(s, &v)| {
            let bound = s.sub(&h.base).norm_l1();
            ((v - h0).unsigned_abs() > bound as u64).then_some(LipschitzViolation {
                site: *s,
                height: v - h0,
                bound,
            })
        })
}

/// Raster-order sampler: each site takes a uniformly chosen colour among
/// those not used by its already coloured neighbours.
///
/// Not uniform over colourings. In d ≤ 2 every site has at most two earlier
/// neighbours, so the sampler never gets stuck there.
pub fn sample_coloring(region: &Region, seed: u64) -> Result<Pattern, HeightError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nb = region.neighbor_indices();
    let mut vals = vec![0u8; region.len()];
    for i in 0..region.len() {
        let mut free = 0b111u8;
        for &j in nb[i].iter().filter(|&&j| j < i) {
            free &= !(1 << vals[j]);
        }
        let k = free.count_ones();
        if k == 0 {
            return Err(HeightError::Stuck(region.site(i)));
        }
        let pick = rng.gen_range(0..k);
        vals[i] = (0..3u8)
            .filter(|c| free >> c & 1 == 1)
            .nth(pick as usize)
            .expect("pick < number of free colours");
    }
    Ok(Pattern::new(region.clone(), vals).expect("one value per site"))
}

/// x_i = (i_1 + ... + i_d) mod 3: heights grow at the maximal rate.
pub fn striped_pattern(region: &Region) -> Pattern {
    Pattern::from_fn(region.clone(), |s| {
        s.coords().iter().map(|&c| c as i64).sum::<i64>().rem_euclid(3) as u8
    })
}

/// x_i = parity(i): heights stay in {0, 1}.
pub fn checker_pattern(region: &Region) -> Pattern {
    Pattern::from_fn(region.clone(), parity)
}

/// max over samples y, y' and displacements i of c(y', i) - c(y, i), with
/// heights based at the origin.
pub fn quasiflat_gap(samples: &[Pattern], displacements: &[Site]) -> Result<i64, HeightError> {
    let Some(first) = samples.first() else {
        return Ok(0);
    };
    let d = first.region().dim();
    let origin = Site::origin(d);
    let fields = samples
        .iter()
        .map(|x| {
            if x.region() != first.region() {
                return Err(HeightError::RegionMismatch);
            }
            height_cocycle(x, &origin)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut gap = 0;
    for i in displacements {
        let hs: Vec<i64> = fields
            .iter()
            .map(|f| f.get(i).ok_or(HeightError::BaseOutside(*i)))
            .collect::<Result<_, _>>()?;
        let hi = hs.iter().max().expect("nonempty");
        let lo = hs.iter().min().expect("nonempty");
        gap = gap.max(hi - lo);
    }
    Ok(gap)
}
