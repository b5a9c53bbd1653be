use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::cocycle::{checker_pattern, striped_pattern};
use super::HeightError;
use crate::homshift::{enumerate_hom, Pattern, TargetGraph};
use crate::lattice::Region;
use crate::Budget;

/// Decides whether some homomorphism on the box `region` agrees with every
/// fixed value, returning one when it exists.
///
/// Dynamic programming over canonical order; the state is the last
/// stride_0 values, which contains every earlier neighbour of the next site.
/// Time and memory grow with the number of distinct frontiers, so this is
/// meant for boxes a few dozen sites wide.
pub fn glue(
    h: &TargetGraph,
    region: &Region,
    fixed: &[Option<u8>],
    budget: Budget,
) -> Result<Option<Pattern>, HeightError> {
    let used = AtomicU64::new(0);
    glue_counted(h, region, fixed, budget, &used)
}

fn glue_counted(
    h: &TargetGraph,
    region: &Region,
    fixed: &[Option<u8>],
    budget: Budget,
    used: &AtomicU64,
) -> Result<Option<Pattern>, HeightError> {
    let ext = region.box_extents().ok_or(HeightError::NotBox)?;
    let lo = region.box_low_corner().ok_or(HeightError::NotBox)?;
    if fixed.len() != region.len() {
        return Err(HeightError::FixedShape {
            expected: region.len(),
            got: fixed.len(),
        });
    }
    let d = ext.len();
    let mut stride = vec![1usize; d];
    for t in (0..d.saturating_sub(1)).rev() {
        stride[t] = stride[t + 1] * ext[t + 1] as usize;
    }
    let width = stride[0];
    let q = h.vertex_count() as u8;
    // the frontier is packed into a u128, `bits` per value, newest lowest
    let bits = (u8::BITS - (q.max(2) - 1).leading_zeros()) as usize;
    if width * bits > 128 {
        return Err(HeightError::FrontierTooWide(width));
    }
    let mask: u128 = if width * bits == 128 { u128::MAX } else { (1u128 << (width * bits)) - 1 };
    let value_at = |st: u128, back: usize| ((st >> ((back - 1) * bits)) as u64 & ((1 << bits) - 1)) as u8;

    let mut states: Vec<u128> = vec![0];
    // layers[i][k] = (parent index in layer i-1, value at site i)
    let mut layers: Vec<Vec<(u32, u8)>> = Vec::with_capacity(region.len());
    for (i, s) in region.sites().iter().enumerate() {
        let lower: Vec<usize> = (0..d)
            .filter(|&t| s.get(t) > lo.get(t))
            .map(|t| stride[t])
            .collect();
        let mut next: Vec<u128> = Vec::new();
        let mut index: HashMap<u128, u32> = HashMap::new();
        let mut layer = Vec::new();
        for (p, &st) in states.iter().enumerate() {
            let mut allowed = h.all_mask();
            for &back in &lower {
                allowed &= h.neighbor_mask(value_at(st, back));
            }
            if let Some(v) = fixed[i] {
                allowed &= 1u64.checked_shl(v as u32).unwrap_or(0);
            }
            for v in (0..q).filter(|&v| allowed >> v & 1 == 1) {
                let ns = ((st << bits) | v as u128) & mask;
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(ns) {
                    e.insert(next.len() as u32);
                    next.push(ns);
                    layer.push((p as u32, v));
                }
            }
        }
        let total = used.fetch_add(next.len() as u64, Ordering::Relaxed) + next.len() as u64;
        if total > budget.0 {
            return Err(HeightError::Budget(budget.0));
        }
        if next.is_empty() {
            return Ok(None);
        }
        states = next;
        layers.push(layer);
    }
    let mut vals = vec![0u8; region.len()];
    let mut k = 0u32;
    for i in (0..region.len()).rev() {
        let (p, v) = layers[i][k as usize];
        vals[i] = v;
        k = p;
    }
    Ok(Some(
        Pattern::new(region.clone(), vals).expect("one value per site"),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UfpMode {
    /// One pair for H = K3: stripes on F_n against a checkerboard annulus.
    Targeted,
    /// Every inner pattern against every globally extendable annulus pattern.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UfpVerdict {
    Ok { pairs_checked: u64 },
    /// No point of the shift sees `inner` on F_n and `outer` on the annulus.
    Counterexample { inner: Pattern, outer: Pattern },
}

impl UfpVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, UfpVerdict::Ok { .. })
    }
}

/// Tests the uniform filling property at gap `m` on F_n: every pattern on
/// F_n glues with every pattern on F_{n+m+buffer} \ F_{n+m}.
pub fn ufp_window_check(
    h: &TargetGraph,
    m: u32,
    n: u32,
    buffer: u32,
    d: usize,
    mode: UfpMode,
    budget: Budget,
) -> Result<UfpVerdict, HeightError> {
    if buffer == 0 {
        return Err(HeightError::BufferZero);
    }
    let outer_r = n + m + buffer;
    let outer = Region::box_f(outer_r, d)?;
    let inner = Region::box_f(n, d)?;
    let annulus = Region::annulus(n + m, outer_r, d)?;
    let used = AtomicU64::new(0);

    let fixed_for = |x: &Pattern, y: &Pattern| -> Vec<Option<u8>> {
        outer
            .sites()
            .iter()
            .map(|s| x.get(s).or_else(|| y.get(s)))
            .collect()
    };

    match mode {
        UfpMode::Targeted => {
            if !is_k3(h) {
                return Err(HeightError::NotK3);
            }
            let x = striped_pattern(&inner);
            let y = checker_pattern(&annulus);
            Ok(match glue_counted(h, &outer, &fixed_for(&x, &y), budget, &used)? {
                Some(_) => UfpVerdict::Ok { pairs_checked: 1 },
                None => UfpVerdict::Counterexample { inner: x, outer: y },
            })
        }
        UfpMode::Exhaustive => {
            let xs = enumerate_hom(h, &inner, None, budget)?;
            let ys = enumerate_hom(h, &annulus, None, budget)?;
            let pairs = (xs.len() as u64).saturating_mul(ys.len() as u64);
            if pairs.saturating_mul(outer.len() as u64) > budget.0 {
                return Err(HeightError::Budget(budget.0));
            }
            // y must be the restriction of a point of the shift, so it has to
            // extend over the hole with some inner pattern.
            let found = ys.raw().par_iter().find_map_first(|yv| {
                let y = Pattern::new(annulus.clone(), yv.clone()).expect("enumerated on annulus");
                let free = outer.sites().iter().map(|s| y.get(s)).collect::<Vec<_>>();
                match glue_counted(h, &outer, &free, budget, &used) {
                    Err(e) => return Some(Err(e)),
                    Ok(None) => return None,
                    Ok(Some(_)) => {}
                }
                for x in xs.iter() {
                    match glue_counted(h, &outer, &fixed_for(&x, &y), budget, &used) {
                        Err(e) => return Some(Err(e)),
                        Ok(None) => return Some(Ok((x, y))),
                        Ok(Some(_)) => {}
                    }
                }
                None
            });
            match found {
                None => Ok(UfpVerdict::Ok {
                    pairs_checked: pairs,
                }),
                Some(Ok((inner, outer))) => Ok(UfpVerdict::Counterexample { inner, outer }),
                Some(Err(e)) => Err(e),
            }
        }
    }
}

fn is_k3(h: &TargetGraph) -> bool {
    h.vertex_count() == 3 && h.edges().len() == 3 && (0..3).all(|v| !h.adjacent(v, v))
}
