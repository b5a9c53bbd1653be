//! Column transfer matrices for hom-shifts on strips, boxes and tori.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::EntropyError;
use crate::homshift::{count_constrained, enumerate_hom, Constraints, TargetGraph};
use crate::lattice::Region;
use crate::Budget;

/// Boundary condition across the strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Free,
    Periodic,
}

/// Compatibility graph between admissible columns of a strip of given width.
#[derive(Debug, Clone)]
pub struct TransferOperator {
    pub width: u32,
    pub boundary: Boundary,
    /// Admissible columns in lexicographic order.
    pub states: Vec<Vec<u8>>,
    /// For each state, the states that may sit next to it (symmetric).
    pub compatible: Vec<Vec<u32>>,
}

impl TransferOperator {
    pub fn new(
        h: &TargetGraph,
        width: u32,
        boundary: Boundary,
        budget: Budget,
    ) -> Result<Self, EntropyError> {
        if width == 0 {
            return Err(EntropyError::Width(width));
        }
        if boundary == Boundary::Periodic && width < 2 {
            return Err(EntropyError::Width(width));
        }
        let column = Region::box_b(width, 1)?;
        let mut states: Vec<Vec<u8>> = enumerate_hom(h, &column, None, budget)?
            .raw()
            .to_vec();
        let w = width as usize;
        if boundary == Boundary::Periodic {
            states.retain(|s| h.adjacent(s[0], s[w - 1]));
        }
        let cost = (states.len() as u64).saturating_mul(states.len() as u64);
        if cost > budget.0 {
            return Err(EntropyError::Budget(budget.0));
        }
        let compatible = states
            .par_iter()
            .map(|s| {
                let mut out = Vec::new();
                let mut t = Vec::with_capacity(w);
                neighbours(h, s, &mut t, boundary, &states, &mut out);
                out
            })
            .collect();
        Ok(TransferOperator {
            width,
            boundary,
            states,
            compatible,
        })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// v -> A v over arbitrary-precision counts.
    pub fn apply(&self, v: &[BigUint]) -> Vec<BigUint> {
        self.compatible
            .par_iter()
            .map(|row| row.iter().map(|&j| &v[j as usize]).sum())
            .collect()
    }

    /// Number of admissible patterns on `length` consecutive columns.
    pub fn count_strip(&self, length: u32) -> BigUint {
        if length == 0 {
            return BigUint::from(1u8);
        }
        let mut v = vec![BigUint::from(1u8); self.len()];
        for _ in 1..length {
            v = self.apply(&v);
        }
        v.into_iter().sum()
    }

    /// trace(A^length): periodic in the column direction as well.
    pub fn trace_power(&self, length: u32) -> BigUint {
        (0..self.len())
            .into_par_iter()
            .map(|s| {
                let mut v = vec![BigUint::from(0u8); self.len()];
                v[s] = BigUint::from(1u8);
                for _ in 0..length {
                    v = self
                        .compatible
                        .iter()
                        .map(|row| row.iter().map(|&j| &v[j as usize]).sum())
                        .collect();
                }
                v.swap_remove(s)
            })
            .sum()
    }

    /// Spectral radius via power iteration on the shifted matrix A + I, with
    /// Rayleigh-quotient estimates; stops at relative change below `tol`.
    pub fn spectral_radius(&self, tol: f64, max_iter: usize) -> Result<f64, EntropyError> {
        let n = self.len();
        if n == 0 {
            return Ok(0.0);
        }
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        let mut prev = f64::NAN;
        for _ in 0..max_iter {
            let w: Vec<f64> = self
                .compatible
                .par_iter()
                .zip(&v)
                .map(|(row, &vi)| vi + row.iter().map(|&j| v[j as usize]).sum::<f64>())
                .collect();
            let lambda: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            v = w.into_iter().map(|x| x / norm).collect();
            if (lambda - prev).abs() <= tol * lambda {
                return Ok(lambda - 1.0);
            }
            prev = lambda;
        }
        Err(EntropyError::NotConverged(max_iter))
    }
}

fn neighbours(
    h: &TargetGraph,
    s: &[u8],
    t: &mut Vec<u8>,
    boundary: Boundary,
    states: &[Vec<u8>],
    out: &mut Vec<u32>,
) {
    let i = t.len();
    if i == s.len() {
        if boundary == Boundary::Periodic && !h.adjacent(t[0], t[i - 1]) {
            return;
        }
        let idx = states.binary_search(t).expect("compatible column is a state");
        out.push(idx as u32);
        return;
    }
    let mut mask = h.neighbor_mask(s[i]);
    if i > 0 {
        mask &= h.neighbor_mask(t[i - 1]);
    }
    while mask != 0 {
        let v = mask.trailing_zeros() as u8;
        mask &= mask - 1;
        t.push(v);
        neighbours(h, s, t, boundary, states, out);
        t.pop();
    }
}

/// |Hom(F_n, H)|: transfer matrices for d ≤ 2, exhaustive search above.
pub fn count_hom_box(
    h: &TargetGraph,
    n: u32,
    d: usize,
    budget: Budget,
) -> Result<BigUint, EntropyError> {
    let side = 2 * n + 1;
    match d {
        1 => Ok(TransferOperator::new(h, 1, Boundary::Free, budget)?.count_strip(side)),
        2 => Ok(TransferOperator::new(h, side, Boundary::Free, budget)?.count_strip(side)),
        _ => {
            let region = Region::box_f(n, d)?;
            Ok(count_constrained(
                h,
                &region,
                &Constraints::none(region.len()),
                budget,
            )?)
        }
    }
}

/// |Hom(T_n, H)| for the torus (Z/2nZ)^d, d ∈ {1, 2}.
///
/// For n = 1 the doubled edges of the 2-cycle impose their constraint once.
pub fn count_hom_torus(
    h: &TargetGraph,
    n: u32,
    d: usize,
    budget: Budget,
) -> Result<BigUint, EntropyError> {
    if n == 0 {
        return Err(EntropyError::Width(0));
    }
    match d {
        1 => {
            let op = TransferOperator::new(h, 1, Boundary::Free, budget)?;
            Ok(op.trace_power(2 * n))
        }
        2 => {
            let op = TransferOperator::new(h, 2 * n, Boundary::Periodic, budget)?;
            Ok(op.trace_power(2 * n))
        }
        _ => Err(EntropyError::Dimension(d)),
    }
}

pub const POWER_TOL: f64 = 1e-12;
pub const POWER_MAX_ITER: usize = 100_000;

/// log(spectral radius) / width, in nats per site.
pub fn strip_entropy(
    h: &TargetGraph,
    width: u32,
    boundary: Boundary,
    budget: Budget,
) -> Result<f64, EntropyError> {
    let op = TransferOperator::new(h, width, boundary, budget)?;
    let lambda = op.spectral_radius(POWER_TOL, POWER_MAX_ITER)?;
    Ok(lambda.ln() / width as f64)
}
