//! Domino tilings of rectangles: the closed product formula and a
//! broken-profile transfer count.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigUint;
use num_traits::Zero;

use super::EntropyError;

const RM: RoundingMode = RoundingMode::ToEven;

/// Converts a nonnegative float to the nearest integer and its distance.
fn nearest_integer(x: &BigFloat) -> Option<(BigUint, f64)> {
    if x.is_zero() {
        return Some((BigUint::zero(), 0.0));
    }
    let (words, _, sign, exp, _) = x.as_raw_parts()?;
    if sign.is_negative() {
        return None;
    }
    let mut mant = BigUint::zero();
    for &w in words.iter().rev() {
        mant = (mant << 64u32) + BigUint::from(w);
    }
    let shift = 64 * words.len() as i64 - exp as i64;
    if shift <= 0 {
        return Some((mant << (-shift) as u64, 0.0));
    }
    let shift = shift as u64;
    let floor = &mant >> shift;
    let frac_bits = &mant - (&floor << shift);
    // fraction as f64 from its top bits
    let frac = if frac_bits.is_zero() {
        0.0
    } else {
        let top = frac_bits.bits();
        let keep = top.min(60);
        let lead = (&frac_bits >> (top - keep)).to_u64_digits().first().copied().unwrap_or(0);
        lead as f64 * 2f64.powi(top as i32 - keep as i32 - shift as i32)
    };
    if frac >= 0.5 {
        Some((floor + 1u8, 1.0 - frac))
    } else {
        Some((floor, frac))
    }
}

/// Number of domino tilings of an m x n rectangle from the product
/// ∏_j ∏_k (4cos²(πj/(m+1)) + 4cos²(πk/(n+1))), j ≤ ⌈m/2⌉, k ≤ ⌈n/2⌉,
/// evaluated in multi-precision floating point and rounded.
pub fn count_dimer_tilings_kasteleyn(m: u32, n: u32) -> Result<BigUint, EntropyError> {
    if m == 0 || n == 0 {
        return Ok(BigUint::from(1u8));
    }
    if (m as u64 * n as u64) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    // log2 of the count is below 0.5 mn; keep generous guard bits
    let p = ((m as usize * n as usize) + 256).next_multiple_of(64);
    let mut cc = Consts::new().map_err(|_| EntropyError::Precision(f64::NAN))?;
    let pi = cc.pi(p, RM);
    let four = BigFloat::from_u8(4, p);
    let cos_sq4 = |j: u32, len: u32, cc: &mut Consts| {
        let arg = pi
            .mul(&BigFloat::from_u32(j, p), p, RM)
            .div(&BigFloat::from_u32(len + 1, p), p, RM);
        let c = arg.cos(p, RM, cc);
        c.mul(&c, p, RM).mul(&four, p, RM)
    };
    let rows: Vec<BigFloat> = (1..=m.div_ceil(2)).map(|j| cos_sq4(j, m, &mut cc)).collect();
    let cols: Vec<BigFloat> = (1..=n.div_ceil(2)).map(|k| cos_sq4(k, n, &mut cc)).collect();
    let mut prod = BigFloat::from_u8(1, p);
    for a in &rows {
        for b in &cols {
            prod = prod.mul(&a.add(b, p, RM), p, RM);
        }
    }
    let (value, dist) = nearest_integer(&prod).ok_or(EntropyError::Precision(f64::NAN))?;
    if dist >= 1e-6 {
        return Err(EntropyError::Precision(dist));
    }
    Ok(value)
}

/// Domino tilings of an m x n rectangle by a cell-by-cell profile transfer.
pub fn count_dimer_tilings_transfer(m: u32, n: u32) -> Result<BigUint, EntropyError> {
    let (h, w) = if m <= n { (m, n) } else { (n, m) };
    if h == 0 {
        return Ok(BigUint::from(1u8));
    }
    if h > 24 {
        return Err(EntropyError::Width(h));
    }
    let states = 1usize << h;
    let mut dp = vec![BigUint::zero(); states];
    dp[0] = BigUint::from(1u8);
    for c in 0..w {
        for r in 0..h {
            let mut next = vec![BigUint::zero(); states];
            for (mask, count) in dp.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                let bit = 1usize << r;
                if mask & bit != 0 {
                    next[mask & !bit] += count;
                    continue;
                }
                if c + 1 < w {
                    next[mask | bit] += count;
                }
                if r + 1 < h && mask & (bit << 1) == 0 {
                    next[mask | (bit << 1)] += count;
                }
            }
            dp = next;
        }
    }
    Ok(std::mem::take(&mut dp[0]))
}
