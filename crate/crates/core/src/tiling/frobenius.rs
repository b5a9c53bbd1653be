use std::collections::BTreeMap;

use super::tileset::gcd;
use super::TilingError;

/// Writes `l` as a nonnegative combination of `lengths`.
///
/// Among all representations the one with the fewest summands is chosen, ties
/// broken by the lexicographically smallest coefficient vector with lengths
/// in ascending order. Returns `Ok(None)` when `l` is not representable.
pub fn frobenius_decompose(
    lengths: &[u32],
    l: u32,
) -> Result<Option<BTreeMap<u32, u32>>, TilingError> {
    let mut ls: Vec<u32> = lengths.to_vec();
    ls.sort_unstable();
    ls.dedup();
    if ls.is_empty() || ls.iter().any(|&x| x == 0) || ls.iter().fold(0, |g, &x| gcd(g, x as u64)) != 1
    {
        return Err(TilingError::NotCoprime);
    }
    let l = l as usize;
    // suffix[j][x]: fewest summands for x using ls[j..]
    const INF: u32 = u32::MAX;
    let mut suffix = vec![vec![INF; l + 1]; ls.len() + 1];
    suffix[ls.len()][0] = 0;
    for j in (0..ls.len()).rev() {
        let step = ls[j] as usize;
        for x in 0..=l {
            let mut best = suffix[j + 1][x];
            if x >= step && suffix[j][x - step] != INF {
                best = best.min(suffix[j][x - step] + 1);
            }
            suffix[j][x] = best;
        }
    }
    if suffix[0][l] == INF {
        return Ok(None);
    }
    let mut remaining = l;
    let mut budget = suffix[0][l];
    let mut out = BTreeMap::new();
    for (j, &len) in ls.iter().enumerate() {
        let len = len as usize;
        let c = (0..=remaining / len)
            .find(|&c| {
                let rest = suffix[j + 1][remaining - c * len];
                rest != INF && rest + c as u32 == budget
            })
            .expect("suffix table guarantees a choice");
        if c > 0 {
            out.insert(len as u32, c as u32);
        }
        remaining -= c * len;
        budget -= c as u32;
    }
    debug_assert_eq!(remaining, 0);
    Ok(Some(out))
}
