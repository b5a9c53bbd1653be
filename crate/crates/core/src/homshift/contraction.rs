use super::HomError;
use crate::lattice::Site;

/// The contraction of Z^d towards the edge {0, e1}.
///
/// Away from the origin, steps one unit towards zero along the first axis
/// attaining the sup norm.
pub fn tau(i: &Site) -> Site {
    if i.is_origin() {
        return Site::unit(i.dim(), 0);
    }
    let m = i.norm_inf() as i32;
    let xi = (0..i.dim())
        .find(|&t| i.get(t).abs() == m)
        .expect("some coordinate attains the sup norm");
    i.step(xi, -i.get(xi).signum())
}

/// Smallest k with tau^k(i) in F_n.
pub fn level(i: &Site, n: u32) -> u32 {
    let mut cur = *i;
    let mut k = 0;
    while cur.norm_inf() > n {
        cur = tau(&cur);
        k += 1;
    }
    k
}

/// The retraction of Z^d onto F_n: tau^{2k}(i) for i of level k.
///
/// Undefined for n = 0 since tau has no fixed point.
pub fn tau_n(i: &Site, n: u32) -> Result<Site, HomError> {
    if n == 0 {
        return Err(HomError::RadiusZero);
    }
    let k = level(i, n);
    let mut cur = *i;
    for _ in 0..2 * k {
        cur = tau(&cur);
    }
    Ok(cur)
}
