use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::transfer::{count_hom_box, count_hom_torus};
use super::EntropyError;
use crate::homshift::{count_constrained, TargetGraph};
use crate::homshift::{hat_constraints, marker_constraints};
use crate::Budget;

/// Natural logarithm of an arbitrary-precision count.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("finite below 2^1000").ln()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().expect("64-bit head").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyRow {
    pub n: u32,
    pub sites: u64,
    pub count_box: BigUint,
    pub count_hat: BigUint,
    /// Undefined for n = 1: the two-layer family needs F_{n-1} with n-1 ≥ 1.
    pub count_tilde: Option<BigUint>,
    pub count_torus: BigUint,
    pub h_box: f64,
    pub h_hat: f64,
    /// -log(|Ĉ_n| / |Hom(F_n,H)|) / n^{d-1}
    pub c_hat: f64,
    /// -log(|Hom(T_n,H)| / |Hom(F_n,H)|) / n^{d-1}
    pub c_torus: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    pub d: usize,
    pub rows: Vec<EntropyRow>,
}

impl EntropyReport {
    /// Largest c_hat over the rows: the empirical constant.
    pub fn empirical_c(&self) -> f64 {
        self.rows.iter().map(|r| r.c_hat).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(
            "n,|F_n|,count_box,count_hat,count_tilde,count_torus,h_box,h_hat,c_hat,c_torus\n",
        );
        for r in &self.rows {
            let tilde = r.count_tilde.as_ref().map(|c| c.to_string()).unwrap_or_default();
            writeln!(
                s,
                "{},{},{},{},{},{},{:.12},{:.12},{:.12},{:.12}",
                r.n, r.sites, r.count_box, r.count_hat, tilde, r.count_torus, r.h_box, r.h_hat, r.c_hat, r.c_torus
            )
            .expect("writing to a String");
        }
        s
    }
}

/// Counts of Hom(F_n,H), Ĉ_n, C̃_n and Hom(T_n,H) for n = 1..=n_max with the
/// per-site entropies and the exponents of the two ratio bounds.
pub fn entropy_ratio_report(
    h: &TargetGraph,
    n_max: u32,
    d: usize,
    budget: Budget,
) -> Result<EntropyReport, EntropyError> {
    if !(1..=2).contains(&d) {
        return Err(EntropyError::Dimension(d));
    }
    let triple = h.marker_triple().ok_or(EntropyError::NoMarkerColours)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let sites = (2 * n as u64 + 1).pow(d as u32);
        let count_box = count_hom_box(h, n, d, budget)?;
        let (region, c) = hat_constraints(n, d)?;
        let count_hat = count_constrained(h, &region, &c, budget)?;
        let count_tilde = if n >= 2 {
            let (region, c) = marker_constraints(h, triple, n - 1, d)?;
            Some(count_constrained(h, &region, &c, budget)?)
        } else {
            None
        };
        let count_torus = count_hom_torus(h, n, d, budget)?;
        let scale = (n as f64).powi(d as i32 - 1);
        let lb = ln_big(&count_box);
        rows.push(EntropyRow {
            n,
            sites,
            h_box: lb / sites as f64,
            h_hat: ln_big(&count_hat) / sites as f64,
            c_hat: (lb - ln_big(&count_hat)) / scale,
            c_torus: (lb - ln_big(&count_torus)) / scale,
            count_box,
            count_hat,
            count_tilde,
            count_torus,
        });
    }
    Ok(EntropyReport { d, rows })
}
