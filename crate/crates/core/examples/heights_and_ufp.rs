//! Height functions of 3-colourings and the uniform filling obstruction.

use subshift_lab::height::{
    checker_pattern, height_cocycle, lipschitz_check, quasiflat_gap, sample_coloring,
    striped_pattern, ufp_window_check, UfpMode, UfpVerdict,
};
use subshift_lab::homshift::TargetGraph;
use subshift_lab::lattice::{Region, Site};
use subshift_lab::Budget;

fn main() {
    let f6 = Region::box_f(6, 2).unwrap();
    let origin = Site::origin(2);
    let mut samples = Vec::new();
    for seed in 0..4 {
        let x = sample_coloring(&f6, seed).unwrap();
        let h = height_cocycle(&x, &origin).unwrap();
        assert!(lipschitz_check(&h).is_none());
        println!(
            "seed {seed}: heights in [{}, {}]",
            h.heights.iter().min().unwrap(),
            h.heights.iter().max().unwrap()
        );
        samples.push(x);
    }
    println!("gap over samples: {}", quasiflat_gap(&samples, f6.sites()).unwrap());
    let extremes = [striped_pattern(&f6), checker_pattern(&f6)];
    println!("gap stripes vs checkerboard: {}", quasiflat_gap(&extremes, f6.sites()).unwrap());

    let k3 = TargetGraph::complete(3);
    // the stripes reach heights ±2n at the corners, the annulus stays flat
    println!("stripes on F_n against a checkerboard annulus beyond F_(n+M):");
    for n in 1..=3 {
        let row: Vec<&str> = (0..2 * n)
            .map(|m| {
                match ufp_window_check(&k3, m, n, 1, 2, UfpMode::Targeted, Budget::default()).unwrap() {
                    UfpVerdict::Ok { .. } => "glue",
                    UfpVerdict::Counterexample { .. } => "FAIL",
                }
            })
            .collect();
        println!("  n = {n}, M = 0..{}: {}", 2 * n, row.join(" "));
    }
    let full = TargetGraph::full(2);
    let v = ufp_window_check(&full, 0, 0, 1, 2, UfpMode::Exhaustive, Budget::default()).unwrap();
    println!("full 2-shift, M = 0: {}", if v.is_ok() { "ok" } else { "counterexample" });
}
