//! Counts of all, shell-periodic, marker and toroidal 3-colourings with the
//! exponents c of the ratio bounds |A_n| / |Hom(F_n)| >= exp(-c n^(d-1)).

use subshift_lab::entropy::entropy_ratio_report;
use subshift_lab::homshift::TargetGraph;
use subshift_lab::Budget;

fn main() {
    let h = TargetGraph::complete(3);
    for d in 1..=2 {
        let n_max = if d == 1 { 8 } else { 3 };
        let report = entropy_ratio_report(&h, n_max, d, Budget::default()).unwrap();
        println!("d = {d}");
        print!("{}", report.to_csv());
        println!("empirical c = {:.4}\n", report.empirical_c());
    }
}
