//! Per-site entropy of proper 3-colourings of Z^2 estimated on strips.
//!
//! Periodic strips of even width approach the limit 1.5 ln(4/3) from above.

use subshift_lab::entropy::{strip_entropy, Boundary};
use subshift_lab::homshift::TargetGraph;
use subshift_lab::Budget;

fn main() {
    let h = TargetGraph::complete(3);
    let limit = 1.5 * (4.0f64 / 3.0).ln();
    println!("width  free          periodic");
    for w in 1..=10 {
        let free = strip_entropy(&h, w, Boundary::Free, Budget::default()).unwrap();
        let periodic = match strip_entropy(&h, w, Boundary::Periodic, Budget::default()) {
            Ok(e) => format!("{e:.8}"),
            Err(_) => "-".to_string(),
        };
        println!("{w:>5}  {free:.8}    {periodic}");
    }
    println!("limit  {limit:.8}");
}
