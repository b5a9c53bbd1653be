//! Pairwise overlap refutation for the two-layer checkerboard markers.
//!
//! The family on F_2 passes. On F_3 two members agree on a diagonal overlap
//! at offset (3,-3), and the union glues into a colouring of F_8, so the
//! spacing property genuinely fails there.

use subshift_lab::height::glue;
use subshift_lab::homshift::{marker_set, verify_marker_spacing, MarkerVerdict, TargetGraph};
use subshift_lab::lattice::Region;
use subshift_lab::Budget;

fn main() {
    let h = TargetGraph::complete(3);
    let b = Budget::default();
    for n in 1..=2 {
        let fam = marker_set(&h, 0, 1, 2, n, 2, b).unwrap();
        print!("F_{} family ({} members), spacing F_{n}: ", n + 1, fam.len());
        match verify_marker_spacing(&fam, n) {
            MarkerVerdict::Ok => println!("ok"),
            MarkerVerdict::Counterexample { first, second, offset } => {
                println!("consistent pair at offset {offset}");
                let big = Region::box_f(8, 2).unwrap();
                let fixed: Vec<Option<u8>> = big
                    .sites()
                    .iter()
                    .map(|s| first.get(s).or_else(|| second.get(&s.sub(&offset))))
                    .collect();
                let glued = glue(&h, &big, &fixed, b).unwrap();
                println!("  both occurrences fit in one colouring of F_8: {}", glued.is_some());
            }
        }
    }
}
