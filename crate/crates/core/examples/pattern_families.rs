//! Sizes of the pattern families for proper 3-colourings of Z^2, and one
//! member of each written as a grid.

use subshift_lab::homshift::{checkerboard_set, enumerate_hom, hat_set, marker_set, Pattern, TargetGraph};
use subshift_lab::lattice::Region;
use subshift_lab::Budget;

fn show(p: &Pattern) {
    let n = p.box_f_radius().unwrap() as i32;
    for x in -n..=n {
        let row: String = (-n..=n)
            .map(|y| {
                let s = subshift_lab::lattice::Site::new(&[x, y]).unwrap();
                char::from(b'0' + p.get(&s).unwrap())
            })
            .collect();
        println!("    {row}");
    }
}

fn main() {
    let h = TargetGraph::complete(3);
    let b = Budget::default();
    for n in 0..=2 {
        let all = enumerate_hom(&h, &Region::box_f(n, 2).unwrap(), None, b).unwrap();
        println!("|Hom(F_{n}, K3)| = {}", all.count());
    }
    for n in 1..=3 {
        let c = checkerboard_set(&h, 0, 1, n, 2, b).unwrap();
        let hat = hat_set(&h, n, 2, b).unwrap();
        println!("n = {n}: checkerboard {}, shell-periodic {}", c.count(), hat.count());
    }
    let tilde = marker_set(&h, 0, 1, 2, 2, 2, b).unwrap();
    let inner = checkerboard_set(&h, 0, 2, 2, 2, b).unwrap();
    println!("marker family on F_3: {} (inner checkerboard family: {})", tilde.count(), inner.count());
    println!("one marker pattern:");
    show(&tilde.get(0));
}
