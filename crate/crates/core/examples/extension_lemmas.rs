//! The constructive extension lemmas for 3-colourings of Z^2: re-bounding a
//! checkerboard pattern, embedding arbitrary patterns, extending
//! shell-periodic patterns and filling around spaced blocks.

use subshift_lab::homshift::{
    checkerboard_set, embed_in_marker, enumerate_hom, flexible_fill, hat_extend, hat_set,
    path_extend, TargetGraph,
};
use subshift_lab::lattice::{Region, Site};
use subshift_lab::Budget;

fn main() {
    let h = TargetGraph::complete(3);
    let b = Budget::default();
    let n_univ = h.min_universal_path_length().unwrap() as u32;
    println!("universal walk length N = {n_univ}");

    let c1 = checkerboard_set(&h, 0, 1, 1, 2, b).unwrap();
    let k = n_univ + 1;
    for a in c1.iter() {
        let w = path_extend(&h, &a, (0, 1), (1, 2), k).unwrap();
        assert!(w.is_homomorphism(&h) && w.in_checkerboard_family(&h, (1, 2)));
        assert_eq!(w.restrict(a.region()).unwrap(), a);
    }
    println!("path extension: {} patterns of C_1^(0,1) moved to C_{}^(1,2)", c1.len(), 1 + k);

    let all = enumerate_hom(&h, &Region::box_f(1, 2).unwrap(), None, b).unwrap();
    let k = n_univ + 2;
    let ok = all
        .iter()
        .filter(|a| {
            let w = embed_in_marker(&h, a, (0, 1), k).unwrap();
            w.in_checkerboard_family(&h, (0, 1)) && w.restrict(a.region()).as_ref() == Some(a)
        })
        .count();
    println!("embedding: {ok}/{} patterns of Hom(F_1, K3) embedded in C_{}^(0,1)", all.len(), 4 + k);

    let hat = hat_set(&h, 1, 2, b).unwrap();
    let mut edges = std::collections::BTreeMap::new();
    for a in hat.iter() {
        let ext = hat_extend(&h, &a, 4).unwrap();
        assert!(ext.pattern.in_checkerboard_family(&h, ext.edge));
        *edges.entry(ext.edge).or_insert(0) += 1;
    }
    println!("shell-periodic extension: boundary edges {edges:?}");

    // two blocks from C_1^(0,1) placed in F_12, re-bounded to the (1,2) checkerboard
    let blocks = vec![
        (Site::new(&[-5, -5]).unwrap(), c1.get(0)),
        (Site::new(&[5, 4]).unwrap(), c1.get(1)),
    ];
    let w = flexible_fill(&h, (0, 1), (1, 2), 12, 2, &blocks).unwrap();
    let fk = Region::box_f(1, 2).unwrap();
    for (i, blk) in &blocks {
        assert_eq!(w.shifted_window(i, &fk).unwrap(), *blk);
    }
    println!("fill: F_12 pattern in C_12^(1,2) reproducing both blocks");
}
