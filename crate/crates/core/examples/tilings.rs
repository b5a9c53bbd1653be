//! Domino tilings: certified rectangles, the Frobenius split, complement
//! slabs, filling around a prescribed block and the marker tilings.

use subshift_lab::lattice::Site;
use subshift_lab::tiling::{
    count_tilings, flexible_tile_fill, frobenius_decompose, marker_tiling_set,
    partition_complement, tile_rectangle, TileSet,
};
use subshift_lab::Budget;

fn main() {
    let dom = TileSet::dominoes(2).unwrap();
    println!("dominoes: M = {}", dom.m());
    for dims in [[4, 4], [5, 4], [7, 8], [3, 3]] {
        match tile_rectangle(&dom, &dims) {
            Ok(t) => println!("  {}x{}: {} tiles", dims[0], dims[1], t.placements.len()),
            Err(e) => println!("  {}x{}: {e}", dims[0], dims[1]),
        }
    }
    println!("7 = {:?} over lengths {{2, 3}}", frobenius_decompose(&[2, 3], 7).unwrap());

    let slabs = partition_complement(1, 2, 4, 4, &Site::new(&[4, 4]).unwrap()).unwrap();
    println!("B_12 minus a padded block: {} slabs", slabs.len());

    let block = tile_rectangle(&dom, &[4, 4]).unwrap();
    let at = Site::new(&[4, 4]).unwrap();
    let w = flexible_tile_fill(&dom, 3, 1, &[(at, block.clone())]).unwrap();
    println!("fill of B_12: {} tiles, block reproduced: {}", w.placements.len(), w.contains_translate(&block, &at));

    let rect = subshift_lab::lattice::Region::rectangle(&[4, 4], Site::origin(2)).unwrap();
    println!("4x4 has {} tilings", count_tilings(&dom, &rect, Budget::default()).unwrap());

    let fam = marker_tiling_set(&dom, 4, 4, Budget::default()).unwrap();
    println!(
        "marker tilings for F_4: {} members on B_{} (extend to B_{}), overlap in radius {}: {}",
        fam.members.len(),
        fam.side,
        fam.outer_side,
        fam.overlap_radius(),
        if fam.find_overlap().is_none() { "none" } else { "found" }
    );
}
