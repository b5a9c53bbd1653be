mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use subshift_lab::tiling::{
    count_tilings, enumerate_tilings, frobenius_decompose, partition_complement, tile_rectangle,
    TileSet, TilingError,
};
use subshift_lab::lattice::{Region, Site};
use subshift_lab::Budget;

use common::{brute_frobenius, exact_cover, tiles_cover};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn placed(t: &subshift_lab::tiling::Tiling) -> Vec<(Vec<i32>, Vec<u32>)> {
    t.placements
        .iter()
        .map(|p| (p.offset.coords().to_vec(), t.tileset.proto(p.proto).to_vec()))
        .collect()
}

#[test]
fn enumerated_tilings_are_distinct_covers() {
    let dom = TileSet::dominoes(2).unwrap();
    let region = Region::rectangle(&[4, 5], Site::origin(2)).unwrap();
    let all = enumerate_tilings(&dom, &region, Budget::default()).unwrap();
    assert_eq!(all.len() as u64, common::brute_dominoes(4, 5));
    for t in &all {
        assert!(tiles_cover(&[0, 0], &[4, 5], &placed(t)));
    }
    let mut keys: Vec<_> = all.iter().map(|t| t.placements.clone()).collect();
    keys.sort_by_key(|p| format!("{p:?}"));
    keys.dedup();
    assert_eq!(keys.len(), all.len());
}

#[test]
fn odd_boards_and_uncertified_rectangles() {
    let dom = TileSet::dominoes(2).unwrap();
    let r = Region::rectangle(&[3, 3], Site::origin(2)).unwrap();
    assert_eq!(count_tilings(&dom, &r, Budget::default()).unwrap(), BigUint::from(0u32));
    assert!(matches!(tile_rectangle(&dom, &[3, 3]), Err(TilingError::NotCertified(_))));
}

#[test]
fn budget_is_reported() {
    let dom = TileSet::dominoes(2).unwrap();
    let r = Region::rectangle(&[8, 8], Site::origin(2)).unwrap();
    let err = count_tilings(&dom, &r, Budget(10)).unwrap_err();
    assert!(matches!(err, TilingError::Budget(_)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_matches_exhaustive(mut ls in prop::collection::vec(2u32..9, 2..4), l in 0u32..120) {
        ls.sort_unstable();
        ls.dedup();
        prop_assume!(ls.iter().fold(0, |g, &x| gcd(g, x)) == 1);
        let got = frobenius_decompose(&ls, l).unwrap();
        prop_assert_eq!(&got, &brute_frobenius(&ls, l));
        if let Some(c) = got {
            prop_assert_eq!(c.iter().map(|(a, b)| a * b).sum::<u32>(), l);
        }
    }

    #[test]
    fn certified_rectangles_tile(a in 1u32..=4, b in 1u32..=4, long in 0usize..2, extra in 0u32..6) {
        let f = TileSet::parse("1x2,3x1").unwrap();
        let m = f.m() as u32;
        let mut dims = vec![a * m, b * m];
        dims[long] = m + extra;
        let t = tile_rectangle(&f, &dims).unwrap();
        prop_assert!(t.validate().is_ok());
        prop_assert!(tiles_cover(&[0, 0], &dims, &placed(&t)));
    }

    #[test]
    fn complement_partitions_exactly(n in 1u32..3, np in 1u32..3, big_n in 1u32..3, m in 2u32..4, ox in 0i32..8, oy in 0i32..8) {
        let side = ((n + np) * m) as i32;
        let off = Site::new(&[ox, oy]).unwrap();
        let fits = [ox, oy].iter().all(|&o| o >= big_n as i32 && o + ((n * m + big_n) as i32) <= side);
        match partition_complement(n, np, big_n, m, &off) {
            Ok(rects) => {
                prop_assert!(fits);
                let boxes: Vec<_> = rects.iter().map(|r| (r.offset.coords().to_vec(), r.dims.clone())).collect();
                let hole = [(ox + 1, ox + (n * m) as i32), (oy + 1, oy + (n * m) as i32)];
                prop_assert!(exact_cover(&[(1, side), (1, side)], &hole, &boxes));
                prop_assert!(rects.iter().all(|r| r.side_condition(big_n as u64, m as u64)));
            }
            Err(e) => {
                prop_assert!(!fits, "{e}");
                let is_face = matches!(e, TilingError::Face { .. });
                prop_assert!(is_face);
            }
        }
    }
}
