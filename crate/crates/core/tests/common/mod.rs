//! Independent reference implementations for the integration tests. Nothing
//! here calls into the library's search, counting or validation code.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

/// Row-major coordinates of {lo..=hi}^d, last axis fastest.
pub fn box_coords(lo: i32, hi: i32, d: usize) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

fn adjacent(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<i32>() == 1
}

/// |Hom(F_n, H)| by plain backtracking, `adj[u][v]` the adjacency of H.
pub fn brute_hom_count(adj: &[Vec<bool>], n: u32, d: usize) -> u64 {
    let cells = box_coords(-(n as i32), n as i32, d);
    let earlier: Vec<Vec<usize>> = (0..cells.len())
        .map(|i| (0..i).filter(|&j| adjacent(&cells[i], &cells[j])).collect())
        .collect();
    fn go(i: usize, vals: &mut Vec<usize>, earlier: &[Vec<usize>], adj: &[Vec<bool>]) -> u64 {
        if i == earlier.len() {
            return 1;
        }
        let mut total = 0;
        for v in 0..adj.len() {
            if earlier[i].iter().all(|&j| adj[vals[j]][v]) {
                vals.push(v);
                total += go(i + 1, vals, earlier, adj);
                vals.pop();
            }
        }
        total
    }
    go(0, &mut Vec::new(), &earlier, adj)
}

pub fn complete_adj(q: usize) -> Vec<Vec<bool>> {
    (0..q).map(|u| (0..q).map(|v| u != v).collect()).collect()
}

pub fn cycle_adj(q: usize) -> Vec<Vec<bool>> {
    (0..q)
        .map(|u| (0..q).map(|v| (u + 1) % q == v || (v + 1) % q == u).collect())
        .collect()
}

/// Whether `vals` (row-major on F_n) is a homomorphism into H.
pub fn is_hom(adj: &[Vec<bool>], n: u32, d: usize, vals: &[u8]) -> bool {
    let cells = box_coords(-(n as i32), n as i32, d);
    let side = (2 * n + 1) as usize;
    for (i, c) in cells.iter().enumerate() {
        for t in 0..d {
            if c[t] < n as i32 {
                let j = i + side.pow((d - 1 - t) as u32);
                if !adj[vals[i] as usize][vals[j] as usize] {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the outer shell of `vals` on F_n is the (v0, v1)-checkerboard.
pub fn shell_is_checkerboard(n: u32, d: usize, vals: &[u8], edge: (u8, u8)) -> bool {
    box_coords(-(n as i32), n as i32, d)
        .iter()
        .zip(vals)
        .filter(|(c, _)| c.iter().any(|x| x.unsigned_abs() == n))
        .all(|(c, &v)| {
            let odd = c.iter().sum::<i32>().rem_euclid(2) == 1;
            v == if odd { edge.1 } else { edge.0 }
        })
}

/// Values of an F_big pattern on the window centre + F_small.
pub fn window(vals: &[u8], big: u32, d: usize, centre: &[i32], small: u32) -> Vec<u8> {
    let side = (2 * big + 1) as i64;
    box_coords(-(small as i32), small as i32, d)
        .iter()
        .map(|c| {
            let mut idx = 0i64;
            for t in 0..d {
                idx = idx * side + (c[t] + centre[t] + big as i32) as i64;
            }
            vals[idx as usize]
        })
        .collect()
}

/// Canonical Frobenius representation by exhaustive search: fewest summands,
/// then the lexicographically least coefficient vector over ascending lengths.
pub fn brute_frobenius(lengths: &[u32], l: u32) -> Option<BTreeMap<u32, u32>> {
    let mut ls = lengths.to_vec();
    ls.sort_unstable();
    let mut best: Option<(u32, Vec<u32>)> = None;
    let mut coeffs = vec![0u32; ls.len()];
    fn go(j: usize, rest: u32, ls: &[u32], coeffs: &mut Vec<u32>, best: &mut Option<(u32, Vec<u32>)>) {
        if j == ls.len() {
            if rest == 0 {
                let key = (coeffs.iter().sum::<u32>(), coeffs.clone());
                if best.as_ref().map_or(true, |b| key < *b) {
                    *best = Some(key);
                }
            }
            return;
        }
        for c in 0..=rest / ls[j] {
            coeffs[j] = c;
            go(j + 1, rest - c * ls[j], ls, coeffs, best);
        }
        coeffs[j] = 0;
    }
    go(0, l, &ls, &mut coeffs, &mut best);
    best.map(|(_, c)| {
        ls.iter()
            .zip(c)
            .filter(|(_, c)| *c > 0)
            .map(|(&l, c)| (l, c))
            .collect()
    })
}

/// Domino tilings of an m x n board by profile recursion over cells.
pub fn brute_dominoes(m: usize, n: usize) -> u64 {
    fn go(i: usize, filled: &mut Vec<bool>, m: usize, n: usize) -> u64 {
        let mut i = i;
        while i < m * n && filled[i] {
            i += 1;
        }
        if i == m * n {
            return 1;
        }
        let (r, c) = (i / n, i % n);
        let mut total = 0;
        if c + 1 < n && !filled[i + 1] {
            filled[i] = true;
            filled[i + 1] = true;
            total += go(i + 1, filled, m, n);
            filled[i] = false;
            filled[i + 1] = false;
        }
        if r + 1 < m {
            filled[i] = true;
            filled[i + n] = true;
            total += go(i + 1, filled, m, n);
            filled[i] = false;
            filled[i + n] = false;
        }
        total
    }
    go(0, &mut vec![false; m * n], m, n)
}

/// Checks that the boxes (lo, dims) partition `outer` minus `hole` exactly.
pub fn exact_cover(outer: &[(i32, i32)], hole: &[(i32, i32)], boxes: &[(Vec<i32>, Vec<u32>)]) -> bool {
    let d = outer.len();
    let mut seen = HashSet::new();
    for (lo, dims) in boxes {
        let cells = box_cells(lo, dims);
        for c in cells {
            if !seen.insert(c) {
                return false;
            }
        }
    }
    let in_range = |c: &[i32], r: &[(i32, i32)]| (0..d).all(|t| c[t] >= r[t].0 && c[t] <= r[t].1);
    let mut want = 0usize;
    for c in cube_cells(outer) {
        if in_range(&c, hole) {
            if seen.contains(&c) {
                return false;
            }
        } else {
            if !seen.contains(&c) {
                return false;
            }
            want += 1;
        }
    }
    want == seen.len()
}

fn box_cells(lo: &[i32], dims: &[u32]) -> Vec<Vec<i32>> {
    let ranges: Vec<(i32, i32)> = lo.iter().zip(dims).map(|(&l, &s)| (l + 1, l + s as i32)).collect();
    cube_cells(&ranges)
}

fn cube_cells(ranges: &[(i32, i32)]) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for &(a, b) in ranges {
        out = out
            .into_iter()
            .flat_map(|p| {
                (a..=b).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Exact cover of offset + {1..dims} by placed rectangular tiles.
pub fn tiles_cover(offset: &[i32], dims: &[u32], tiles: &[(Vec<i32>, Vec<u32>)]) -> bool {
    let outer: Vec<(i32, i32)> = offset.iter().zip(dims).map(|(&o, &s)| (o + 1, o + s as i32)).collect();
    let hole: Vec<(i32, i32)> = outer.iter().map(|_| (1, 0)).collect();
    exact_cover(&outer, &hole, tiles)
}
