//! Constructive extension lemmas for the checkerboard families.

use super::contraction::{level, tau, tau_n};
use super::graph::TargetGraph;
use super::pattern::{residue_mask, Pattern};
use super::HomError;
use crate::lattice::{first_spacing_violation, parity, Region, Site};

fn require_edge(h: &TargetGraph, e: (u8, u8)) -> Result<(), HomError> {
    let n = h.vertex_count();
    if (e.0 as usize) < n && (e.1 as usize) < n && h.adjacent(e.0, e.1) {
        Ok(())
    } else {
        Err(HomError::NotAnEdge(e.0, e.1))
    }
}

fn require_hom(h: &TargetGraph, a: &Pattern) -> Result<(), HomError> {
    match a.first_bad_edge(h) {
        Some((s, t)) => Err(HomError::NotHomomorphism(s, t)),
        None => Ok(()),
    }
}

/// Vertices v_0, ..., v_{k+1} for the shells F_{n+t} \ F_{n+t-1}.
///
/// v_0 v_1 is the source edge, v_k v_{k+1} the target edge in the order that
/// puts w0 on even sites of the last shell.
fn shell_sequence(
    h: &TargetGraph,
    from: (u8, u8),
    to: (u8, u8),
    k: u32,
) -> Result<Vec<u8>, HomError> {
    let (end, last) = if k % 2 == 0 { (to.0, to.1) } else { (to.1, to.0) };
    let walk = h
        .least_walk(from.1, end, k as usize - 1)
        .ok_or(HomError::ExtensionTooShort { k, min: k + 1 })?;
    let mut seq = Vec::with_capacity(k as usize + 2);
    seq.push(from.0);
    seq.extend(walk);
    seq.push(last);
    Ok(seq)
}

/// Extends `a` on F_n by k checkerboard shells of consecutive walk vertices.
fn extend_by_shells(
    h: &TargetGraph,
    a: &Pattern,
    n: u32,
    from: (u8, u8),
    to: (u8, u8),
    k: u32,
) -> Result<Pattern, HomError> {
    let seq = shell_sequence(h, from, to, k)?;
    let region = Region::box_f(n + k, a.region().dim())?;
    Ok(Pattern::from_fn(region, |s| {
        let r = s.norm_inf();
        if r <= n {
            a.get(s).expect("inner site")
        } else {
            let t = r - n;
            let e = (t + parity(s) as u32) % 2;
            seq[(t + e) as usize]
        }
    }))
}

fn radius(a: &Pattern) -> Result<u32, HomError> {
    a.box_f_radius().ok_or(HomError::NotCentredBox)
}

/// Extends a ∈ C_n^{from} to a member of C_{n+k}^{to} agreeing with a on F_n.
///
/// Requires k ≥ N + 1 where N is the universal walk length of `h`. Among the
/// admissible walks the lexicographically least one is used.
pub fn path_extend(
    h: &TargetGraph,
    a: &Pattern,
    from: (u8, u8),
    to: (u8, u8),
    k: u32,
) -> Result<Pattern, HomError> {
    let n = radius(a)?;
    let min = h.min_universal_path_length()? as u32 + 1;
    if k < min {
        return Err(HomError::ExtensionTooShort { k, min });
    }
    require_edge(h, from)?;
    require_edge(h, to)?;
    require_hom(h, a)?;
    if !a.in_checkerboard_family(h, from) {
        return Err(HomError::NotInFamily);
    }
    extend_by_shells(h, a, n, from, to, k)
}

/// Embeds any a ∈ Hom(F_n, H) into C_{2dn+k}^{target}.
///
/// The pattern is first spread over F_{2dn} through the retraction onto F_n,
/// which makes the shell of F_{2dn} the (a_0, a_{e1}) checkerboard, and then
/// path-extended. Requires k ≥ N + d.
pub fn embed_in_marker(
    h: &TargetGraph,
    a: &Pattern,
    target: (u8, u8),
    k: u32,
) -> Result<Pattern, HomError> {
    let n = radius(a)?;
    let d = a.region().dim();
    require_hom(h, a)?;
    require_edge(h, target)?;
    let universal = h.min_universal_path_length()? as u32;
    let min = universal + d as u32;
    if k < min {
        return Err(HomError::ExtensionTooShort { k, min });
    }
    let origin = Site::origin(d);
    let a0 = a.get(&origin).expect("origin in F_n");
    if n == 0 {
        let v1 = h.neighbors(a0).next().ok_or(HomError::NotAnEdge(a0, a0))?;
        return extend_by_shells(h, a, 0, (a0, v1), target, k);
    }
    let a1 = a.get(&Site::unit(d, 0)).expect("e1 in F_n");
    let m = 2 * d as u32 * n;
    let spread = Pattern::from_fn(Region::box_f(m, d)?, |s| {
        a.get(&tau_n(s, n).expect("n >= 1")).expect("retraction lands in F_n")
    });
    extend_by_shells(h, &spread, m, (a0, a1), target, k)
}

/// Output of [`hat_extend`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatExtension {
    pub edge: (u8, u8),
    pub pattern: Pattern,
}

/// Values on the unit cube {0,1}^d indexed by residue mask, taken from the
/// shell of `a`; residues absent from the shell get the least consistent lift.
fn cube_values(h: &TargetGraph, a: &Pattern, n: u32) -> Result<Vec<u8>, HomError> {
    let d = a.region().dim();
    let mut cube: Vec<Option<u8>> = vec![None; 1 << d];
    for (s, &v) in a.region().sites().iter().zip(a.values()) {
        if s.norm_inf() == n {
            cube[residue_mask(s)] = Some(v);
        }
    }
    let fixed: Vec<bool> = cube.iter().map(Option::is_some).collect();
    let mut vals: Vec<u8> = cube.iter().map(|v| v.unwrap_or(0)).collect();
    let free: Vec<usize> = (0..cube.len()).filter(|&m| !fixed[m]).collect();

    fn consistent(h: &TargetGraph, vals: &[u8], known: &[bool], m: usize, d: usize) -> bool {
        (0..d).all(|t| {
            let o = m ^ (1 << t);
            !known[o] || h.adjacent(vals[m], vals[o])
        })
    }
    fn search(
        h: &TargetGraph,
        vals: &mut [u8],
        known: &mut [bool],
        free: &[usize],
        d: usize,
    ) -> bool {
        let Some((&m, rest)) = free.split_first() else {
            return true;
        };
        for v in 0..h.vertex_count() as u8 {
            vals[m] = v;
            if consistent(h, vals, known, m, d) {
                known[m] = true;
                if search(h, vals, known, rest, d) {
                    return true;
                }
                known[m] = false;
            }
        }
        false
    }

    // The shell values themselves are already pairwise consistent because
    // adjacent residues appear adjacently on the shell for n >= 1.
    let mut known = fixed;
    if search(h, &mut vals, &mut known, &free, d) {
        Ok(vals)
    } else {
        Err(HomError::NoCubeLift)
    }
}

/// Extends a ∈ Ĉ_n (shell 2Z^d-periodic) to a checkerboard-bounded pattern on
/// F_{n+k}, k ≥ 2d.
///
/// Outside F_n the value at i is a'(tau^l(hat(tau^l(i)))) where l is the level
/// of i, hat reduces mod 2 and a' is the induced colouring of {0,1}^d.
pub fn hat_extend(h: &TargetGraph, a: &Pattern, k: u32) -> Result<HatExtension, HomError> {
    let n = radius(a)?;
    let d = a.region().dim();
    if !a.in_hat_family(h) {
        return Err(HomError::NotInFamily);
    }
    let min = 2 * d as u32;
    if k < min {
        return Err(HomError::ExtensionTooShort { k, min });
    }
    let cube = cube_values(h, a, n)?;
    let region = Region::box_f(n + k, d)?;
    let pattern = Pattern::from_fn(region, |s| {
        if s.norm_inf() <= n {
            return a.get(s).expect("inner site");
        }
        let l = level(s, n);
        let mut u = *s;
        for _ in 0..l {
            u = tau(&u);
        }
        let mut y = Site::origin(d);
        for t in 0..d {
            y.set(t, u.get(t).rem_euclid(2));
        }
        for _ in 0..l {
            y = tau(&y);
        }
        cube[residue_mask(&y)]
    });
    let mut edge = [None, None];
    for (s, &v) in pattern.region().sites().iter().zip(pattern.values()) {
        if s.norm_inf() == n + k {
            edge[parity(s) as usize].get_or_insert(v);
        }
    }
    let edge = (edge[0].unwrap_or(cube[0]), edge[1].unwrap_or(cube[1]));
    Ok(HatExtension { edge, pattern })
}

/// Builds w ∈ C_n^{target} with w shifted by i and restricted to F_k equal to
/// W(i) for every block (i, W(i)).
///
/// Each W(i) must lie in C_k^{base} for the common edge `base`. Blocks are
/// padded to F_{k+N+1} by path extension towards the target checkerboard in
/// the phase of i, so centres must lie in F_{n-(N+1)-k-2} and be
/// F_{k+N+1}-spaced.
pub fn flexible_fill(
    h: &TargetGraph,
    base: (u8, u8),
    target: (u8, u8),
    n: u32,
    d: usize,
    blocks: &[(Site, Pattern)],
) -> Result<Pattern, HomError> {
    require_edge(h, target)?;
    let region = Region::box_f(n, d)?;
    let checker = |s: &Site| if parity(s) == 0 { target.0 } else { target.1 };
    if blocks.is_empty() {
        return Ok(Pattern::from_fn(region, checker));
    }
    require_edge(h, base)?;
    let k = radius(&blocks[0].1)?;
    for (_, w) in blocks {
        if w.box_f_radius() != Some(k) || w.region().dim() != d {
            return Err(HomError::BlockShape);
        }
        if !w.in_checkerboard_family(h, base) {
            return Err(HomError::NotInFamily);
        }
    }
    let ext = h.min_universal_path_length()? as u32 + 1;
    let pad = k + ext;
    for (i, _) in blocks {
        if i.dim() != d || n < pad + 2 || i.norm_inf() > n - pad - 2 {
            return Err(HomError::Containment(*i));
        }
    }
    let centres: Vec<Site> = blocks.iter().map(|(i, _)| *i).collect();
    if let Some((a, b)) = first_spacing_violation(&centres, &Region::box_f(pad, d)?) {
        return Err(HomError::Spacing(a, b));
    }
    let padded: Vec<(Site, Pattern)> = blocks
        .iter()
        .map(|(i, w)| {
            let p = parity(i);
            let to = if p == 0 { target } else { (target.1, target.0) };
            extend_by_shells(h, w, k, base, to, ext).map(|e| (*i, e))
        })
        .collect::<Result<_, _>>()?;
    Ok(Pattern::from_fn(region, |s| {
        for (i, e) in &padded {
            let rel = s.sub(i);
            if rel.norm_inf() <= pad {
                return e.get(&rel).expect("inside padded block");
            }
        }
        checker(s)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homshift::{checkerboard_set, enumerate_hom, hat_set};
    use crate::Budget;

    fn k3() -> TargetGraph {
        TargetGraph::complete(3)
    }

    #[test]
    fn path_extend_examples() {
        let h = k3();
        let set = checkerboard_set(&h, 0, 1, 1, 2, Budget::default()).unwrap();
        for a in set.iter() {
            let e = path_extend(&h, &a, (0, 1), (1, 2), 3).unwrap();
            assert!(e.in_checkerboard_family(&h, (1, 2)));
            assert_eq!(e.restrict(a.region()).unwrap(), a);
            let same = path_extend(&h, &a, (0, 1), (0, 1), 4).unwrap();
            assert!(same.in_checkerboard_family(&h, (0, 1)));
        }
        let a = set.get(0);
        assert_eq!(
            path_extend(&h, &a, (0, 1), (1, 2), 1),
            Err(HomError::ExtensionTooShort { k: 1, min: 3 })
        );
    }

    #[test]
    fn embed_examples() {
        let h = k3();
        let f1 = Region::box_f(1, 2).unwrap();
        // rows (top to bottom) 012 / 120 / 201 with x = column, y = row
        let a = Pattern::from_fn(f1, |s| ((s.get(0) + 1 - s.get(1) + 1).rem_euclid(3)) as u8);
        assert!(a.is_homomorphism(&h));
        let e = embed_in_marker(&h, &a, (0, 1), 4).unwrap();
        assert_eq!(e.box_f_radius(), Some(8));
        assert!(e.in_checkerboard_family(&h, (0, 1)));
        assert_eq!(e.restrict(a.region()).unwrap(), a);

        let bad = Pattern::from_fn(Region::box_f(1, 2).unwrap(), |_| 0);
        assert!(matches!(
            embed_in_marker(&h, &bad, (0, 1), 4),
            Err(HomError::NotHomomorphism(..))
        ));

        let single = Pattern::from_fn(Region::box_f(0, 2).unwrap(), |_| 2);
        let e = embed_in_marker(&h, &single, (0, 1), 4).unwrap();
        assert!(e.in_checkerboard_family(&h, (0, 1)));
        assert_eq!(e.get(&Site::origin(2)), Some(2));
    }

    #[test]
    fn hat_extend_all_small() {
        for d in 1..=2 {
            let h = k3();
            for a in hat_set(&h, 1, d, Budget::default()).unwrap().iter() {
                let out = hat_extend(&h, &a, 2 * d as u32).unwrap();
                assert!(out.pattern.is_homomorphism(&h));
                assert!(out.pattern.in_checkerboard_family(&h, out.edge));
                assert_eq!(out.pattern.restrict(a.region()).unwrap(), a);
            }
        }
        let f1 = Region::box_f(1, 2).unwrap();
        let not_hat = enumerate_hom(&k3(), &f1, None, Budget::default())
            .unwrap()
            .iter()
            .find(|p| !p.in_hat_family(&k3()))
            .unwrap();
        assert_eq!(hat_extend(&k3(), &not_hat, 4), Err(HomError::NotInFamily));
    }

    #[test]
    fn flexible_fill_examples() {
        let h = k3();
        let empty = flexible_fill(&h, (0, 1), (1, 2), 3, 2, &[]).unwrap();
        assert!(empty.in_checkerboard_family(&h, (1, 2)));
        assert!(empty.is_homomorphism(&h));

        let w = checkerboard_set(&h, 0, 1, 1, 2, Budget::default()).unwrap().get(1);
        let origin = Site::origin(2);
        let out = flexible_fill(&h, (0, 1), (1, 2), 6, 2, &[(origin, w.clone())]).unwrap();
        assert!(out.in_checkerboard_family(&h, (1, 2)));
        assert_eq!(out.shifted_window(&origin, w.region()).unwrap(), w);

        assert_eq!(
            flexible_fill(&h, (0, 1), (1, 2), 5, 2, &[(origin, w.clone())]),
            Err(HomError::Containment(origin))
        );
    }
}
