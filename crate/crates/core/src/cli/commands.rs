use std::fs::File;
use std::io::{BufReader, Write};
use std::path::Path;

use serde::Deserialize;
use serde_json::json;

use super::args::{BoundaryArg, Cli, Command, EntropyCmd, Family, Format, GraphArgs, Lemma, VerifyCmd};
use super::Failure;
use crate::entropy::{
    count_dimer_tilings_kasteleyn, count_dimer_tilings_transfer, count_hom_box, count_hom_torus,
    entropy_ratio_report, ln_big, strip_entropy, Boundary,
};
use crate::height::{
    height_cocycle, lipschitz_check, quasiflat_gap, sample_coloring, ufp_window_check, UfpMode,
    UfpVerdict,
};
use crate::homshift::io::{read_patterns, write_patterns, write_set, PatternHeader};
use crate::homshift::{
    checkerboard_set, embed_in_marker, enumerate_hom, flexible_fill, hat_extend, hat_set,
    marker_set, path_extend, verify_marker_spacing, EdgeList, MarkerVerdict, Pattern, TargetGraph,
};
use crate::lattice::{Region, Site};
use crate::tiling::io::{to_json, TilingFile};
use crate::tiling::{
    count_tilings, flexible_tile_fill, marker_tiling_set, tile_rectangle, TileSet, Tiling,
};
use crate::Budget;

type Out<'a> = &'a mut Vec<u8>;

pub(super) fn execute(cli: &Cli, out: Out, err: Out) -> Result<(), Failure> {
    let budget = cli
        .budget
        .map(Budget)
        .or_else(Budget::from_env)
        .unwrap_or_default();
    let seed = cli.seed;
    match &cli.command {
        Command::Enumerate { graph, family, n, d, edge, marker } => {
            let h = load_graph(graph)?;
            let (set, name) = match family {
                Family::Box => (enumerate_hom(&h, &Region::box_f(*n, *d)?, None, budget)?, "box"),
                Family::Checker => {
                    let e = edge.unwrap_or_else(|| first_edge(&h));
                    (checkerboard_set(&h, e.0, e.1, *n, *d, budget)?, "checker")
                }
                Family::Tilde => {
                    let t = marker_colours(&h, *marker)?;
                    (marker_set(&h, t.0, t.1, t.2, *n, *d, budget)?, "tilde")
                }
                Family::Hat => (hat_set(&h, *n, *d, budget)?, "hat"),
            };
            write_set(&mut *out, &set, h.labels(), seed, Some(name))?;
            writeln!(err, "{name} n={n} d={d}: {} patterns", set.count())?;
            Ok(())
        }
        Command::Extend { graph, input, lemma, k, from, to } => {
            let h = load_graph(graph)?;
            let (_, patterns) = read_patterns(BufReader::new(open(input)?))?;
            let mut results = Vec::with_capacity(patterns.len());
            for a in &patterns {
                let p = match lemma {
                    Lemma::Path => {
                        let src = match from {
                            Some(e) => *e,
                            None => a.checkerboard_edge().ok_or_else(|| {
                                Failure::Usage("input is not checkerboard-bounded; pass --from".into())
                            })?,
                        };
                        path_extend(&h, a, src, to.unwrap_or(src), *k)?
                    }
                    Lemma::Embed => embed_in_marker(&h, a, to.unwrap_or_else(|| first_edge(&h)), *k)?,
                    Lemma::Hat => {
                        let ext = hat_extend(&h, a, *k)?;
                        writeln!(err, "boundary edge ({}, {})", ext.edge.0, ext.edge.1)?;
                        ext.pattern
                    }
                };
                results.push(p);
            }
            let Some(first) = results.first() else {
                return Err(Failure::Usage("input file has no patterns".into()));
            };
            let mut header = PatternHeader::new(first.region(), h.labels(), results.len(), seed);
            header.family = Some(format!("{lemma:?}").to_lowercase());
            write_patterns(&mut *out, &header, results.iter().map(Pattern::values))?;
            writeln!(err, "extended {} patterns by k={k}", results.len())?;
            Ok(())
        }
        Command::Fill { graph, tileset, n, k, d, blocks, base, target } => {
            let specs: Vec<BlockSpec> = serde_json::from_reader(BufReader::new(open(blocks)?))
                .map_err(|e| Failure::Usage(format!("{}: {e}", blocks.display())))?;
            match tileset {
                Some(ts) => fill_tiling(&TileSet::parse(ts)?, *n, *k, specs, out, err),
                None => {
                    let h = load_graph(graph)?;
                    fill_pattern(&h, *n, *k, *d, *base, *target, specs, seed, out, err)
                }
            }
        }
        Command::Tile { tileset, dims, validate } => {
            let f = TileSet::parse(tileset)?;
            let t = tile_rectangle(&f, &dims.0).map_err(|e| untileable(&f, e))?;
            if *validate {
                t.validate()?;
                writeln!(err, "valid: {} tiles", t.placements.len())?;
            }
            writeln!(out, "{}", to_json(&t))?;
            Ok(())
        }
        Command::Count { graph, tileset, dims, n, d, torus } => {
            let (what, count) = match (tileset, n) {
                (Some(ts), _) => {
                    let f = TileSet::parse(ts)?;
                    let dims = dims
                        .as_ref()
                        .ok_or_else(|| Failure::Usage("--dims is required with --tileset".into()))?;
                    let region = Region::rectangle(&dims.0, Site::origin(dims.0.len()))?;
                    (format!("tilings {}", join(&dims.0, "x")), count_tilings(&f, &region, budget)?)
                }
                (None, Some(n)) => {
                    let h = load_graph(graph)?;
                    if *torus {
                        (format!("torus n={n} d={d}"), count_hom_torus(&h, *n, *d, budget)?)
                    } else {
                        (format!("box n={n} d={d}"), count_hom_box(&h, *n, *d, budget)?)
                    }
                }
                (None, None) => return Err(Failure::Usage("pass --tileset with --dims, or --n".into())),
            };
            match cli.format {
                Format::Csv => write!(out, "what,count\n{what},{count}\n")?,
                Format::Json => writeln!(out, "{}", json!({"what": what, "count": count.to_string()}))?,
            }
            Ok(())
        }
        Command::Entropy(cmd) => entropy(cmd, cli.format, budget, out),
        Command::Verify(cmd) => verify(cmd, budget, out),
        Command::Height { input, n, d, samples } => {
            let patterns = match input {
                Some(path) => read_patterns(BufReader::new(open(path)?))?.1,
                None => {
                    let region = Region::box_f(*n, *d)?;
                    (0..*samples as u64)
                        .map(|s| sample_coloring(&region, seed.wrapping_add(s)))
                        .collect::<Result<_, _>>()?
                }
            };
            let Some(first) = patterns.first() else {
                return Err(Failure::Usage("no colourings given".into()));
            };
            let origin = Site::origin(first.region().dim());
            for (i, x) in patterns.iter().enumerate() {
                let hf = height_cocycle(x, &origin)?;
                let lip = lipschitz_check(&hf);
                let rec = json!({
                    "sample": i,
                    "min": hf.heights.iter().min(),
                    "max": hf.heights.iter().max(),
                    "slope": hf.slope_estimate(),
                    "lipschitz": if lip.is_none() { "ok" } else { "violated" },
                    "heights": hf.heights,
                });
                writeln!(out, "{rec}")?;
            }
            let gap = quasiflat_gap(&patterns, first.region().sites())?;
            writeln!(out, "{}", json!({"quasiflat_gap": gap, "samples": patterns.len()}))?;
            Ok(())
        }
    }
}

#[derive(Deserialize)]
struct BlockSpec {
    at: Site,
    #[serde(default)]
    tiling: Option<TilingFile>,
    #[serde(default)]
    values: Option<Vec<u8>>,
}

fn fill_tiling(f: &TileSet, n: u32, k: u32, specs: Vec<BlockSpec>, out: Out, err: Out) -> Result<(), Failure> {
    let mut blocks: Vec<(Site, Tiling)> = Vec::with_capacity(specs.len());
    for b in specs {
        let t = b
            .tiling
            .ok_or_else(|| Failure::Usage(format!("block at {} has no tiling", b.at)))?
            .into_tiling()?;
        blocks.push((b.at, t));
    }
    let w = flexible_tile_fill(f, n, k, &blocks)?;
    for (i, t) in &blocks {
        if !w.contains_translate(t, i) {
            return Err(Failure::Negative(format!("fill does not reproduce the block at {i}")));
        }
    }
    writeln!(err, "filled B_{} around {} blocks", n as u64 * f.m(), blocks.len())?;
    writeln!(out, "{}", to_json(&w))?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn fill_pattern(
    h: &TargetGraph,
    n: u32,
    k: u32,
    d: usize,
    base: Option<(u8, u8)>,
    target: Option<(u8, u8)>,
    specs: Vec<BlockSpec>,
    seed: u64,
    out: Out,
    err: Out,
) -> Result<(), Failure> {
    let fk = Region::box_f(k, d)?;
    let mut blocks = Vec::with_capacity(specs.len());
    for b in specs {
        let vals = b
            .values
            .ok_or_else(|| Failure::Usage(format!("block at {} has no values", b.at)))?;
        blocks.push((b.at, Pattern::new(fk.clone(), vals)?));
    }
    let base = match base {
        Some(e) => e,
        None => blocks
            .first()
            .and_then(|(_, w)| w.checkerboard_edge())
            .unwrap_or_else(|| first_edge(h)),
    };
    let w = flexible_fill(h, base, target.unwrap_or(base), n, d, &blocks)?;
    let header = PatternHeader::new(w.region(), h.labels(), 1, seed);
    write_patterns(&mut *out, &header, [w.values()])?;
    writeln!(err, "filled F_{n} around {} blocks", blocks.len())?;
    Ok(())
}

fn entropy(cmd: &EntropyCmd, format: Format, budget: Budget, out: Out) -> Result<(), Failure> {
    match cmd {
        EntropyCmd::Dimers { max } => {
            let mut rows = Vec::new();
            for m in 1..=*max {
                for n in m..=*max {
                    let c = count_dimer_tilings_kasteleyn(m, n)?;
                    if c != count_dimer_tilings_transfer(m, n)? {
                        return Err(Failure::Negative(format!("product formula and transfer disagree on {m}x{n}")));
                    }
                    let h = if c == 0u32.into() { f64::NEG_INFINITY } else { ln_big(&c) / (m * n) as f64 };
                    rows.push((m, n, c, h));
                }
            }
            match format {
                Format::Csv => {
                    writeln!(out, "m,n,count,entropy_per_site")?;
                    for (m, n, c, h) in rows {
                        writeln!(out, "{m},{n},{c},{h:.12}")?;
                    }
                }
                Format::Json => {
                    for (m, n, c, h) in rows {
                        let h = h.is_finite().then_some(h);
                        writeln!(out, "{}", json!({"m": m, "n": n, "count": c.to_string(), "entropy_per_site": h}))?;
                    }
                }
            }
        }
        EntropyCmd::Strips { graph, widths, boundary } => {
            let h = load_graph(graph)?;
            let b = match boundary {
                BoundaryArg::Free => Boundary::Free,
                BoundaryArg::Periodic => Boundary::Periodic,
            };
            if format == Format::Csv {
                writeln!(out, "width,entropy")?;
            }
            for &w in &widths.0 {
                let e = strip_entropy(&h, w, b, budget)?;
                match format {
                    Format::Csv => writeln!(out, "{w},{e:.12}")?,
                    Format::Json => writeln!(out, "{}", json!({"width": w, "entropy": e}))?,
                }
            }
        }
        EntropyCmd::Ratio { graph, nmax, d } => {
            let h = load_graph(graph)?;
            let report = entropy_ratio_report(&h, *nmax, *d, budget)?;
            match format {
                Format::Csv => out.write_all(report.to_csv().as_bytes())?,
                Format::Json => {
                    for r in &report.rows {
                        let rec = json!({
                            "n": r.n,
                            "sites": r.sites,
                            "count_box": r.count_box.to_string(),
                            "count_hat": r.count_hat.to_string(),
                            "count_tilde": r.count_tilde.as_ref().map(ToString::to_string),
                            "count_torus": r.count_torus.to_string(),
                            "h_box": r.h_box,
                            "h_hat": r.h_hat,
                            "c_hat": r.c_hat,
                            "c_torus": r.c_torus,
                        });
                        writeln!(out, "{rec}")?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn verify(cmd: &VerifyCmd, budget: Budget, out: Out) -> Result<(), Failure> {
    let failed = match cmd {
        VerifyCmd::Marker { tileset: Some(ts), n, interiors, .. } => {
            let f = TileSet::parse(ts)?;
            let fam = marker_tiling_set(&f, *n, *interiors, budget)?;
            let overlap = fam.find_overlap();
            let mut rec = json!({
                "check": "marker_tiling",
                "n": n,
                "members": fam.members.len(),
                "radius": fam.overlap_radius(),
                "verdict": if overlap.is_none() { "ok" } else { "counterexample" },
            });
            if let Some(o) = &overlap {
                rec["first"] = json!(o.first);
                rec["second"] = json!(o.second);
                rec["offset"] = json!(o.offset);
            }
            writeln!(out, "{rec}")?;
            overlap.is_some()
        }
        VerifyCmd::Marker { graph, n, d, .. } => {
            // C̃_n lives on F_n and should be F_{n-1}-spaced
            let inner = n.checked_sub(1).filter(|&m| m >= 1).ok_or_else(|| {
                Failure::Usage("the marker family starts at n = 2".into())
            })?;
            let h = load_graph(graph)?;
            let t = marker_colours(&h, None)?;
            let fam = marker_set(&h, t.0, t.1, t.2, inner, *d, budget)?;
            let verdict = verify_marker_spacing(&fam, inner);
            let mut rec = json!({
                "check": "marker",
                "n": n,
                "d": d,
                "members": fam.len(),
                "verdict": if verdict.is_ok() { "ok" } else { "counterexample" },
            });
            if let MarkerVerdict::Counterexample { first, second, offset } = &verdict {
                rec["first"] = json!(first.values());
                rec["second"] = json!(second.values());
                rec["offset"] = json!(offset);
            }
            writeln!(out, "{rec}")?;
            !verdict.is_ok()
        }
        VerifyCmd::Ufp { graph, m, n, buffer, d, exhaustive } => {
            let h = load_graph(graph)?;
            let mode = if *exhaustive { UfpMode::Exhaustive } else { UfpMode::Targeted };
            let v = ufp_window_check(&h, *m, *n, *buffer, *d, mode, budget)?;
            let mut rec = json!({
                "check": "ufp",
                "M": m,
                "n": n,
                "buffer": buffer,
                "d": d,
                "mode": if *exhaustive { "exhaustive" } else { "targeted" },
            });
            match &v {
                UfpVerdict::Ok { pairs_checked } => {
                    rec["verdict"] = json!("ok");
                    rec["pairs_checked"] = json!(pairs_checked);
                }
                UfpVerdict::Counterexample { inner, outer } => {
                    rec["verdict"] = json!("counterexample");
                    rec["inner"] = json!(inner.values());
                    rec["outer"] = json!(outer.values());
                }
            }
            writeln!(out, "{rec}")?;
            !v.is_ok()
        }
        VerifyCmd::Tiling { file } => {
            let text = std::fs::read_to_string(file)?;
            let t = crate::tiling::io::from_json(&text)?;
            let rec = json!({"check": "tiling", "tiles": t.placements.len(), "verdict": "ok"});
            writeln!(out, "{rec}")?;
            false
        }
        VerifyCmd::Lipschitz { input } => {
            let (_, patterns) = read_patterns(BufReader::new(open(input)?))?;
            let mut any = false;
            for (i, x) in patterns.iter().enumerate() {
                let base = x.region().site(0);
                let hf = height_cocycle(x, &base)?;
                let mut rec = json!({"check": "lipschitz", "pattern": i});
                match lipschitz_check(&hf) {
                    None => rec["verdict"] = json!("ok"),
                    Some(v) => {
                        any = true;
                        rec["verdict"] = json!("counterexample");
                        rec["site"] = json!(v.site);
                        rec["height"] = json!(v.height);
                    }
                }
                writeln!(out, "{rec}")?;
            }
            any
        }
    };
    if failed {
        Err(Failure::Negative("check failed; see the counterexample record".into()))
    } else {
        Ok(())
    }
}

fn load_graph(g: &GraphArgs) -> Result<TargetGraph, Failure> {
    match &g.edges {
        Some(path) => {
            let list: EdgeList = serde_json::from_reader(BufReader::new(open(path)?))
                .map_err(|e| Failure::Usage(format!("malformed edge list {}: {e}", path.display())))?;
            Ok(TargetGraph::from_edge_list(&list)?)
        }
        None => TargetGraph::preset(&g.graph)
            .ok_or_else(|| Failure::Usage(format!("unknown graph {:?}; use K<q>, C<q>, full<q>, petersen or --edges", g.graph))),
    }
}

fn first_edge(h: &TargetGraph) -> (u8, u8) {
    h.edges().first().copied().unwrap_or((0, 0))
}

fn marker_colours(h: &TargetGraph, given: Option<(u8, u8, u8)>) -> Result<(u8, u8, u8), Failure> {
    given
        .or_else(|| h.marker_triple())
        .ok_or_else(|| Failure::Usage("graph has no vertex with two distinct neighbours".into()))
}

fn untileable(f: &TileSet, e: crate::tiling::TilingError) -> Failure {
    let mut failure = Failure::from(e);
    if let Failure::Negative(msg) = &mut failure {
        msg.push_str(&format!(
            "; tileable when all sides are multiples of M = {} or one side is at least M and the rest are multiples of M",
            f.m()
        ));
    }
    failure
}

fn join(v: &[u32], sep: &str) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn open(path: &Path) -> Result<File, Failure> {
    File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}
