use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "subshift-lab", version, about = "Pattern families, tilings and counting engines for Z^d subshifts")]
pub struct Cli {
    /// Worker threads; 0 uses one per core. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Seed recorded in every output header and used by all samplers.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Search-node budget [env: SUBSHIFT_LAB_BUDGET, default 2e9].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: Option<u64>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Format of tabular output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Named target graph: K<q>, C<q>, full<q>, petersen.
    #[arg(long, default_value = "K3", conflicts_with = "edges")]
    pub graph: String,
    /// JSON edge list {"vertices": q, "edges": [[u, v], ...]}.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Hom(F_n, H)
    Box,
    /// checkerboard-bounded patterns on F_n
    Checker,
    /// marker patterns on F_{n+1}
    Tilde,
    /// shell-periodic patterns on F_n
    Hat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    Path,
    Embed,
    Hat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundaryArg {
    Free,
    Periodic,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a pattern family to a pattern file.
    Enumerate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Family::Box)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Boundary edge v0,v1 for the checker family.
        #[arg(long, value_parser = parse_pair)]
        edge: Option<(u8, u8)>,
        /// Marker colours v0,v1,v2 for the tilde family.
        #[arg(long, value_parser = parse_triple)]
        marker: Option<(u8, u8, u8)>,
    },
    /// Apply an extension lemma to every pattern of a pattern file.
    Extend {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        lemma: Lemma,
        #[arg(long)]
        k: u32,
        /// Source boundary edge (path lemma).
        #[arg(long, value_parser = parse_pair)]
        from: Option<(u8, u8)>,
        /// Target boundary edge (path and embed lemmas).
        #[arg(long, value_parser = parse_pair)]
        to: Option<(u8, u8)>,
    },
    /// Fill a box around prescribed blocks: tilings with --tileset, patterns otherwise.
    Fill {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        tileset: Option<String>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// JSON list of {"at": [...], "tiling": {...}} or {"at": [...], "values": [...]}.
        #[arg(long)]
        blocks: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        base: Option<(u8, u8)>,
        #[arg(long, value_parser = parse_pair)]
        target: Option<(u8, u8)>,
    },
    /// Tile a rectangle offset + B(dims) with a coprime tile set.
    Tile {
        #[arg(long)]
        tileset: String,
        /// Side lengths, e.g. 4x6.
        #[arg(long, value_parser = parse_dims)]
        dims: Dims,
        /// Check the produced tiling with the exact-cover validator.
        #[arg(long)]
        validate: bool,
    },
    /// Exact counts of tilings (--tileset --dims) or homomorphisms (--n).
    Count {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, conflicts_with = "n")]
        tileset: Option<String>,
        #[arg(long, value_parser = parse_dims, requires = "tileset")]
        dims: Option<Dims>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Count on the torus (Z/2nZ)^d instead of F_n.
        #[arg(long)]
        torus: bool,
    },
    /// Entropy tables.
    #[command(subcommand)]
    Entropy(EntropyCmd),
    /// Machine-checkable verdicts.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Height cocycles of sampled or given 3-colourings.
    Height {
        /// Pattern file of 3-colourings; sampled on F_n when absent.
        #[arg(long, conflicts_with = "samples")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        samples: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum EntropyCmd {
    /// Domino tiling counts of m x n rectangles, 1 <= m <= n <= max.
    Dimers {
        #[arg(long, default_value_t = 8)]
        max: u32,
    },
    /// Strip entropies log(lambda_w)/w.
    Strips {
        #[command(flatten)]
        graph: GraphArgs,
        /// Width range a..b (inclusive) or list a,b,c.
        #[arg(long, value_parser = parse_range, default_value = "1..8")]
        widths: Widths,
        #[arg(long, value_enum, default_value_t = BoundaryArg::Free)]
        boundary: BoundaryArg,
    },
    /// Counts and exponents of the finite entropy ratio bounds.
    Ratio {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        nmax: u32,
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Marker spacing of the tilde family on F_n, or of the marker tilings for window F_n.
    Marker {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        tileset: Option<String>,
        /// Window radius: checks that C̃_n occurrences are F_{n-1}-spaced.
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Interior tilings per prototile pair (tilings only).
        #[arg(long, default_value_t = 2)]
        interiors: usize,
    },
    /// Uniform filling window check.
    Ufp {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long = "M")]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        buffer: u32,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Check all pattern pairs instead of the targeted K3 pair.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Re-validate a tiling file.
    Tiling {
        #[arg(long)]
        file: PathBuf,
    },
    /// Lipschitz bound for the height of every pattern in a pattern file.
    Lipschitz {
        #[arg(long)]
        input: PathBuf,
    },
}

fn parse_pair(s: &str) -> Result<(u8, u8), String> {
    match parse_list(s)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(format!("expected two colours v0,v1, got {s:?}")),
    }
}

fn parse_triple(s: &str) -> Result<(u8, u8, u8), String> {
    match parse_list(s)?.as_slice() {
        [a, b, c] => Ok((*a, *b, *c)),
        _ => Err(format!("expected three colours v0,v1,v2, got {s:?}")),
    }
}

fn parse_list(s: &str) -> Result<Vec<u8>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u8>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

/// Side lengths such as `4x6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dims(pub Vec<u32>);

/// Strip widths such as `1..8` or `2,4,6`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Widths(pub Vec<u32>);

pub(crate) fn parse_dims(s: &str) -> Result<Dims, String> {
    let dims = s
        .split(['x', 'X'])
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if dims.iter().any(|&x| x == 0) {
        return Err("side lengths must be positive".into());
    }
    Ok(Dims(dims))
}

pub(crate) fn parse_range(s: &str) -> Result<Widths, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    let v: Vec<u32> = match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            (a..=b).collect()
        }
        None => s.split(',').map(num).collect::<Result<_, _>>()?,
    };
    if v.is_empty() || v.contains(&0) {
        return Err(format!("empty or zero width in {s:?}"));
    }
    Ok(Widths(v))
}
