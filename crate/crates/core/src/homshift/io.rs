//! Line-delimited JSON for pattern sets: one header record, then one
//! row-major value array per pattern.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::pattern::{Pattern, PatternSet};
use crate::lattice::{Region, RegionKind, Site};
use crate::FormatError;

pub const PATTERN_FORMAT: &str = "subshift-lab/patterns";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternHeader {
    pub format: String,
    pub d: usize,
    pub region: RegionKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sites: Option<Vec<Site>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    /// Decimal string so arbitrarily large counts survive the round trip.
    pub count: String,
    pub seed: u64,
}

#[derive(Serialize, Deserialize)]
struct Record {
    values: Vec<u8>,
}

impl PatternHeader {
    pub fn new(region: &Region, labels: &[String], count: usize, seed: u64) -> Self {
        let n = match region.kind() {
            RegionKind::BoxF { n } | RegionKind::BoxB { n } => Some(*n),
            _ => None,
        };
        let sites = matches!(region.kind(), RegionKind::General).then(|| region.sites().to_vec());
        PatternHeader {
            format: PATTERN_FORMAT.to_string(),
            d: region.dim(),
            region: region.kind().clone(),
            sites,
            n,
            labels: labels.to_vec(),
            family: None,
            count: count.to_string(),
            seed,
        }
    }

    pub fn region(&self) -> Result<Region, FormatError> {
        let r = match &self.region {
            RegionKind::BoxF { n } => Region::box_f(*n, self.d),
            RegionKind::BoxB { n } => Region::box_b(*n, self.d),
            RegionKind::Rectangle { dims, offset } => Region::rectangle(dims, *offset),
            RegionKind::General => {
                let sites = self
                    .sites
                    .clone()
                    .ok_or_else(|| FormatError::Invalid("general region without sites".into()))?;
                Region::from_sites(self.d, sites)
            }
        };
        r.map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

pub fn write_patterns<W: Write>(
    mut w: W,
    header: &PatternHeader,
    patterns: impl IntoIterator<Item = impl AsRef<[u8]>>,
) -> Result<(), FormatError> {
    serde_json::to_writer(&mut w, header)?;
    w.write_all(b"\n")?;
    for p in patterns {
        serde_json::to_writer(
            &mut w,
            &Record {
                values: p.as_ref().to_vec(),
            },
        )?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_set<W: Write>(
    w: W,
    set: &PatternSet,
    labels: &[String],
    seed: u64,
    family: Option<&str>,
) -> Result<(), FormatError> {
    let mut header = PatternHeader::new(set.region(), labels, set.len(), seed);
    header.family = family.map(str::to_string);
    write_patterns(w, &header, set.raw())
}

pub fn read_patterns<R: BufRead>(r: R) -> Result<(PatternHeader, Vec<Pattern>), FormatError> {
    let mut lines = r.lines();
    let first = lines
        .next()
        .ok_or_else(|| FormatError::Invalid("empty pattern file".into()))??;
    let header: PatternHeader = serde_json::from_str(&first)?;
    if header.format != PATTERN_FORMAT {
        return Err(FormatError::Invalid(format!("unknown format {:?}", header.format)));
    }
    let region = header.region()?;
    let mut out = Vec::new();
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: Record = serde_json::from_str(&line)?;
        let p = Pattern::new(region.clone(), rec.values)
            .map_err(|e| FormatError::Invalid(e.to_string()))?;
        out.push(p);
    }
    Ok((header, out))
}
