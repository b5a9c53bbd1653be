//! JSON form of a tiling: `{tileset, region, placements: [[proto, offset]]}`.

use serde::{Deserialize, Serialize};

use super::cover::{Placement, Tiling};
use super::tileset::TileSet;
use crate::lattice::{Region, RegionKind, Site};
use crate::FormatError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionSpec {
    pub d: usize,
    #[serde(flatten)]
    pub kind: RegionKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sites: Option<Vec<Site>>,
}

impl RegionSpec {
    pub fn of(region: &Region) -> Self {
        RegionSpec {
            d: region.dim(),
            kind: region.kind().clone(),
            sites: matches!(region.kind(), RegionKind::General).then(|| region.sites().to_vec()),
        }
    }

    pub fn build(&self) -> Result<Region, FormatError> {
        let r = match &self.kind {
            RegionKind::BoxF { n } => Region::box_f(*n, self.d),
            RegionKind::BoxB { n } => Region::box_b(*n, self.d),
            RegionKind::Rectangle { dims, offset } => Region::rectangle(dims, *offset),
            RegionKind::General => Region::from_sites(
                self.d,
                self.sites
                    .clone()
                    .ok_or_else(|| FormatError::Invalid("general region without sites".into()))?,
            ),
        };
        r.map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TilingFile {
    pub tileset: TileSet,
    pub region: RegionSpec,
    pub placements: Vec<(usize, Site)>,
}

impl From<&Tiling> for TilingFile {
    fn from(t: &Tiling) -> Self {
        TilingFile {
            tileset: t.tileset.clone(),
            region: RegionSpec::of(&t.region),
            placements: t.placements.iter().map(|p| (p.proto, p.offset)).collect(),
        }
    }
}

impl TilingFile {
    /// Rebuilds the tiling, re-running the exact-cover validator.
    pub fn into_tiling(self) -> Result<Tiling, FormatError> {
        let region = self.region.build()?;
        let placements = self
            .placements
            .into_iter()
            .map(|(p, o)| Placement::new(p, o))
            .collect();
        Tiling::new(self.tileset, region, placements).map_err(|e| FormatError::Invalid(e.to_string()))
    }
}

pub fn to_json(t: &Tiling) -> String {
    serde_json::to_string(&TilingFile::from(t)).expect("tilings always serialize")
}

pub fn from_json(s: &str) -> Result<Tiling, FormatError> {
    serde_json::from_str::<TilingFile>(s)?.into_tiling()
}
