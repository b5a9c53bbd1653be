use serde::{Deserialize, Serialize};

use super::TilingError;
use crate::lattice::check_dim;

/// A finite family of rectangular prototiles T_i = {1..i_1} x ... x {1..i_d}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct TileSet {
    protos: Vec<Vec<u32>>,
    m: u64,
    coprime_axes: Vec<bool>,
}

impl TileSet {
    pub fn new(protos: Vec<Vec<u32>>) -> Result<Self, TilingError> {
        let Some(first) = protos.first() else {
            return Err(TilingError::EmptyTileSet);
        };
        let d = first.len();
        check_dim(d)?;
        for p in &protos {
            if p.len() != d || p.iter().any(|&s| s == 0) {
                return Err(TilingError::BadPrototile(p.clone()));
            }
        }
        for (i, p) in protos.iter().enumerate() {
            if protos[..i].contains(p) {
                return Err(TilingError::BadPrototile(p.clone()));
            }
        }
        let m = protos.iter().flatten().map(|&s| s as u64).product();
        let coprime_axes = (0..d)
            .map(|t| protos.iter().fold(0, |g, p| gcd(g, p[t] as u64)) == 1)
            .collect();
        Ok(TileSet {
            protos,
            m,
            coprime_axes,
        })
    }

    /// Dominoes in Z^d: the tiles 1 + e_t, listed for t = d, ..., 1 so that
    /// d = 2 gives [(1,2), (2,1)].
    pub fn dominoes(d: usize) -> Result<Self, TilingError> {
        check_dim(d)?;
        let protos = (0..d)
            .rev()
            .map(|t| (0..d).map(|s| if s == t { 2 } else { 1 }).collect())
            .collect();
        TileSet::new(protos)
    }

    /// `dominoes`, `dominoes<d>`, or an explicit list like `1x2,2x1`.
    pub fn parse(spec: &str) -> Result<Self, TilingError> {
        let s = spec.trim().to_ascii_lowercase();
        if s == "dominoes" {
            return TileSet::dominoes(2);
        }
        if let Some(rest) = s.strip_prefix("dominoes") {
            let d = rest
                .parse()
                .map_err(|_| TilingError::Parse(spec.to_string()))?;
            return TileSet::dominoes(d);
        }
        let protos = s
            .split(',')
            .map(|tile| {
                tile.split('x')
                    .map(|n| n.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| TilingError::Parse(spec.to_string()))?;
        TileSet::new(protos)
    }

    pub fn dim(&self) -> usize {
        self.protos[0].len()
    }

    pub fn len(&self) -> usize {
        self.protos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.protos.is_empty()
    }

    pub fn protos(&self) -> &[Vec<u32>] {
        &self.protos
    }

    pub fn proto(&self, i: usize) -> &[u32] {
        &self.protos[i]
    }

    /// Product of all side lengths of all prototiles.
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn coprime_axes(&self) -> &[bool] {
        &self.coprime_axes
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime_axes.iter().all(|&c| c)
    }

    pub fn volume(&self, i: usize) -> u64 {
        self.protos[i].iter().map(|&s| s as u64).product()
    }
}

impl TryFrom<Vec<Vec<u32>>> for TileSet {
    type Error = TilingError;
    fn try_from(v: Vec<Vec<u32>>) -> Result<Self, Self::Error> {
        TileSet::new(v)
    }
}

impl From<TileSet> for Vec<Vec<u32>> {
    fn from(t: TileSet) -> Self {
        t.protos
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Coprimality of every coordinate projection.
pub fn is_coprime(f: &TileSet) -> bool {
    f.is_coprime()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprimality() {
        let dom = TileSet::dominoes(2).unwrap();
        assert_eq!(dom.protos(), &[vec![1, 2], vec![2, 1]]);
        assert_eq!(dom.m(), 4);
        assert!(is_coprime(&dom));
        assert!(!is_coprime(&TileSet::parse("2x2,4x2").unwrap()));
        assert!(is_coprime(&TileSet::parse("3x1,5x1").unwrap()));
        assert_eq!(TileSet::dominoes(3).unwrap().m(), 8);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(TileSet::new(vec![]).is_err());
        assert!(TileSet::new(vec![vec![1, 2], vec![3]]).is_err());
        assert!(TileSet::new(vec![vec![0, 2]]).is_err());
        assert!(TileSet::new(vec![vec![1, 2], vec![1, 2]]).is_err());
        assert!(TileSet::parse("1y2").is_err());
    }
}
