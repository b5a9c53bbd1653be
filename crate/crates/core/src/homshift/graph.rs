use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::HomError;

/// Maximum number of target vertices; adjacency rows are stored as `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// A finite undirected graph H, self-loops allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetGraph {
    labels: Vec<String>,
    adj: Vec<u64>,
    connected: bool,
    bipartite: bool,
}

/// Plain edge-list form used for `--edges` files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeList {
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TargetGraph {
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, HomError> {
        let labels = (0..vertex_count).map(|v| v.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, HomError> {
        let n = labels.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(HomError::GraphSize(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(HomError::VertexOutOfRange(u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut g = TargetGraph {
            labels,
            adj,
            connected: false,
            bipartite: false,
        };
        g.connected = g.compute_connected();
        g.bipartite = g.compute_bipartite();
        Ok(g)
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Self, HomError> {
        let labels = match &list.labels {
            Some(l) if l.len() == list.vertices => l.clone(),
            Some(l) => return Err(HomError::GraphSize(l.len())),
            None => (0..list.vertices).map(|v| v.to_string()).collect(),
        };
        Self::with_labels(labels, &list.edges)
    }

    /// Complete graph K_q.
    pub fn complete(q: usize) -> Self {
        let edges: Vec<_> = (0..q)
            .flat_map(|u| (u + 1..q).map(move |v| (u, v)))
            .collect();
        Self::from_edges(q, &edges).expect("valid complete graph")
    }

    /// Cycle C_q.
    pub fn cycle(q: usize) -> Self {
        let edges: Vec<_> = (0..q).map(|u| (u, (u + 1) % q)).collect();
        Self::from_edges(q, &edges).expect("valid cycle")
    }

    /// Every pair adjacent, loops included: Hom(Z^d, H) is the full shift.
    pub fn full(q: usize) -> Self {
        let edges: Vec<_> = (0..q).flat_map(|u| (u..q).map(move |v| (u, v))).collect();
        Self::from_edges(q, &edges).expect("valid full graph")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("valid petersen graph")
    }

    /// Named presets: `K<q>`, `C<q>`, `full<q>`, `petersen`.
    pub fn preset(name: &str) -> Option<Self> {
        let lower = name.to_ascii_lowercase();
        if lower == "petersen" {
            return Some(Self::petersen());
        }
        let parse = |rest: &str| rest.parse::<usize>().ok().filter(|&q| q >= 1 && q <= MAX_VERTICES);
        if let Some(rest) = lower.strip_prefix("full") {
            return parse(rest).map(Self::full);
        }
        if let Some(rest) = lower.strip_prefix('k') {
            return parse(rest).map(Self::complete);
        }
        if let Some(rest) = lower.strip_prefix('c') {
            return parse(rest).filter(|&q| q >= 3).map(Self::cycle);
        }
        None
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn adjacent(&self, u: u8, v: u8) -> bool {
        self.adj[u as usize] >> v & 1 == 1
    }

    /// Neighbourhood of `u` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, u: u8) -> u64 {
        self.adj[u as usize]
    }

    pub fn all_mask(&self) -> u64 {
        if self.vertex_count() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertex_count()) - 1
        }
    }

    pub fn neighbors(&self, u: u8) -> impl Iterator<Item = u8> + '_ {
        let m = self.adj[u as usize];
        (0..self.vertex_count() as u8).filter(move |&v| m >> v & 1 == 1)
    }

    pub fn edges(&self) -> Vec<(u8, u8)> {
        let n = self.vertex_count() as u8;
        (0..n)
            .flat_map(|u| (u..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacent(u, v))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    fn compute_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for u in 0..n {
                if frontier >> u & 1 == 1 {
                    next |= self.adj[u];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == n
    }

    fn compute_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for start in 0..n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u as u8) {
                    let v = v as usize;
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Smallest N such that walks of every length >= N join every ordered pair
    /// of vertices, i.e. the exponent of the primitive adjacency matrix.
    pub fn min_universal_path_length(&self) -> Result<usize, HomError> {
        if !self.connected || self.bipartite {
            return Err(HomError::NotPrimitive);
        }
        let n = self.vertex_count();
        let full = self.all_mask();
        // reach[u] = set of endpoints of walks of the current length from u
        let mut reach: Vec<u64> = self.adj.clone();
        // Wielandt's bound (n-1)^2 + 1 caps the search.
        let cap = (n - 1) * (n - 1) + 1;
        for len in 1..=cap.max(1) {
            if reach.iter().all(|&r| r == full) {
                return Ok(len);
            }
            reach = reach
                .iter()
                .map(|&r| {
                    let mut next = 0;
                    for v in 0..n {
                        if r >> v & 1 == 1 {
                            next |= self.adj[v];
                        }
                    }
                    next
                })
                .collect();
        }
        Err(HomError::NotPrimitive)
    }

    /// `table[l]` is the set of vertices with a walk of length `l` to `target`.
    pub(crate) fn walk_table(&self, target: u8, max_len: usize) -> Vec<u64> {
        let n = self.vertex_count();
        let mut table = Vec::with_capacity(max_len + 1);
        let mut cur = 1u64 << target;
        table.push(cur);
        for _ in 0..max_len {
            let mut next = 0;
            for v in 0..n {
                if cur >> v & 1 == 1 {
                    next |= self.adj[v];
                }
            }
            cur = next;
            table.push(cur);
        }
        table
    }

    /// Lexicographically least walk `from = u_0, ..., u_len = to`.
    pub fn least_walk(&self, from: u8, to: u8, len: usize) -> Option<Vec<u8>> {
        let table = self.walk_table(to, len);
        if table[len] >> from & 1 == 0 {
            return None;
        }
        let mut walk = vec![from];
        let mut cur = from;
        for remaining in (0..len).rev() {
            let next = self
                .neighbors(cur)
                .find(|&v| table[remaining] >> v & 1 == 1)
                .expect("walk table guarantees a continuation");
            walk.push(next);
            cur = next;
        }
        Some(walk)
    }

    /// The marker colours (v0, v1, v2): the first vertex with two distinct
    /// neighbours and its two least neighbours.
    pub fn marker_triple(&self) -> Option<(u8, u8, u8)> {
        (0..self.vertex_count() as u8).find_map(|v0| {
            let mut it = self.neighbors(v0);
            let v1 = it.next()?;
            let v2 = it.next()?;
            Some((v0, v1, v2))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universal_path_lengths() {
        assert_eq!(TargetGraph::complete(3).min_universal_path_length(), Ok(2));
        assert_eq!(TargetGraph::complete(4).min_universal_path_length(), Ok(2));
        assert_eq!(TargetGraph::cycle(5).min_universal_path_length(), Ok(4));
        assert_eq!(
            TargetGraph::cycle(4).min_universal_path_length(),
            Err(HomError::NotPrimitive)
        );
        let two_triangles =
            TargetGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert!(two_triangles.min_universal_path_length().is_err());
    }

    #[test]
    fn walk_reconstruction() {
        let k3 = TargetGraph::complete(3);
        assert_eq!(k3.least_walk(1, 1, 1), None);
        assert_eq!(k3.least_walk(1, 1, 2), Some(vec![1, 0, 1]));
        assert_eq!(k3.least_walk(1, 2, 3), Some(vec![1, 0, 1, 2]));
        let c5 = TargetGraph::cycle(5);
        let w = c5.least_walk(0, 2, 6).unwrap();
        assert_eq!(w.len(), 7);
        assert!(w.windows(2).all(|p| c5.adjacent(p[0], p[1])));
    }

    #[test]
    fn presets() {
        assert_eq!(TargetGraph::preset("K3").unwrap().edges().len(), 3);
        assert_eq!(TargetGraph::preset("C5").unwrap().edges().len(), 5);
        assert_eq!(TargetGraph::preset("petersen").unwrap().edges().len(), 15);
        assert_eq!(TargetGraph::preset("full2").unwrap().edges().len(), 3);
        assert!(TargetGraph::preset("C2").is_none());
        assert!(TargetGraph::preset("bogus").is_none());
        assert_eq!(TargetGraph::complete(3).marker_triple(), Some((0, 1, 2)));
    }
}
