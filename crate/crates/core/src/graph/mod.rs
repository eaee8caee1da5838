//! Immutable simple graphs with precomputed all-pairs distances.
//!
//! Vertices are the dense integers `0..n`. Family-specific names (Kneser
//! k-subsets, projective points, pentagon/pentagram coordinates) live in the
//! optional label list and never influence adjacency logic.

mod generators;
pub mod io;
pub mod kneser;
pub mod symmetry;

use std::collections::VecDeque;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub use generators::{cycle_graph, hoffman_singleton, kneser_graph, petersen};
pub use kneser::KneserLabel;

/// Distance value stored for vertex pairs in different components.
pub const UNREACHABLE: u8 = u8::MAX;

#[derive(Debug)]
pub struct Graph {
    n: usize,
    labels: Option<Vec<String>>,
    neighbors: Vec<Vec<usize>>,
    neighbor_sets: Vec<VertexSet>,
    dist: Vec<u8>,
    edge_count: usize,
    hash: OnceLock<String>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            labels: self.labels.clone(),
            neighbors: self.neighbors.clone(),
            neighbor_sets: self.neighbor_sets.clone(),
            dist: self.dist.clone(),
            edge_count: self.edge_count,
            hash: OnceLock::new(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.neighbors == other.neighbors && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Graph> {
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::invalid(format!(
                    "label list has {} entries for {n} vertices",
                    l.len()
                )));
            }
        }
        let mut neighbor_sets = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            neighbor_sets[u].insert(v);
            neighbor_sets[v].insert(u);
        }
        Ok(Self::from_neighbor_sets(neighbor_sets, labels))
    }

    /// Builds a graph from a symmetric, irreflexive adjacency predicate.
    pub fn from_fn(
        n: usize,
        labels: Option<Vec<String>>,
        adjacent: impl Fn(usize, usize) -> bool,
    ) -> Graph {
        let mut neighbor_sets = vec![VertexSet::empty(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    neighbor_sets[u].insert(v);
                    neighbor_sets[v].insert(u);
                }
            }
        }
        Self::from_neighbor_sets(neighbor_sets, labels)
    }

    fn from_neighbor_sets(neighbor_sets: Vec<VertexSet>, labels: Option<Vec<String>>) -> Graph {
        let n = neighbor_sets.len();
        let neighbors: Vec<Vec<usize>> = neighbor_sets.iter().map(VertexSet::to_vec).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        let dist = bfs_all_pairs(&neighbors);
        Graph {
            n,
            labels,
            neighbors,
            neighbor_sets,
            dist,
            edge_count,
            hash: OnceLock::new(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, its index otherwise.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves a vertex token: label match first, then a plain index.
    pub fn vertex_by_token(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == token) {
                return Ok(i);
            }
        }
        match token.parse::<usize>() {
            Ok(v) if v < self.n => Ok(v),
            Ok(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            }),
            Err(_) => Err(Error::invalid(format!("unknown vertex `{token}`"))),
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.neighbor_sets[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.neighbor_sets[v].clone();
        s.insert(v);
        s
    }

    /// Vertices at distance exactly 2 from `v`.
    pub fn second_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&w| self.dist(v, w) == 2))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbor_sets[u].contains(v)
    }

    /// Shortest-path distance, or [`UNREACHABLE`].
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u8 {
        self.dist[u * self.n + v]
    }

    /// Row of the distance matrix for `u`.
    #[inline]
    pub fn dist_row(&self, u: usize) -> &[u8] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.dist_row(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest finite-or-not distance; `None` when disconnected.
    pub fn diameter(&self) -> Option<u8> {
        if !self.is_connected() {
            return None;
        }
        Some(self.dist.iter().copied().max().unwrap_or(0))
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|nb| nb.len() == d).then_some(d)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// SHA-256 over the canonical structure (order and sorted edge list).
    /// Labels do not contribute, so relabelled copies share a hash.
    pub fn hash(&self) -> &str {
        self.hash.get_or_init(|| {
            let mut h = Sha256::new();
            h.update(format!("n={};", self.n).as_bytes());
            for (u, v) in self.edges() {
                h.update(format!("{u}-{v};").as_bytes());
            }
            h.finalize().iter().map(|b| format!("{b:02x}")).collect()
        })
    }
}

fn bfs_all_pairs(neighbors: &[Vec<usize>]) -> Vec<u8> {
    let n = neighbors.len();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let d = row[x];
            for &y in &neighbors[x] {
                if row[y] == UNREACHABLE {
                    row[y] = d.saturating_add(1).min(UNREACHABLE - 1);
                    queue.push_back(y);
                }
            }
        }
    }
    dist
}

/// Length of a shortest cycle, or `None` for forests.
pub fn graph_girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g.order(), |v| g.neighbors(v).iter().copied())
}

/// Shortest cycle in a simple graph given by a neighbor function.
///
/// BFS from every vertex; a non-tree edge `(x, y)` closes a walk of length
/// `d(x) + d(y) + 1`, and the minimum over all roots is the girth.
pub(crate) fn shortest_cycle<I, F>(n: usize, neighbors: F) -> Option<usize>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for y in neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                    if best <= 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Returns `k` when `g` is a k-regular graph of diameter 2, girth 5 and
/// order k² + 1, i.e. a Moore graph of diameter 2.
pub fn is_moore_diam2(g: &Graph) -> Option<usize> {
    let k = g.regular_degree()?;
    if g.order() != k * k + 1 || g.diameter() != Some(2) {
        return None;
    }
    (graph_girth(g) == Some(5)).then_some(k)
}

/// True iff some two distinct vertices have at least two common neighbors.
pub fn has_c4(g: &Graph) -> bool {
    (0..g.order()).any(|u| {
        (u + 1..g.order()).any(|v| g.neighbor_set(u).intersection_len(g.neighbor_set(v)) >= 2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Floyd–Warshall on the edge list, independent of the BFS fill.
    fn naive_distances(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.order();
        let inf = u32::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for (u, row) in d.iter_mut().enumerate() {
            row[u] = 0;
        }
        for (u, v) in g.edges() {
            d[u][v] = 1;
            d[v][u] = 1;
        }
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][m] + d[m][j] < d[i][j] {
                        d[i][j] = d[i][m] + d[m][j];
                    }
                }
            }
        }
        d
    }

    fn corpus() -> Vec<Graph> {
        vec![
            cycle_graph(5).unwrap(),
            cycle_graph(6).unwrap(),
            cycle_graph(11).unwrap(),
            petersen(),
            hoffman_singleton(),
            kneser_graph(2, 6).unwrap(),
            kneser_graph(2, 4).unwrap(),
            kneser_graph(3, 7).unwrap(),
            Graph::from_edges(5, &[(0, 1), (2, 3)], None).unwrap(),
        ]
    }

    #[test]
    fn distances_match_floyd_warshall() {
        for g in corpus() {
            let d = naive_distances(&g);
            for (u, row) in d.iter().enumerate() {
                for (v, &duv) in row.iter().enumerate() {
                    let expected = if duv >= u32::MAX / 4 {
                        UNREACHABLE
                    } else {
                        duv as u8
                    };
                    assert_eq!(g.dist(u, v), expected, "({u},{v})");
                }
            }
        }
    }

    #[test]
    fn distance_one_iff_adjacent() {
        for g in corpus() {
            for u in 0..g.order() {
                assert_eq!(g.dist(u, u), 0);
                for v in 0..g.order() {
                    assert_eq!(g.dist(u, v) == 1, g.adjacent(u, v));
                    assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                }
                assert!(!g.adjacent(u, u));
            }
        }
    }

    #[test]
    fn cycle_properties() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.regular_degree(), Some(2));
        assert_eq!(graph_girth(&c5), Some(5));
        assert_eq!(c5.diameter(), Some(2));
        assert_eq!(is_moore_diam2(&c5), Some(2));

        let c6 = cycle_graph(6).unwrap();
        assert_eq!(c6.diameter(), Some(3));
        assert_eq!(is_moore_diam2(&c6), None);
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn girth_values() {
        assert_eq!(graph_girth(&petersen()), Some(5));
        assert_eq!(graph_girth(&hoffman_singleton()), Some(5));
        assert_eq!(graph_girth(&kneser_graph(2, 6).unwrap()), Some(3));
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)], None).unwrap();
        assert_eq!(graph_girth(&path), None);
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(graph_girth(&c4), Some(4));
    }

    #[test]
    fn moore_recognition() {
        assert_eq!(is_moore_diam2(&petersen()), Some(3));
        assert_eq!(is_moore_diam2(&hoffman_singleton()), Some(7));
        assert_eq!(is_moore_diam2(&kneser_graph(2, 6).unwrap()), None);
    }

    #[test]
    fn c4_detection() {
        assert!(!has_c4(&petersen()));
        assert!(!has_c4(&hoffman_singleton()));
        assert!(has_c4(&kneser_graph(2, 6).unwrap()));
        assert!(has_c4(&cycle_graph(4).unwrap()));
    }

    #[test]
    fn moore_implies_c4_free_and_order() {
        for g in corpus() {
            if let Some(k) = is_moore_diam2(&g) {
                assert!(!has_c4(&g));
                assert_eq!(g.order(), k * k + 1);
            }
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)], None).is_err());
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)], None),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
        assert!(Graph::from_edges(3, &[(0, 1)], Some(vec!["a".into()])).is_err());
    }

    #[test]
    fn hash_ignores_labels_but_not_structure() {
        let a = Graph::from_edges(3, &[(0, 1)], None).unwrap();
        let b = Graph::from_edges(
            3,
            &[(1, 0), (0, 1)],
            Some(vec!["x".into(), "y".into(), "z".into()]),
        )
        .unwrap();
        let c = Graph::from_edges(3, &[(1, 2)], None).unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_ne!(a.hash(), c.hash());
        assert_eq!(a.hash().len(), 64);
    }

    #[test]
    fn token_resolution_prefers_labels() {
        let g = kneser_graph(2, 6).unwrap();
        assert_eq!(g.vertex_by_token("12").unwrap(), 0);
        assert_eq!(g.vertex_by_token("56").unwrap(), 14);
        assert_eq!(g.vertex_by_token("3").unwrap(), 3);
        assert!(g.vertex_by_token("99").is_err());
        assert!(g.vertex_by_token("ab").is_err());
    }
}
