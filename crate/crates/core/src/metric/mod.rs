//! Resolving sets: verification, greedy and exact metric dimension, and the
//! explicit constructions for Moore and polarity graphs.

mod constructions;
mod exact;
mod kneser;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use constructions::{
    moore_resolving, moore_resolving_default, polarity_resolving, polarity_resolving_graph,
};
pub use exact::{counting_lower_bound, metric_dimension, MetricDimension};
pub use kneser::{kneser_is_resolving, KneserResolving};

/// A landmark set together with the outcome of checking it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvingCertificate {
    pub graph_hash: String,
    pub landmarks: Vec<usize>,
    pub verified: bool,
    /// Two distinct vertices with equal distance vectors, when not verified.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_pair: Option<(usize, usize)>,
}

impl ResolvingCertificate {
    /// Re-runs the check on `g`, refusing certificates made for another graph.
    pub fn recheck(&self, g: &Graph) -> Result<ResolvingCertificate> {
        if self.graph_hash != g.hash() {
            return Err(Error::HashMismatch {
                expected: self.graph_hash.clone(),
                found: g.hash().to_string(),
            });
        }
        is_resolving(g, &self.landmarks)
    }
}

/// Checks that every vertex has a distinct vector of distances to `s`.
/// The witness is the first vertex (in index order) whose vector repeats,
/// paired with the earlier vertex it collides with.
pub fn is_resolving(g: &Graph, s: &[usize]) -> Result<ResolvingCertificate> {
    for &x in s {
        g.check_vertex(x)?;
    }
    let mut landmarks = s.to_vec();
    landmarks.sort_unstable();
    landmarks.dedup();
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::with_capacity(g.order());
    let mut witness_pair = None;
    for v in 0..g.order() {
        let key: Vec<u8> = landmarks.iter().map(|&x| g.dist(x, v)).collect();
        if let Some(&u) = seen.get(&key) {
            witness_pair = Some((u, v));
            break;
        }
        seen.insert(key, v);
    }
    Ok(ResolvingCertificate {
        graph_hash: g.hash().to_string(),
        landmarks,
        verified: witness_pair.is_none(),
        witness_pair,
    })
}

/// Partition of the vertices into classes with equal distance vectors.
#[derive(Debug, Clone)]
pub(crate) struct Classes {
    /// Class id per vertex.
    class: Vec<u32>,
    sizes: Vec<u32>,
}

impl Classes {
    pub(crate) fn new(n: usize) -> Classes {
        Classes {
            class: vec![0; n],
            sizes: if n == 0 { vec![] } else { vec![n as u32] },
        }
    }

    /// Number of vertex pairs still sharing a class.
    pub(crate) fn unresolved_pairs(&self) -> u64 {
        self.sizes
            .iter()
            .map(|&s| s as u64 * (s as u64).saturating_sub(1) / 2)
            .sum()
    }

    pub(crate) fn largest(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0) as usize
    }

    /// Refines by the distances from landmark `x`.
    pub(crate) fn refine(&self, g: &Graph, x: usize) -> Classes {
        let row = g.dist_row(x);
        let mut ids: HashMap<(u32, u8), u32> = HashMap::new();
        let mut class = Vec::with_capacity(self.class.len());
        let mut sizes = Vec::new();
        for (v, &c) in self.class.iter().enumerate() {
            let next = ids.len() as u32;
            let id = *ids.entry((c, row[v])).or_insert(next);
            if id as usize == sizes.len() {
                sizes.push(0);
            }
            sizes[id as usize] += 1;
            class.push(id);
        }
        Classes { class, sizes }
    }

    #[inline]
    pub(crate) fn same(&self, u: usize, v: usize) -> bool {
        self.class[u] == self.class[v]
    }

    /// Pairs that adding `x` would separate.
    pub(crate) fn split_gain(&self, g: &Graph, x: usize) -> u64 {
        self.unresolved_pairs() - self.refine(g, x).unresolved_pairs()
    }
}

/// Adds, one at a time, the vertex separating the most still-unresolved
/// pairs (least index on ties) until the set resolves the graph.
pub fn greedy_resolving(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut classes = Classes::new(n);
    let mut chosen = Vec::new();
    while classes.unresolved_pairs() > 0 {
        let (best, _) =
            (0..n)
                .map(|x| (x, classes.split_gain(g, x)))
                .fold(
                    (0, 0),
                    |acc, (x, gain)| if gain > acc.1 { (x, gain) } else { acc },
                );
        chosen.push(best);
        classes = classes.refine(g, best);
    }
    chosen.sort_unstable();
    chosen
}
