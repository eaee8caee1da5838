//! Hypergraphs on [n], detection vectors and detectability.
//!
//! Hypergraph vertices are 1-based (`1..=n`) to line up with Kneser labels;
//! a k-uniform hypergraph on [n] and a vertex subset of K(k, n) are the same
//! list of k-sets.

mod gadget;
mod kneser;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::kneser::{binomial, for_each_k_subset, GroundMask};
use crate::graph::{shortest_cycle, KneserLabel};

pub use gadget::{
    cache_dir, default_regularity, gadget_lower_bound, load_cached_gadget, search_girth5_gadget,
    store_gadget, Gadget, GadgetSearch, MAX_GADGET_ORDER,
};
pub use kneser::{
    check_degree_properties, hypergraph_to_resolving, kneser_resolving_cover,
    resolving_to_hypergraph, Cover, DegreeReport, DegreeViolation,
};

/// Default cap on C(n, k')² for [`is_detectable`].
pub const DEFAULT_DETECT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    pub n: usize,
    pub edges: Vec<Vec<u16>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Detection {
    Zero,
    One,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DetectionVector {
    pub entries: Vec<Detection>,
}

/// Outcome of the exhaustive detectability check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detectability {
    pub detectable: bool,
    /// Two distinct k'-sets with equal detection vectors, when not detectable.
    pub witness: Option<(Vec<u16>, Vec<u16>)>,
}

impl Hypergraph {
    /// Validates and sorts each edge. Edges must be nonempty subsets of [n]
    /// without repeated elements; repeated edges are allowed (see
    /// [`duplicate_edges`](Self::duplicate_edges)).
    pub fn new(n: usize, edges: Vec<Vec<u16>>) -> Result<Hypergraph> {
        if n > KneserLabel::MAX_GROUND {
            return Err(Error::invalid(format!(
                "hypergraphs are limited to {} vertices",
                KneserLabel::MAX_GROUND
            )));
        }
        let mut out = Vec::with_capacity(edges.len());
        for mut e in edges {
            if e.is_empty() {
                return Err(Error::invalid("empty hyperedge"));
            }
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("hyperedge {e:?} repeats a vertex")));
            }
            if let Some(&v) = e.iter().find(|&&v| v == 0 || v as usize > n) {
                return Err(Error::invalid(format!(
                    "hyperedge vertex {v} outside [1, {n}]"
                )));
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    /// The edge set of a simple graph on `0..n`, shifted to [n].
    pub fn from_graph(g: &crate::graph::Graph) -> Hypergraph {
        let edges = g
            .edges()
            .into_iter()
            .map(|(u, v)| vec![u as u16 + 1, v as u16 + 1])
            .collect();
        Hypergraph {
            n: g.order(),
            edges,
        }
    }

    pub fn from_json(text: &str) -> Result<Hypergraph> {
        let h: Hypergraph = serde_json::from_str(text)?;
        Hypergraph::new(h.n, h.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("hypergraph JSON serializes")
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Largest hyperedge cardinality (0 with no edges).
    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(k)` when every edge has exactly k vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Hyperedge degree of each vertex, indexed `0..n` for vertices `1..=n`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v as usize - 1] += 1;
            }
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// `Some(r)` when every vertex lies in exactly r edges.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        let r = *d.first()?;
        d.iter().all(|&x| x == r).then_some(r)
    }

    /// Index pairs of identical edges.
    pub fn duplicate_edges(&self) -> Vec<(usize, usize)> {
        let mut seen: HashMap<&[u16], usize> = HashMap::new();
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(&j) = seen.get(e.as_slice()) {
                out.push((j, i));
            } else {
                seen.insert(e, i);
            }
        }
        out
    }

    pub(crate) fn masks(&self) -> Vec<GroundMask> {
        self.edges.iter().map(|e| mask_of(e)).collect()
    }

    /// True when some edge contains both `u` and `v` (1-based).
    pub fn adjacent(&self, u: u16, v: u16) -> bool {
        u != v && self.edges.iter().any(|e| e.contains(&u) && e.contains(&v))
    }

    fn check_subset(&self, b: &[u16]) -> Result<()> {
        if let Some(&v) = b.iter().find(|&&v| v == 0 || v as usize > self.n) {
            return Err(Error::invalid(format!(
                "vertex {v} outside [1, {}]",
                self.n
            )));
        }
        Ok(())
    }
}

pub(crate) fn mask_of(vertices: &[u16]) -> GroundMask {
    let mut m = GroundMask::default();
    for &v in vertices {
        m.insert(v);
    }
    m
}

#[inline]
fn classify(edge: &GroundMask, b: &GroundMask, full: usize) -> Detection {
    match edge.intersection_len(b) as usize {
        0 => Detection::Zero,
        c if c == full => Detection::Full,
        _ => Detection::One,
    }
}

/// Per-edge record of how `b` meets each hyperedge: no vertex, some vertex,
/// or as many vertices as the largest hyperedge has.
pub fn detection_vector(h: &Hypergraph, b: &[u16]) -> Result<DetectionVector> {
    h.check_subset(b)?;
    let bm = mask_of(b);
    let full = h.rank();
    Ok(DetectionVector {
        entries: h
            .edges
            .iter()
            .map(|e| classify(&mask_of(e), &bm, full))
            .collect(),
    })
}

/// Exhaustive k'-detectability with the default budget.
pub fn is_detectable(h: &Hypergraph, k_prime: usize) -> Result<Detectability> {
    is_detectable_with_budget(h, k_prime, DEFAULT_DETECT_BUDGET)
}

/// Hashes the detection vector of every k'-subset of [n]. The witness is the
/// first collision in lexicographic order of the later subset. Refuses with
/// [`Error::BudgetExhausted`] when C(n, k')² exceeds `budget`.
pub fn is_detectable_with_budget(
    h: &Hypergraph,
    k_prime: usize,
    budget: u128,
) -> Result<Detectability> {
    let count = binomial(h.n, k_prime);
    if count.saturating_mul(count) > budget {
        return Err(Error::BudgetExhausted(format!(
            "C({}, {k_prime})^2 = {} exceeds the detectability budget {budget}",
            h.n,
            count.saturating_mul(count)
        )));
    }
    let masks = h.masks();
    let full = h.rank();
    let words = (2 * masks.len()).div_ceil(64).max(1);
    let mut seen: HashMap<Vec<u64>, Vec<u16>> = HashMap::with_capacity(count as usize);
    let mut witness = None;
    for_each_k_subset(h.n, k_prime, |c| {
        let b: Vec<u16> = c.iter().map(|&x| x as u16 + 1).collect();
        let bm = mask_of(&b);
        let mut key = vec![0u64; words];
        for (i, m) in masks.iter().enumerate() {
            let code = match classify(m, &bm, full) {
                Detection::Zero => 0u64,
                Detection::One => 1,
                Detection::Full => 2,
            };
            key[2 * i / 64] |= code << (2 * i % 64);
        }
        match seen.get(&key) {
            Some(prev) => {
                witness = Some((prev.clone(), b));
                false
            }
            None => {
                seen.insert(key, b);
                true
            }
        }
    });
    Ok(Detectability {
        detectable: witness.is_none(),
        witness,
    })
}

/// Berge girth: the shortest cycle v₁e₁v₂…v_ℓe_ℓ with distinct vertices and
/// pairwise-distinct hyperedges, computed as half the girth of the
/// vertex–edge incidence graph. `None` when acyclic.
pub fn berge_girth(h: &Hypergraph) -> Option<usize> {
    let n = h.n;
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); n + h.edges.len()];
    for (i, e) in h.edges.iter().enumerate() {
        for &v in e {
            incidence[v as usize - 1].push(n + i);
            incidence[n + i].push(v as usize - 1);
        }
    }
    shortest_cycle(incidence.len(), |x| incidence[x].iter().copied()).map(|c| c / 2)
}

/// Sufficient condition for k'-detectability: H k-uniform, k' ≤ k, minimum
/// degree at least k'/2 + 1 and Berge girth at least 5. `false` is
/// inconclusive.
pub fn certify_detectable(h: &Hypergraph, k_prime: usize) -> Result<bool> {
    let k = h
        .uniformity()
        .ok_or_else(|| Error::invalid("certificate requires a uniform hypergraph"))?;
    if k_prime > k {
        return Err(Error::invalid(format!(
            "k' = {k_prime} exceeds the uniformity {k}"
        )));
    }
    let degree_ok = 2 * h.min_degree() >= k_prime + 2;
    Ok(degree_ok && berge_girth(h).is_none_or(|g| g >= 5))
}
