//! Translation between k-uniform hypergraphs on [n] and vertex subsets of
//! K(k, n), the degree-sum conditions, and the gadget cover construction.

use serde::Serialize;

use super::{certify_detectable, Hypergraph};
use crate::error::{Error, Result};
use crate::graph::KneserLabel;

fn require_diameter_two(k: usize, n: usize) -> Result<()> {
    if k == 0 || n < 3 * k {
        return Err(Error::KneserDiameter { k, n });
    }
    if n > KneserLabel::MAX_GROUND {
        return Err(Error::invalid(format!("ground set [{n}] too large")));
    }
    Ok(())
}

/// Reads each hyperedge as a vertex of K(k, n); returns vertex indices in
/// edge order. The caller is responsible for detectability.
pub fn hypergraph_to_resolving(h: &Hypergraph, k: usize, n: usize) -> Result<Vec<usize>> {
    require_diameter_two(k, n)?;
    if h.n != n {
        return Err(Error::invalid(format!(
            "hypergraph is on [{}], expected [{n}]",
            h.n
        )));
    }
    h.edges
        .iter()
        .map(|e| {
            if e.len() != k {
                return Err(Error::invalid(format!("hyperedge {e:?} is not a {k}-set")));
            }
            Ok(KneserLabel::new(e.clone(), n)?.rank(n))
        })
        .collect()
}

/// Reads each vertex of K(k, n) in `s` as a hyperedge on [n].
pub fn resolving_to_hypergraph(s: &[usize], k: usize, n: usize) -> Result<Hypergraph> {
    require_diameter_two(k, n)?;
    let edges = s
        .iter()
        .map(|&v| Ok(KneserLabel::unrank(v, k, n)?.elements().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(n, edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeViolation {
    pub u: u16,
    pub v: u16,
    pub adjacent: bool,
    pub degree_sum: usize,
    pub required: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub pairs_checked: usize,
    pub violations: Vec<DegreeViolation>,
}

impl DegreeReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks d(u) + d(v) ≥ k for non-adjacent pairs and ≥ k + 2 for adjacent
/// pairs, which every k-detectable hypergraph without singleton edges
/// satisfies.
pub fn check_degree_properties(h: &Hypergraph, k: usize) -> Result<DegreeReport> {
    require_diameter_two(k, h.n)?;
    if let Some(e) = h.edges.iter().find(|e| e.len() == 1) {
        return Err(Error::invalid(format!("singleton hyperedge {e:?}")));
    }
    let d = h.degrees();
    let n = h.n;
    let mut adjacent = vec![false; n * n];
    for e in &h.edges {
        for &a in e {
            for &b in e {
                adjacent[(a as usize - 1) * n + b as usize - 1] = true;
            }
        }
    }
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for u in 0..n {
        for v in u + 1..n {
            pairs_checked += 1;
            let adj = adjacent[u * n + v];
            let required = if adj { k + 2 } else { k };
            let degree_sum = d[u] + d[v];
            if degree_sum < required {
                violations.push(DegreeViolation {
                    u: u as u16 + 1,
                    v: v as u16 + 1,
                    adjacent: adj,
                    degree_sum,
                    required,
                });
            }
        }
    }
    Ok(DegreeReport {
        pairs_checked,
        violations,
    })
}

/// Result of placing gadget copies over a cover of [n].
#[derive(Debug, Clone, Serialize)]
pub struct Cover {
    pub k: usize,
    pub n: usize,
    /// Gadget order.
    pub m: usize,
    /// First vertex of each part; part i is `start..start + m`.
    pub part_starts: Vec<u16>,
    /// Union of the gadget copies with repeated edges removed.
    pub hypergraph: Hypergraph,
    /// The same edges as K(k, n) vertex indices.
    pub landmarks: Vec<usize>,
}

/// Covers [n] by ⌈n/m⌉ blocks of m consecutive elements, the last one
/// shifted back to end at n, and places a copy of the gadget on each.
pub fn kneser_resolving_cover(k: usize, n: usize, gadget: &Hypergraph) -> Result<Cover> {
    require_diameter_two(k, n)?;
    let m = gadget.n;
    if m == 0 || m > n {
        return Err(Error::invalid(format!(
            "gadget order {m} must be in 1..={n}"
        )));
    }
    if gadget.uniformity() != Some(k) {
        return Err(Error::invalid(format!("gadget is not {k}-uniform")));
    }
    if !certify_detectable(gadget, k)? {
        return Err(Error::invalid(
            "gadget fails the degree/girth certificate for k-detectability",
        ));
    }
    let r = n.div_ceil(m);
    let part_starts: Vec<u16> = (0..r).map(|i| ((i * m).min(n - m) + 1) as u16).collect();
    let mut edges: Vec<Vec<u16>> = Vec::with_capacity(r * gadget.edge_count());
    let mut seen = std::collections::HashSet::new();
    for &start in &part_starts {
        for e in &gadget.edges {
            let mut shifted: Vec<u16> = e.iter().map(|&v| v + start - 1).collect();
            shifted.sort_unstable();
            if seen.insert(shifted.clone()) {
                edges.push(shifted);
            }
        }
    }
    let hypergraph = Hypergraph::new(n, edges)?;
    let landmarks = hypergraph_to_resolving(&hypergraph, k, n)?;
    Ok(Cover {
        k,
        n,
        m,
        part_starts,
        hypergraph,
        landmarks,
    })
}
