use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::kneser::{for_each_k_subset, KneserLabel};

/// Outcome of checking a landmark set of K(k, n) without building the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KneserResolving {
    pub k: usize,
    pub n: usize,
    pub landmarks: usize,
    pub verified: bool,
    /// Two non-landmark vertices with the same distance vector.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(KneserLabel, KneserLabel)>,
}

/// Checks a landmark set of K(k, n) for n ≥ 3k, where the diameter is 2.
///
/// A landmark sits at distance 1 from a vertex when they are disjoint and 2
/// otherwise, so a non-landmark vertex is determined by which landmarks meet
/// it: the union of the landmark sets containing each of its elements.
/// Landmarks are separated from everything by their own zero coordinate.
pub fn kneser_is_resolving(
    k: usize,
    n: usize,
    landmarks: &[KneserLabel],
) -> Result<KneserResolving> {
    if k == 0 || n < 3 * k {
        return Err(Error::KneserDiameter { k, n });
    }
    if n > KneserLabel::MAX_GROUND {
        return Err(Error::invalid(format!("ground set [{n}] too large")));
    }
    let mut sorted = landmarks.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for l in &sorted {
        if l.k() != k || l.elements().iter().any(|&e| e as usize > n) {
            return Err(Error::invalid(format!("{l} is not a vertex of K({k},{n})")));
        }
    }
    let words = sorted.len().div_ceil(64).max(1);
    // inc[e] = landmarks containing element e + 1.
    let mut inc = vec![vec![0u64; words]; n];
    for (i, l) in sorted.iter().enumerate() {
        for &e in l.elements() {
            inc[e as usize - 1][i / 64] |= 1 << (i % 64);
        }
    }
    let is_landmark: std::collections::HashSet<Vec<u16>> =
        sorted.iter().map(|l| l.elements().to_vec()).collect();

    let mut seen: HashMap<Vec<u64>, Vec<u16>> = HashMap::new();
    let mut witness = None;
    let mut elements: Vec<u16> = Vec::with_capacity(k);
    for_each_k_subset(n, k, |c| {
        elements.clear();
        elements.extend(c.iter().map(|&x| x as u16 + 1));
        if is_landmark.contains(&elements) {
            return true;
        }
        let mut key = vec![0u64; words];
        for &x in c {
            for (w, b) in key.iter_mut().zip(&inc[x]) {
                *w |= b;
            }
        }
        match seen.get(&key) {
            Some(prev) => {
                let a = KneserLabel::new(prev.clone(), n).expect("enumerated subset");
                let b = KneserLabel::new(elements.clone(), n).expect("enumerated subset");
                witness = Some((a, b));
                false
            }
            None => {
                seen.insert(key, elements.clone());
                true
            }
        }
    });
    Ok(KneserResolving {
        k,
        n,
        landmarks: sorted.len(),
        verified: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::kneser::k_subsets;
    use crate::graph::kneser_graph;
    use crate::metric::is_resolving;

    fn labels(tokens: &[&str], k: usize, n: usize) -> Vec<KneserLabel> {
        tokens
            .iter()
            .map(|t| KneserLabel::parse(t, k, n).unwrap())
            .collect()
    }

    #[test]
    fn agrees_with_distance_matrix_check() {
        // Random-ish landmark sets compared against the generic verifier.
        for (k, n) in [(2, 6), (2, 7), (3, 9)] {
            let g = kneser_graph(k, n).unwrap();
            let all = k_subsets(n, k);
            for stride in [1usize, 2, 3, 5, 7] {
                for size in [3usize, 4, 5, 6, 8] {
                    let picks: Vec<usize> = (0..size)
                        .map(|i| (i * stride * 3 + i) % all.len())
                        .collect();
                    let set: Vec<KneserLabel> = picks.iter().map(|&i| all[i].clone()).collect();
                    let fast = kneser_is_resolving(k, n, &set).unwrap();
                    let slow = is_resolving(&g, &picks).unwrap();
                    assert_eq!(fast.verified, slow.verified, "K({k},{n}) {picks:?}");
                    if let Some((a, b)) = fast.witness {
                        let (u, v) = (a.rank(n), b.rank(n));
                        assert!(picks.iter().all(|&x| g.dist(x, u) == g.dist(x, v)));
                    }
                }
            }
        }
    }

    #[test]
    fn six_set_resolves_k_2_6() {
        let s = labels(&["12", "16", "23", "34", "45", "56"], 2, 6);
        assert!(kneser_is_resolving(2, 6, &s).unwrap().verified);
    }

    #[test]
    fn too_small_sets_fail_with_witness() {
        let s = labels(&["12", "34"], 2, 6);
        let r = kneser_is_resolving(2, 6, &s).unwrap();
        assert!(!r.verified);
        assert!(r.witness.is_some());
    }

    #[test]
    fn rejects_small_ground_sets_and_bad_labels() {
        assert!(matches!(
            kneser_is_resolving(2, 5, &[]),
            Err(Error::KneserDiameter { .. })
        ));
        let wrong_k = labels(&["123"], 3, 9);
        assert!(kneser_is_resolving(2, 9, &wrong_k).is_err());
    }
}
