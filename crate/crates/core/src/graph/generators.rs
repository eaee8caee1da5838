use super::kneser::{k_subsets, KneserLabel};
use super::Graph;
use crate::error::{Error, Result};

/// The cycle C_n.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges, None)
}

/// The Kneser graph K(k, n): k-subsets of [n] in lexicographic order,
/// adjacent when disjoint.
pub fn kneser_graph(k: usize, n: usize) -> Result<Graph> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!(
            "Kneser graph K({k},{n}) needs 1 <= k < n"
        )));
    }
    if n > KneserLabel::MAX_GROUND {
        return Err(Error::invalid(format!(
            "Kneser ground set [{n}] exceeds the supported maximum {}",
            KneserLabel::MAX_GROUND
        )));
    }
    let verts = k_subsets(n, k);
    let masks: Vec<_> = verts.iter().map(KneserLabel::mask).collect();
    let labels = verts.iter().map(|l| l.display(n)).collect();
    Ok(Graph::from_fn(verts.len(), Some(labels), |u, v| {
        masks[u].is_disjoint(&masks[v])
    }))
}

/// The Petersen graph, laid out as K(2, 5).
pub fn petersen() -> Graph {
    kneser_graph(2, 5).expect("K(2,5) is valid")
}

/// The Hoffman–Singleton graph from five pentagons and five pentagrams.
///
/// Pentagon `P_h` occupies vertices `5h..5h+5` with `j ~ j±1`; pentagram
/// `Q_i` occupies `25+5i..25+5i+5` with `j ~ j±2`; vertex `j` of `P_h` is
/// joined to vertex `h·i + j (mod 5)` of `Q_i`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
        }
    }
    for h in 0..5 {
        for j in 0..5 {
            for i in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    let labels = (0..5)
        .flat_map(|h| (0..5).map(move |j| format!("P{h}.{j}")))
        .chain((0..5).flat_map(|i| (0..5).map(move |j| format!("Q{i}.{j}"))))
        .collect();
    Graph::from_edges(50, &edges, Some(labels)).expect("static construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_girth, is_moore_diam2};

    #[test]
    fn kneser_2_6_counts() {
        let g = kneser_graph(2, 6).unwrap();
        assert_eq!(g.order(), 15);
        assert_eq!(g.regular_degree(), Some(6));
        assert_eq!(g.diameter(), Some(2));
        assert_eq!(g.labels().unwrap()[..3], ["12", "13", "14"]);
    }

    #[test]
    fn kneser_rejects_k_at_least_n() {
        assert!(kneser_graph(3, 3).is_err());
        assert!(kneser_graph(4, 3).is_err());
        assert!(kneser_graph(0, 3).is_err());
    }

    /// Closed form for n > 2k: diam K(k, n) = ⌈(k − 1)/(n − 2k)⌉ + 1.
    fn kneser_diameter_formula(k: usize, n: usize) -> Option<u8> {
        if n <= 2 * k {
            // Empty graph or a perfect matching; K(1, 2) is a single edge.
            return (k == 1 && n == 2).then_some(1);
        }
        Some(((k - 1).div_ceil(n - 2 * k) + 1) as u8)
    }

    #[test]
    fn kneser_diameter_matches_closed_form() {
        for k in 1..=4 {
            for n in k + 1..=14 {
                let g = kneser_graph(k, n).unwrap();
                assert_eq!(g.diameter(), kneser_diameter_formula(k, n), "K({k},{n})");
                if k >= 2 {
                    // Diameter 2 from n = 3k - 1 on, one earlier than n >= 3k.
                    assert_eq!(g.diameter() == Some(2), n + 1 >= 3 * k, "K({k},{n})");
                }
            }
        }
        assert_eq!(kneser_graph(2, 5).unwrap().diameter(), Some(2));
    }

    #[test]
    fn kneser_labels_sorted_unique_and_adjacency_symmetric() {
        let g = kneser_graph(3, 8).unwrap();
        // Single-digit labels sort as strings exactly as the subsets do.
        let labels = g.labels().unwrap();
        assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let subsets = k_subsets(8, 3);
        for w in subsets.windows(2) {
            assert!(w[0] < w[1]);
        }
        for (u, v) in g.edges() {
            assert!(subsets[u].mask().is_disjoint(&subsets[v].mask()));
            assert!(g.adjacent(v, u));
        }
    }

    #[test]
    fn petersen_basics() {
        let g = petersen();
        assert_eq!(g.order(), 10);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(graph_girth(&g), Some(5));
        assert_eq!(g.diameter(), Some(2));
    }

    #[test]
    fn hoffman_singleton_basics() {
        let g = hoffman_singleton();
        assert_eq!(g.order(), 50);
        assert_eq!(g.edge_count(), 175);
        assert_eq!(g.regular_degree(), Some(7));
        assert_eq!(graph_girth(&g), Some(5));
        assert_eq!(g.diameter(), Some(2));
        assert_eq!(is_moore_diam2(&g), Some(7));
    }
}
