//! Finite fields, the projective plane PG(2, q) and the orthogonal polarity
//! graphs ER(q).

mod field;

pub use field::{Field, FieldElement};

use crate::error::Result;
use crate::graph::io::GraphJson;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A point of PG(2, q), normalized so the first nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: [FieldElement; 3],
}

impl ProjectivePoint {
    /// Scales a nonzero vector into normal form; `None` for the zero vector.
    pub fn normalize(f: &Field, coords: [FieldElement; 3]) -> Option<ProjectivePoint> {
        let lead = *coords.iter().find(|c| c.rep != 0)?;
        let s = f.inv(lead)?;
        Some(ProjectivePoint {
            coords: coords.map(|c| f.mul(c, s)),
        })
    }

    pub fn coords(&self) -> [FieldElement; 3] {
        self.coords
    }

    pub fn label(&self) -> String {
        let [a, b, c] = self.coords;
        format!("{}:{}:{}", a.rep, b.rep, c.rep)
    }
}

/// All q² + q + 1 points in lexicographic order of normalized coordinates.
pub fn projective_points(f: &Field) -> Vec<ProjectivePoint> {
    let els: Vec<_> = f.elements().collect();
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    let mut pts = vec![ProjectivePoint {
        coords: [zero, zero, one],
    }];
    for &b in &els {
        pts.push(ProjectivePoint {
            coords: [zero, one, b],
        });
    }
    for &a in &els {
        for &b in &els {
            pts.push(ProjectivePoint {
                coords: [one, a, b],
            });
        }
    }
    pts
}

/// ER(q) together with the data it was built from.
#[derive(Debug, Clone)]
pub struct PolarityGraph {
    pub graph: Graph,
    pub q: u32,
    /// Vertices lying on their own polar line.
    pub absolute: VertexSet,
    pub points: Vec<ProjectivePoint>,
}

impl PolarityGraph {
    /// The graph JSON format with the extra `absolute` vertex list.
    pub fn to_json(&self) -> String {
        let mut j = GraphJson::from_graph(&self.graph);
        j.absolute = Some(self.absolute.to_vec());
        serde_json::to_string_pretty(&j).expect("polarity JSON serializes")
    }
}

/// The orthogonal polarity graph: points u ≠ v are adjacent iff uᵀv = 0.
pub fn er_polarity_graph(q: u32) -> Result<PolarityGraph> {
    let f = Field::new(q)?;
    let points = projective_points(&f);
    let n = points.len();
    let coords: Vec<_> = points.iter().map(ProjectivePoint::coords).collect();
    let zero = FieldElement::ZERO;
    let labels = points.iter().map(ProjectivePoint::label).collect();
    let graph = Graph::from_fn(n, Some(labels), |u, v| {
        f.dot(&coords[u], &coords[v]) == zero
    });
    let absolute =
        VertexSet::from_vertices(n, (0..n).filter(|&u| f.dot(&coords[u], &coords[u]) == zero));
    Ok(PolarityGraph {
        graph,
        q,
        absolute,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::has_c4;

    #[test]
    fn small_polarity_counts() {
        let er2 = er_polarity_graph(2).unwrap();
        assert_eq!(er2.graph.order(), 7);
        assert_eq!(er2.graph.edge_count(), 9);
        assert_eq!(er2.absolute.len(), 3);
        assert!(er2.absolute.iter().all(|v| er2.graph.degree(v) == 2));

        let er3 = er_polarity_graph(3).unwrap();
        assert_eq!(er3.graph.order(), 13);
        assert_eq!(er3.graph.edge_count(), 24);
        assert_eq!(er3.absolute.len(), 4);
    }

    #[test]
    fn polarity_invariants_for_supported_q() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let pg = er_polarity_graph(q).unwrap();
            let g = &pg.graph;
            let qs = q as usize;
            assert_eq!(g.order(), qs * qs + qs + 1, "q={q}");
            assert_eq!(g.edge_count(), qs * (qs + 1) * (qs + 1) / 2, "q={q}");
            // Baer's bound holds with equality for the orthogonal polarity.
            assert_eq!(pg.absolute.len(), qs + 1, "q={q}");
            for v in 0..g.order() {
                let expected = if pg.absolute.contains(v) { qs } else { qs + 1 };
                assert_eq!(g.degree(v), expected, "q={q} v={v}");
            }
            assert_eq!(g.diameter(), Some(2), "q={q}");
            assert!(!has_c4(g), "q={q}");
        }
    }

    #[test]
    fn normalization_is_idempotent_and_canonical() {
        let f = Field::new(5).unwrap();
        let pts = projective_points(&f);
        assert_eq!(pts.len(), 31);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        for p in &pts {
            assert_eq!(ProjectivePoint::normalize(&f, p.coords()), Some(*p));
            for s in 1..5 {
                let s = f.element(s).unwrap();
                let scaled = p.coords().map(|c| f.mul(c, s));
                assert_eq!(ProjectivePoint::normalize(&f, scaled), Some(*p));
            }
        }
        assert_eq!(
            ProjectivePoint::normalize(&f, [FieldElement::ZERO; 3]),
            None
        );
    }

    #[test]
    fn rejects_non_prime_power() {
        assert!(er_polarity_graph(6).is_err());
    }
}
