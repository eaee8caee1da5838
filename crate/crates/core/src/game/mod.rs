//! The localization game as a game on beliefs.
//!
//! A belief is the set of vertices the robber may occupy given every probe
//! so far. Each round the cops probe from a placement, which splits the
//! belief into classes by distance vector; a singleton class locates the
//! robber, any other class is spread to its closed neighborhood when the
//! robber moves.

mod moore;
mod solver;
mod strategy;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use moore::{MooreState, MooreStrategy};
pub use solver::{
    loc_decide, localization_number, LocDecision, LocOptions, LocalizationNumber,
    PositionalStrategy,
};
pub use strategy::{
    verify_strategy, CopStrategy, Evasion, Round, StaticStrategy, StrategyFault, StrategyReport,
    StrategyTrace,
};

/// Set of vertices consistent with the probe history. Never empty in play.
pub type Belief = VertexSet;

/// Cop positions for one probe: sorted, without repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Placement {
    cops: Vec<usize>,
}

impl Placement {
    /// Sorts and drops repeated vertices; a second cop on a vertex sees
    /// nothing the first does not.
    pub fn new(mut cops: Vec<usize>) -> Placement {
        cops.sort_unstable();
        cops.dedup();
        Placement { cops }
    }

    /// Like [`Placement::new`], rejecting vertices outside `g`.
    pub fn checked(g: &Graph, cops: Vec<usize>) -> Result<Placement> {
        for &c in &cops {
            g.check_vertex(c)?;
        }
        Ok(Placement::new(cops))
    }

    pub fn cops(&self) -> &[usize] {
        &self.cops
    }

    pub fn len(&self) -> usize {
        self.cops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cops.is_empty()
    }
}

/// Distances reported by the cops, aligned with [`Placement::cops`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Observation {
    pub dvec: Vec<u8>,
}

impl Observation {
    pub fn of(g: &Graph, p: &Placement, v: usize) -> Observation {
        Observation {
            dvec: p.cops.iter().map(|&c| g.dist(c, v)).collect(),
        }
    }
}

/// Splits `b` by the distance vector each candidate would produce.
pub fn probe_partition(g: &Graph, p: &Placement, b: &Belief) -> BTreeMap<Observation, Belief> {
    let mut parts: BTreeMap<Observation, Belief> = BTreeMap::new();
    for v in b {
        parts
            .entry(Observation::of(g, p, v))
            .or_insert_with(|| VertexSet::empty(g.order()))
            .insert(v);
    }
    parts
}

/// Union of the closed neighborhoods of the candidates.
pub fn spread(g: &Graph, b: &Belief) -> Belief {
    let mut out = b.clone();
    for v in b {
        out.union_with(g.neighbor_set(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::graph::{cycle_graph, petersen};

    #[test]
    fn c5_partition_from_one_cop() {
        let g = cycle_graph(5).unwrap();
        let parts = probe_partition(&g, &Placement::new(vec![0]), &VertexSet::full(5));
        let classes: Vec<Vec<usize>> = parts.values().map(VertexSet::to_vec).collect();
        assert_eq!(classes, vec![vec![0], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn singleton_belief_stays_whole() {
        let g = petersen();
        let b = VertexSet::singleton(10, 4);
        let parts = probe_partition(&g, &Placement::new(vec![0, 7, 9]), &b);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.values().next().unwrap(), &b);
    }

    #[test]
    fn petersen_adjacent_pair_partition() {
        let g = petersen();
        let u = 0;
        let v = g.neighbors(u)[0];
        let parts = probe_partition(&g, &Placement::new(vec![u, v]), &VertexSet::full(10));
        assert_eq!(parts.values().map(VertexSet::len).sum::<usize>(), 10);
        // Direct count of each (d(u, x), d(v, x)) vector.
        for (obs, class) in &parts {
            let expect = (0..10)
                .filter(|&x| g.dist(u, x) == obs.dvec[0] && g.dist(v, x) == obs.dvec[1])
                .count();
            assert_eq!(class.len(), expect);
        }
    }

    #[test]
    fn spread_examples() {
        let g = petersen();
        assert_eq!(
            spread(&g, &VertexSet::singleton(10, 3)),
            g.closed_neighborhood(3)
        );
        assert_eq!(spread(&g, &VertexSet::full(10)), VertexSet::full(10));
        let w = (0..10).find(|&x| x != 0 && !g.adjacent(0, x)).unwrap();
        let direct = g.closed_neighborhood(0).union(&g.closed_neighborhood(w));
        let s = spread(&g, &VertexSet::from_vertices(10, [0, w]));
        assert_eq!(s, direct);
        assert_eq!(s.len(), 7);
    }

    #[test]
    fn placement_normalizes() {
        assert_eq!(Placement::new(vec![3, 1, 3]).cops(), &[1, 3]);
        assert!(Placement::checked(&petersen(), vec![10]).is_err());
    }

    proptest! {
        #[test]
        fn partition_covers_and_is_disjoint(mask in 1u64..1024, cops in proptest::collection::vec(0usize..10, 0..4)) {
            let g = petersen();
            let b = VertexSet::from_mask(10, mask);
            let parts = probe_partition(&g, &Placement::new(cops), &b);
            let mut union = VertexSet::empty(10);
            let mut total = 0;
            for class in parts.values() {
                prop_assert!(!class.intersects(&union));
                union.union_with(class);
                total += class.len();
            }
            prop_assert_eq!(union, b.clone());
            prop_assert_eq!(total, b.len());
        }

        #[test]
        fn spread_is_monotone(a in 0u64..1024, extra in 0u64..1024) {
            let g = petersen();
            let small = VertexSet::from_mask(10, a);
            let big = VertexSet::from_mask(10, a | extra);
            prop_assert!(spread(&g, &small).is_subset(&spread(&g, &big)));
        }
    }
}
