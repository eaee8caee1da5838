//! The staged strategy with k cops on a k-regular Moore graph of diameter 2.
//!
//! Facts used throughout: two adjacent vertices have no common neighbor,
//! two non-adjacent vertices have exactly one, and every vertex at distance
//! 2 from u has exactly one neighbor in N(u).
//!
//! * Opening at a center x with an excluded neighbor y: cops on N(x) \ {y}
//!   and on w, the least vertex of N(z) \ {x} for the least z ∈ N(x) \ {y}.
//!   Every class left is a singleton, a subset of N(v) \ {x} of size at
//!   most k − 2, or y together with part of N(y). The last case repeats
//!   the opening once with center y and x excluded.
//! * Middle game on A ⊆ N(u) with |A| = k − α ≥ 3: v is the least vertex
//!   of A and B the α + 1 least vertices of N(v) \ {u}; cops on (A \ {v}) ∪ B.
//!   Classes left are singletons or subsets of one neighborhood with at
//!   most |A| − 2 vertices.
//! * Endgame on {a1, a2} ⊆ N(u): two cops on N(a1) \ {u}, the k − 3
//!   vertices of N(a2) \ {u} not adjacent to them, and one cop on u.
//!   Every class is a singleton.
//!
//! Any class outside these forms is reported as a fault, never patched.

use serde::{Deserialize, Serialize};

use super::strategy::{CopStrategy, StrategyFault};
use super::{Belief, Placement};
use crate::error::{Error, Result};
use crate::graph::{is_moore_diam2, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "phase", rename_all = "snake_case")]
pub enum MooreState {
    Opening {
        center: usize,
        excluded: usize,
        repeat: bool,
    },
    /// The robber was on `candidates` ⊆ N(`hub`) before moving.
    Middle {
        hub: usize,
        candidates: Vec<usize>,
    },
    Endgame {
        hub: usize,
        a1: usize,
        a2: usize,
    },
}

#[derive(Debug, Clone)]
pub struct MooreStrategy<'a> {
    g: &'a Graph,
    k: usize,
}

type Fault<T> = std::result::Result<T, StrategyFault>;

fn fault<T>(msg: String) -> Fault<T> {
    Err(StrategyFault(msg))
}

impl<'a> MooreStrategy<'a> {
    pub fn new(g: &'a Graph) -> Result<MooreStrategy<'a>> {
        let k = is_moore_diam2(g)
            .ok_or_else(|| Error::invalid("graph is not a Moore graph of diameter 2"))?;
        if k < 5 {
            return Err(Error::invalid(format!(
                "the staged strategy needs degree at least 5, got {k}"
            )));
        }
        Ok(MooreStrategy { g, k })
    }

    pub fn cops(&self) -> usize {
        self.k
    }

    fn others(&self, v: usize, skip: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&x| x != skip)
    }

    /// The unique vertex adjacent to every member of `class`, if any.
    fn hub(&self, class: &[usize]) -> Option<usize> {
        let (&a, &b) = (class.first()?, class.get(1)?);
        let common: Vec<usize> = self
            .others(a, usize::MAX)
            .filter(|&x| self.g.adjacent(x, b))
            .collect();
        match common[..] {
            [h] if class.iter().all(|&c| self.g.adjacent(h, c)) => Some(h),
            _ => None,
        }
    }

    pub fn opening_placement(&self, center: usize, excluded: usize) -> Fault<Placement> {
        let z = self
            .others(center, excluded)
            .next()
            .ok_or_else(|| StrategyFault(format!("{center} has no neighbor besides {excluded}")))?;
        let w = self
            .others(z, center)
            .next()
            .ok_or_else(|| StrategyFault(format!("{z} has no neighbor besides {center}")))?;
        let mut cops: Vec<usize> = self.others(center, excluded).collect();
        cops.push(w);
        Ok(Placement::new(cops))
    }

    pub fn middle_placement(&self, hub: usize, candidates: &[usize]) -> Fault<Placement> {
        let alpha = self.k - candidates.len();
        let v = candidates[0];
        let b: Vec<usize> = self.others(v, hub).take(alpha + 1).collect();
        if b.len() != alpha + 1 {
            return fault(format!(
                "N({v}) minus {hub} has fewer than {} vertices",
                alpha + 1
            ));
        }
        Ok(Placement::new(
            candidates[1..].iter().copied().chain(b).collect(),
        ))
    }

    pub fn endgame_placement(&self, hub: usize, a1: usize, a2: usize) -> Fault<Placement> {
        let pair: Vec<usize> = self.others(a1, hub).take(2).collect();
        let rest: Vec<usize> = self
            .others(a2, hub)
            .filter(|&x| pair.iter().all(|&c| !self.g.adjacent(c, x)))
            .collect();
        if pair.len() != 2 || rest.len() != self.k - 3 {
            return fault(format!(
                "endgame on {{{a1}, {a2}}} around {hub}: found {} + {} cops instead of 2 + {}",
                pair.len(),
                rest.len(),
                self.k - 3
            ));
        }
        let cops: Vec<usize> = pair.into_iter().chain(rest).chain([hub]).collect();
        for (i, &c) in cops.iter().enumerate() {
            if let Some(&d) = cops[i + 1..].iter().find(|&&d| self.g.adjacent(c, d)) {
                return fault(format!("endgame cops {c} and {d} are adjacent"));
            }
        }
        Ok(Placement::new(cops))
    }

    /// Next state for a class contained in one neighborhood.
    fn inner(&self, class: &[usize], bound: usize, from: &str) -> Fault<MooreState> {
        let Some(hub) = self.hub(class) else {
            return fault(format!(
                "{from}: class {class:?} lies in no single neighborhood"
            ));
        };
        if class.len() > bound {
            return fault(format!(
                "{from}: class {class:?} in N({hub}) has {} vertices, expected at most {bound}",
                class.len()
            ));
        }
        Ok(if class.len() == 2 {
            MooreState::Endgame {
                hub,
                a1: class[0],
                a2: class[1],
            }
        } else {
            MooreState::Middle {
                hub,
                candidates: class.to_vec(),
            }
        })
    }
}

impl CopStrategy for MooreStrategy<'_> {
    type State = MooreState;

    fn start(&self) -> MooreState {
        let x = 0;
        MooreState::Opening {
            center: x,
            excluded: self.g.neighbors(x)[0],
            repeat: false,
        }
    }

    fn place(&self, state: &MooreState, _: &Belief) -> Fault<Placement> {
        match state {
            MooreState::Opening {
                center, excluded, ..
            } => self.opening_placement(*center, *excluded),
            MooreState::Middle { hub, candidates } => self.middle_placement(*hub, candidates),
            MooreState::Endgame { hub, a1, a2 } => self.endgame_placement(*hub, *a1, *a2),
        }
    }

    fn advance(&self, state: &MooreState, _: &Placement, class: &Belief) -> Fault<MooreState> {
        let c = class.to_vec();
        match state {
            MooreState::Opening {
                center,
                excluded,
                repeat,
            } => {
                let y = *excluded;
                let y_form = c.contains(&y) && c.iter().all(|&v| v == y || self.g.adjacent(v, y));
                if y_form && !repeat {
                    return Ok(MooreState::Opening {
                        center: y,
                        excluded: *center,
                        repeat: true,
                    });
                }
                self.inner(&c, self.k - 1, "opening")
            }
            MooreState::Middle { candidates, .. } => {
                self.inner(&c, candidates.len() - 1, "middle game")
            }
            MooreState::Endgame { hub, a1, a2 } => fault(format!(
                "endgame on {{{a1}, {a2}}} around {hub} left the class {c:?}"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{verify_strategy, StrategyReport};
    use crate::graph::{cycle_graph, hoffman_singleton, petersen};

    #[test]
    fn rejects_small_degree() {
        assert!(MooreStrategy::new(&petersen()).is_err());
        assert!(MooreStrategy::new(&cycle_graph(5).unwrap()).is_err());
    }

    #[test]
    fn endgame_cops_are_pairwise_non_adjacent() {
        let g = hoffman_singleton();
        let s = MooreStrategy::new(&g).unwrap();
        for u in [0, 17, 49] {
            let n = g.neighbors(u);
            for i in 0..n.len() {
                for j in i + 1..n.len() {
                    let p = s.endgame_placement(u, n[i], n[j]).unwrap();
                    assert_eq!(p.len(), 7);
                    for &a in p.cops() {
                        assert!(p.cops().iter().all(|&b| !g.adjacent(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn captures_on_hoffman_singleton() {
        let g = hoffman_singleton();
        let s = MooreStrategy::new(&g).unwrap();
        match verify_strategy(&g, &s, 7, 16) {
            StrategyReport::Captured { rounds, trace, .. } => {
                assert!(rounds <= 7, "{rounds}");
                trace.check(&g).unwrap();
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn opening_classes_have_the_stated_forms() {
        let g = hoffman_singleton();
        let s = MooreStrategy::new(&g).unwrap();
        let start = s.start();
        let all = crate::VertexSet::full(50);
        let p = s.place(&start, &all).unwrap();
        for class in crate::game::probe_partition(&g, &p, &all).values() {
            if class.len() == 1 {
                continue;
            }
            match s.advance(&start, &p, class).unwrap() {
                MooreState::Middle { candidates, .. } => assert!(candidates.len() <= 6),
                MooreState::Opening { repeat, .. } => {
                    assert!(repeat);
                    assert_eq!(class.len(), 6);
                }
                MooreState::Endgame { .. } => panic!("opening leaves at least k - 2 candidates"),
            }
        }
    }
}
