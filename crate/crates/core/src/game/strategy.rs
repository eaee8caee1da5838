use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

use super::{probe_partition, spread, Belief, Observation, Placement};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A strategy reached a situation it has no rule for.
#[derive(Debug, Clone, PartialEq, Eq, ThisError, Serialize, Deserialize)]
#[error("{0}")]
pub struct StrategyFault(pub String);

/// A cop strategy as a machine over (state, belief).
///
/// `place` picks the probe for the current belief; `advance` receives the
/// class the probe left (before the robber moves) and returns the state for
/// the next round. Only non-singleton classes are passed to `advance`.
pub trait CopStrategy {
    type State: Clone + Eq + Hash + Debug;

    fn start(&self) -> Self::State;

    fn place(
        &self,
        state: &Self::State,
        belief: &Belief,
    ) -> std::result::Result<Placement, StrategyFault>;

    fn advance(
        &self,
        state: &Self::State,
        placement: &Placement,
        class: &Belief,
    ) -> std::result::Result<Self::State, StrategyFault>;
}

/// The same placement every round.
#[derive(Debug, Clone)]
pub struct StaticStrategy {
    pub placement: Placement,
}

impl StaticStrategy {
    /// One cop on every vertex.
    pub fn all_vertices(g: &Graph) -> StaticStrategy {
        StaticStrategy {
            placement: Placement::new((0..g.order()).collect()),
        }
    }
}

impl CopStrategy for StaticStrategy {
    type State = ();

    fn start(&self) {}

    fn place(&self, _: &(), _: &Belief) -> std::result::Result<Placement, StrategyFault> {
        Ok(self.placement.clone())
    }

    fn advance(&self, _: &(), _: &Placement, _: &Belief) -> std::result::Result<(), StrategyFault> {
        Ok(())
    }
}

/// One probe of a play.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub round: u32,
    pub belief: Vec<usize>,
    pub placement: Vec<usize>,
    pub observation: Vec<u8>,
    /// Candidates consistent with the observation.
    pub class: Vec<usize>,
    /// Belief after the robber moves; absent when the class is a singleton.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub next_belief: Option<Vec<usize>>,
}

/// A recorded play, replayable against the graph with [`StrategyTrace::check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyTrace {
    pub graph_hash: String,
    pub rounds: Vec<Round>,
}

impl StrategyTrace {
    /// Re-derives every transition: the class is the observation's part of
    /// the belief, the next belief is its spread, and consecutive rounds chain.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.graph_hash != g.hash() {
            return Err(Error::HashMismatch {
                expected: self.graph_hash.clone(),
                found: g.hash().to_string(),
            });
        }
        let n = g.order();
        let mut expected_belief: Option<Vec<usize>> = None;
        for (i, r) in self.rounds.iter().enumerate() {
            let bad = |what: &str| Error::invalid(format!("round {}: {what}", r.round));
            if let Some(b) = &expected_belief {
                if b != &r.belief {
                    return Err(bad("belief does not follow the previous round"));
                }
            } else if i == 0 && r.belief.len() != n {
                return Err(bad("a play starts from the whole vertex set"));
            }
            let placement = Placement::checked(g, r.placement.clone())?;
            for &v in &r.belief {
                g.check_vertex(v)?;
            }
            let belief = VertexSet::from_vertices(n, r.belief.iter().copied());
            let parts = probe_partition(g, &placement, &belief);
            let obs = Observation {
                dvec: r.observation.clone(),
            };
            let class = parts
                .get(&obs)
                .ok_or_else(|| bad("observation is impossible for this belief"))?;
            if class.to_vec() != r.class {
                return Err(bad("class is not the observation's part of the belief"));
            }
            match &r.next_belief {
                Some(next) => {
                    if class.len() == 1 {
                        return Err(bad("play continues after the robber was located"));
                    }
                    if &spread(g, class).to_vec() != next {
                        return Err(bad("next belief is not the spread of the class"));
                    }
                }
                None if class.len() != 1 => {
                    return Err(bad("play stops without locating the robber"))
                }
                None if i + 1 != self.rounds.len() => {
                    return Err(bad("rounds continue after capture"))
                }
                None => {}
            }
            expected_belief = r.next_belief.clone();
        }
        Ok(())
    }
}

/// Why the robber escapes some play.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evasion {
    /// The play returns to an earlier (state, belief).
    Cycle,
    RoundLimit {
        max_rounds: u32,
    },
    /// The strategy had no rule, or broke the rules of the game.
    Fault {
        message: String,
    },
}

/// Result of exploring every robber choice against a strategy.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum StrategyReport {
    /// Every play ends in capture; `rounds` is the worst case and `trace` a
    /// play achieving it.
    Captured {
        rounds: u32,
        vertex: usize,
        positions: usize,
        trace: StrategyTrace,
    },
    /// Some play escapes; `trace` leads to the offending position.
    Evaded {
        reason: Evasion,
        positions: usize,
        trace: StrategyTrace,
    },
}

impl StrategyReport {
    pub fn is_captured(&self) -> bool {
        matches!(self, StrategyReport::Captured { .. })
    }

    pub fn trace(&self) -> &StrategyTrace {
        match self {
            StrategyReport::Captured { trace, .. } | StrategyReport::Evaded { trace, .. } => trace,
        }
    }
}

/// Depth-first search over every (state, belief) reachable when the robber
/// answers each probe with any consistent class.
pub fn verify_strategy<S: CopStrategy>(
    g: &Graph,
    strategy: &S,
    k: usize,
    max_rounds: u32,
) -> StrategyReport {
    let mut v = Verifier {
        g,
        strategy,
        k,
        max_rounds,
        memo: HashMap::new(),
        on_path: HashSet::new(),
        path: Vec::new(),
    };
    let root = (strategy.start(), VertexSet::full(g.order()));
    let result = v.visit(&root, 1);
    let positions = v.memo.len() + v.on_path.len();
    match result {
        Ok(rounds) => {
            let (rounds_vec, vertex) = v.worst_play(root);
            StrategyReport::Captured {
                rounds,
                vertex,
                positions,
                trace: StrategyTrace {
                    graph_hash: g.hash().to_string(),
                    rounds: rounds_vec,
                },
            }
        }
        Err(reason) => StrategyReport::Evaded {
            reason,
            positions,
            trace: StrategyTrace {
                graph_hash: g.hash().to_string(),
                rounds: std::mem::take(&mut v.path),
            },
        },
    }
}

type Key<S> = (<S as CopStrategy>::State, Belief);

struct Verifier<'a, S: CopStrategy> {
    g: &'a Graph,
    strategy: &'a S,
    k: usize,
    max_rounds: u32,
    /// Rounds until capture in the worst case, counting the current one.
    memo: HashMap<Key<S>, u32>,
    on_path: HashSet<Key<S>>,
    path: Vec<Round>,
}

impl<S: CopStrategy> Verifier<'_, S> {
    fn placement(&self, key: &Key<S>) -> std::result::Result<Placement, Evasion> {
        let fault = |message: String| Evasion::Fault { message };
        let p = self
            .strategy
            .place(&key.0, &key.1)
            .map_err(|f| fault(f.0))?;
        if p.len() > self.k {
            return Err(fault(format!(
                "placement {:?} uses more than {} cops",
                p.cops(),
                self.k
            )));
        }
        if let Some(&c) = p.cops().iter().find(|&&c| c >= self.g.order()) {
            return Err(fault(format!("cop on vertex {c} outside the graph")));
        }
        Ok(p)
    }

    fn visit(&mut self, key: &Key<S>, round: u32) -> std::result::Result<u32, Evasion> {
        if let Some(&d) = self.memo.get(key) {
            if round - 1 + d > self.max_rounds {
                return Err(Evasion::RoundLimit {
                    max_rounds: self.max_rounds,
                });
            }
            return Ok(d);
        }
        if self.on_path.contains(key) {
            return Err(Evasion::Cycle);
        }
        if round > self.max_rounds {
            return Err(Evasion::RoundLimit {
                max_rounds: self.max_rounds,
            });
        }
        let placement = self.placement(key)?;
        self.on_path.insert(key.clone());
        let mut depth = 1;
        for (obs, class) in probe_partition(self.g, &placement, &key.1) {
            if class.len() == 1 {
                continue;
            }
            let next_belief = spread(self.g, &class);
            self.path.push(Round {
                round,
                belief: key.1.to_vec(),
                placement: placement.cops().to_vec(),
                observation: obs.dvec,
                class: class.to_vec(),
                next_belief: Some(next_belief.to_vec()),
            });
            let state = self
                .strategy
                .advance(&key.0, &placement, &class)
                .map_err(|f| Evasion::Fault { message: f.0 })?;
            let d = self.visit(&(state, next_belief), round + 1)?;
            self.path.pop();
            depth = depth.max(d + 1);
        }
        self.on_path.remove(key);
        self.memo.insert(key.clone(), depth);
        Ok(depth)
    }

    /// Replays the memo along the deepest branch.
    fn worst_play(&self, mut key: Key<S>) -> (Vec<Round>, usize) {
        let mut rounds = Vec::new();
        let mut round = 1;
        loop {
            let depth = self.memo[&key];
            let placement = self
                .placement(&key)
                .expect("visited positions place cleanly");
            let parts = probe_partition(self.g, &placement, &key.1);
            let mut next = None;
            for (obs, class) in &parts {
                let mut r = Round {
                    round,
                    belief: key.1.to_vec(),
                    placement: placement.cops().to_vec(),
                    observation: obs.dvec.clone(),
                    class: class.to_vec(),
                    next_belief: None,
                };
                if class.len() == 1 {
                    if depth == 1 {
                        rounds.push(r);
                        let v = class.first().expect("singleton");
                        return (rounds, v);
                    }
                    continue;
                }
                let state = self
                    .strategy
                    .advance(&key.0, &placement, class)
                    .expect("visited");
                let child = (state, spread(self.g, class));
                if self.memo[&child] + 1 == depth {
                    r.next_belief = Some(child.1.to_vec());
                    rounds.push(r);
                    next = Some(child);
                    break;
                }
            }
            key = next.expect("memo depth is realized by some class");
            round += 1;
        }
    }
}
