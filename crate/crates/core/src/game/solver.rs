use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::strategy::{CopStrategy, StrategyFault};
use super::{Belief, Placement};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::kneser::{binomial, for_each_k_subset};
use crate::graph::symmetry::Symmetry;
use crate::graph::{is_moore_diam2, Graph};
use crate::metric::greedy_resolving;
use crate::vertex_set::VertexSet;

/// Limits for the exact solver.
#[derive(Debug, Clone)]
pub struct LocOptions {
    /// Counts placement evaluations.
    pub budget: Budget,
    pub max_vertices: usize,
    pub max_cops: usize,
    /// Automorphisms used to merge isomorphic beliefs and placements.
    pub symmetry: Option<Symmetry>,
}

impl Default for LocOptions {
    fn default() -> Self {
        LocOptions {
            budget: Budget::UNLIMITED,
            max_vertices: 16,
            max_cops: 4,
            symmetry: None,
        }
    }
}

impl LocOptions {
    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = Some(symmetry);
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }
}

/// A winning positional strategy: one placement per belief reachable when
/// the cops follow it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionalStrategy {
    pub graph_hash: String,
    pub cops: usize,
    /// Worst-case rounds to capture.
    pub rounds: u32,
    /// Belief (sorted vertices) to placement. Written as a list of pairs.
    #[serde(with = "move_list")]
    pub moves: BTreeMap<Vec<usize>, Vec<usize>>,
}

mod move_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Move {
        belief: Vec<usize>,
        placement: Vec<usize>,
    }

    pub fn serialize<S: Serializer>(
        moves: &BTreeMap<Vec<usize>, Vec<usize>>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        s.collect_seq(moves.iter().map(|(b, p)| Move {
            belief: b.clone(),
            placement: p.clone(),
        }))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<Vec<usize>, Vec<usize>>, D::Error> {
        let list = Vec::<Move>::deserialize(d)?;
        Ok(list.into_iter().map(|m| (m.belief, m.placement)).collect())
    }
}

impl CopStrategy for PositionalStrategy {
    type State = ();

    fn start(&self) {}

    fn place(&self, _: &(), belief: &Belief) -> std::result::Result<Placement, StrategyFault> {
        self.moves
            .get(&belief.to_vec())
            .map(|p| Placement::new(p.clone()))
            .ok_or_else(|| StrategyFault(format!("no move for belief {:?}", belief.to_vec())))
    }

    fn advance(&self, _: &(), _: &Placement, _: &Belief) -> std::result::Result<(), StrategyFault> {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum LocDecision {
    CopWin { strategy: PositionalStrategy },
    RobberWin,
    Unknown { reason: String },
}

impl LocDecision {
    pub fn is_cop_win(&self) -> bool {
        matches!(self, LocDecision::CopWin { .. })
    }
}

/// Decides whether `k` cops locate the robber from the belief V(G).
///
/// Reachable beliefs are generated layer by layer; a belief is winning when
/// some placement leaves only singleton classes or classes whose spread is
/// already winning (a least fixed point, solved by counting down the losing
/// successors of each option).
pub fn loc_decide(g: &Graph, k: usize, opts: &LocOptions) -> Result<LocDecision> {
    let n = g.order();
    if let Some(sym) = &opts.symmetry {
        if sym.permutations().first().map(Vec::len) != Some(n) {
            return Err(Error::invalid(
                "symmetry group acts on a different vertex count",
            ));
        }
    }
    if k >= n {
        // One cop per vertex: every probe returns a 0 somewhere.
        let mut moves = BTreeMap::new();
        moves.insert((0..n).collect(), (0..n).collect());
        return Ok(LocDecision::CopWin {
            strategy: PositionalStrategy {
                graph_hash: g.hash().to_string(),
                cops: k,
                rounds: 1,
                moves,
            },
        });
    }
    if n > opts.max_vertices || n > 64 {
        return Ok(LocDecision::Unknown {
            reason: format!(
                "{n} vertices exceeds the solver limit of {}",
                opts.max_vertices.min(64)
            ),
        });
    }
    if k > opts.max_cops {
        return Ok(LocDecision::Unknown {
            reason: format!("{k} cops exceeds the solver limit of {}", opts.max_cops),
        });
    }
    let solver = Solver::new(g, k, opts.symmetry.as_ref());
    let Some(explored) = solver.explore(&opts.budget) else {
        return Ok(LocDecision::Unknown {
            reason: "placement budget exhausted".to_string(),
        });
    };
    let (levels, choice) = explored.attract();
    if levels[0] == 0 {
        return Ok(LocDecision::RobberWin);
    }
    let moves = solver.unfold(&explored, &choice);
    Ok(LocDecision::CopWin {
        strategy: PositionalStrategy {
            graph_hash: g.hash().to_string(),
            cops: k,
            rounds: levels[0],
            moves,
        },
    })
}

type Mask = u64;

struct Solver<'a> {
    g: &'a Graph,
    n: usize,
    closed: Vec<Mask>,
    placements: Vec<Vec<u8>>,
    sym: Option<&'a Symmetry>,
}

/// One placement considered at a belief, with its distinct successor beliefs.
struct Opt {
    placement: u32,
    succ: Vec<u32>,
}

struct Explored {
    /// Canonical beliefs by id; the root V(G) is id 0.
    beliefs: Vec<Mask>,
    options: Vec<Vec<Opt>>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, k: usize, sym: Option<&'a Symmetry>) -> Solver<'a> {
        let n = g.order();
        let closed = (0..n).map(|v| g.closed_neighborhood(v).to_mask()).collect();
        let mut placements = Vec::with_capacity(binomial(n, k) as usize);
        for_each_k_subset(n, k, |c| {
            placements.push(c.iter().map(|&x| x as u8).collect());
            true
        });
        Solver {
            g,
            n,
            closed,
            placements,
            sym,
        }
    }

    fn spread(&self, b: Mask) -> Mask {
        let mut out = 0;
        let mut rest = b;
        while rest != 0 {
            out |= self.closed[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    }

    /// Classes of `b` under placement `p`, as masks.
    fn classes(&self, p: &[u8], b: Mask) -> Vec<Mask> {
        let mut vs: Vec<usize> = Vec::with_capacity(b.count_ones() as usize);
        let mut rest = b;
        while rest != 0 {
            vs.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        let key = |v: usize| p.iter().map(move |&c| self.g.dist(c as usize, v));
        vs.sort_by(|&a, &b| key(a).cmp(key(b)).then(a.cmp(&b)));
        let mut out = Vec::new();
        let mut i = 0;
        while i < vs.len() {
            let mut m = 1 << vs[i];
            let mut j = i + 1;
            while j < vs.len() && key(vs[j]).eq(key(vs[i])) {
                m |= 1 << vs[j];
                j += 1;
            }
            out.push(m);
            i = j;
        }
        out
    }

    fn image(perm: &[u32], mask: Mask) -> Mask {
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            out |= 1 << perm[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    }

    /// Least image of `b` under the group, and the element achieving it.
    fn canonical(&self, b: Mask) -> (Mask, usize) {
        let Some(sym) = self.sym else {
            return (b, 0);
        };
        let mut best = (b, 0);
        for (i, perm) in sym.permutations().iter().enumerate().skip(1) {
            let img = Self::image(perm, b);
            if img < best.0 {
                best = (img, i);
            }
        }
        best
    }

    /// Placements worth trying at `b`: with symmetry, only the least
    /// placement in each orbit of the stabilizer of `b`.
    fn candidate_placements(&self, b: Mask) -> Vec<usize> {
        let Some(sym) = self.sym else {
            return (0..self.placements.len()).collect();
        };
        let perms = sym.permutations();
        let stab: Vec<&Vec<u32>> = perms
            .iter()
            .skip(1)
            .filter(|p| Self::image(p, b) == b)
            .collect();
        (0..self.placements.len())
            .filter(|&i| {
                let m = self.placements[i].iter().fold(0u64, |acc, &c| acc | 1 << c);
                stab.iter().all(|p| Self::image(p, m) >= m)
            })
            .collect()
    }

    /// Options at one belief, each with canonical successor masks, and the
    /// number of placements evaluated.
    fn evaluate(&self, b: Mask) -> (Vec<(u32, Vec<Mask>)>, u64) {
        let mut out = Vec::new();
        let candidates = self.candidate_placements(b);
        let mut evaluated = 0;
        for pi in candidates {
            evaluated += 1;
            let mut succ: Vec<Mask> = Vec::new();
            let mut useless = false;
            for c in self.classes(&self.placements[pi], b) {
                if c.count_ones() == 1 {
                    continue;
                }
                let s = self.spread(c);
                // A successor containing b is at least as hard as b itself.
                if s & b == b {
                    useless = true;
                    break;
                }
                succ.push(self.canonical(s).0);
            }
            if useless {
                continue;
            }
            if succ.is_empty() {
                // Immediate capture: no other option can do better.
                return (vec![(pi as u32, succ)], evaluated);
            }
            succ.sort_unstable();
            succ.dedup();
            out.push((pi as u32, succ));
        }
        (out, evaluated)
    }

    fn explore(&self, budget: &Budget) -> Option<Explored> {
        const CHUNK: usize = 256;
        let mut meter = budget.meter();
        let full: Mask = if self.n == 64 { !0 } else { (1 << self.n) - 1 };
        let mut ids: HashMap<Mask, u32> = HashMap::new();
        let mut beliefs: Vec<Mask> = Vec::new();
        let mut options: Vec<Vec<Opt>> = Vec::new();
        let root = self.canonical(full).0;
        ids.insert(root, 0);
        beliefs.push(root);
        let mut next = 0;
        while next < beliefs.len() {
            let end = (next + CHUNK).min(beliefs.len());
            let results: Vec<_> = beliefs[next..end]
                .par_iter()
                .map(|&b| self.evaluate(b))
                .collect();
            for (opts, evaluated) in results {
                if !meter.charge(evaluated) {
                    return None;
                }
                let mut list = Vec::with_capacity(opts.len());
                for (placement, succ) in opts {
                    let succ = succ
                        .into_iter()
                        .map(|s| {
                            *ids.entry(s).or_insert_with(|| {
                                beliefs.push(s);
                                (beliefs.len() - 1) as u32
                            })
                        })
                        .collect();
                    list.push(Opt { placement, succ });
                }
                options.push(list);
            }
            next = end;
        }
        Some(Explored { beliefs, options })
    }

    /// Walks the winning strategy from V(G), undoing canonicalization, and
    /// records the placement used at each belief met.
    fn unfold(&self, explored: &Explored, choice: &[u32]) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let ids: HashMap<Mask, usize> = explored
            .beliefs
            .iter()
            .enumerate()
            .map(|(i, &b)| (b, i))
            .collect();
        let full: Mask = if self.n == 64 { !0 } else { (1 << self.n) - 1 };
        let mut moves = BTreeMap::new();
        let mut seen: HashSet<Mask> = HashSet::from([full]);
        let mut queue = VecDeque::from([full]);
        while let Some(b) = queue.pop_front() {
            let (canon, g_index) = self.canonical(b);
            let id = ids[&canon];
            let opt = &explored.options[id][choice[id] as usize];
            let canon_placement = &self.placements[opt.placement as usize];
            let placement: Vec<usize> = match self.sym {
                Some(sym) => {
                    let inv = sym.inverse(g_index);
                    let mut p: Vec<usize> = canon_placement
                        .iter()
                        .map(|&c| inv[c as usize] as usize)
                        .collect();
                    p.sort_unstable();
                    p
                }
                None => canon_placement.iter().map(|&c| c as usize).collect(),
            };
            let p8: Vec<u8> = placement.iter().map(|&c| c as u8).collect();
            for c in self.classes(&p8, b) {
                if c.count_ones() > 1 {
                    let s = self.spread(c);
                    if seen.insert(s) {
                        queue.push_back(s);
                    }
                }
            }
            moves.insert(mask_vertices(self.n, b), placement);
        }
        moves
    }
}

impl Explored {
    /// Round-optimal winning levels (0 = not winning) and the chosen option
    /// per winning belief.
    fn attract(&self) -> (Vec<u32>, Vec<u32>) {
        let m = self.options.len();
        let mut level = vec![0u32; m];
        let mut choice = vec![0u32; m];
        let mut remaining: Vec<Vec<u32>> = self
            .options
            .iter()
            .map(|opts| opts.iter().map(|o| o.succ.len() as u32).collect())
            .collect();
        let mut preds: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
        for (b, opts) in self.options.iter().enumerate() {
            for (oi, o) in opts.iter().enumerate() {
                for &s in &o.succ {
                    preds[s as usize].push((b as u32, oi as u32));
                }
            }
        }
        let mut queue = VecDeque::new();
        for (b, opts) in self.options.iter().enumerate() {
            if let Some(oi) = opts.iter().position(|o| o.succ.is_empty()) {
                level[b] = 1;
                choice[b] = oi as u32;
                queue.push_back(b);
            }
        }
        while let Some(s) = queue.pop_front() {
            for &(b, oi) in &preds[s] {
                let (b, oi) = (b as usize, oi as usize);
                if level[b] != 0 {
                    continue;
                }
                remaining[b][oi] -= 1;
                if remaining[b][oi] == 0 {
                    level[b] = level[s] + 1;
                    choice[b] = oi as u32;
                    queue.push_back(b);
                }
            }
        }
        (level, choice)
    }
}

fn mask_vertices(n: usize, m: Mask) -> Vec<usize> {
    VertexSet::from_mask(n, m).to_vec()
}

/// ζ(G) exactly, or the interval known when a decision stays open.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LocalizationNumber {
    pub graph_hash: String,
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// Where the interval comes from when no decision was attempted or closed.
    pub note: String,
    /// Winning strategy at `upper`, when the solver produced one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<PositionalStrategy>,
}

/// Scans k upward from 1, deciding each value exactly.
///
/// The upper end is the size of a greedy resolving set, since a resolving
/// set wins in one round. Moore graphs of degree d ≥ 5 are not searched:
/// the staged strategy gives d and the neighborhood argument gives d − 1.
pub fn localization_number(g: &Graph, opts: &LocOptions) -> Result<LocalizationNumber> {
    let n = g.order();
    let make = |value, lower, upper, note: String, strategy| LocalizationNumber {
        graph_hash: g.hash().to_string(),
        value,
        lower,
        upper,
        note,
        strategy,
    };
    if n <= 1 {
        return Ok(make(Some(0), 0, 0, "trivial graph".into(), None));
    }
    if let Some(d) = is_moore_diam2(g) {
        if d >= 5 {
            return Ok(make(
                None,
                d - 1,
                d,
                format!(
                    "Moore graph of degree {d}: between {} and {d}, not searched",
                    d - 1
                ),
                None,
            ));
        }
    }
    let upper = greedy_resolving(g).len().max(1);
    let mut lower = 1;
    while lower < upper {
        match loc_decide(g, lower, opts)? {
            LocDecision::CopWin { strategy } => {
                return Ok(make(
                    Some(lower),
                    lower,
                    lower,
                    "decided".into(),
                    Some(strategy),
                ));
            }
            LocDecision::RobberWin => lower += 1,
            LocDecision::Unknown { reason } => {
                return Ok(make(
                    None,
                    lower,
                    upper,
                    format!("open at k = {lower}: {reason}"),
                    None,
                ));
            }
        }
    }
    let strategy = match loc_decide(g, upper, opts)? {
        LocDecision::CopWin { strategy } => Some(strategy),
        _ => None,
    };
    Ok(make(Some(upper), upper, upper, "decided".into(), strategy))
}
