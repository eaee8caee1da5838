//! Search for k-uniform, r-regular hypergraphs of Berge girth at least 5, and
//! the on-disk cache of found gadgets.

use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{berge_girth, certify_detectable, Hypergraph};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::kneser::GroundMask;

/// Cache file contents: `{"k": .., "m": .., "regularity": .., "edges": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub k: usize,
    pub m: usize,
    pub regularity: usize,
    pub edges: Vec<Vec<u16>>,
}

impl Gadget {
    pub fn hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.m, self.edges.clone())
    }

    /// Re-checks uniformity, regularity and the detectability certificate.
    pub fn verify(&self) -> Result<Hypergraph> {
        let h = self.hypergraph()?;
        if h.uniformity() != Some(self.k) || h.regularity() != Some(self.regularity) {
            return Err(Error::invalid(
                "gadget is not uniform and regular as recorded",
            ));
        }
        if !berge_girth(&h).is_none_or(|g| g >= 5) || !certify_detectable(&h, self.k)? {
            return Err(Error::invalid("gadget fails the girth/degree certificate"));
        }
        Ok(h)
    }
}

/// Outcome of [`search_girth5_gadget`].
#[derive(Debug, Clone, Serialize)]
pub struct GadgetSearch {
    pub gadget: Option<Hypergraph>,
    /// Orders that were searched to completion without success.
    pub orders_refuted: Vec<usize>,
    /// Order being searched when the budget ran out, if it did.
    pub stopped_at: Option<usize>,
    pub nodes: u64,
}

/// The regularity ⌈k/2 + 1⌉ used by the cover construction.
pub fn default_regularity(k: usize) -> usize {
    k / 2 + 1 + (k % 2)
}

/// Smallest order allowed by the radius-2 Moore-type count: the 2-section
/// ball of radius 2 around any vertex is a tree in a girth-5 hypergraph.
pub fn gadget_lower_bound(k: usize, r: usize) -> usize {
    let a = r * (k - 1);
    1 + a + a * (r - 1) * (k - 1)
}

/// Searches orders m = lower bound ..= `max_vertices` (with k | m·r) for a
/// k-uniform, r-regular hypergraph of Berge girth ≥ 5.
///
/// Each order gets deterministic backtracking up to a per-order node cap,
/// then seeded randomized restarts up to the same cap, before moving on.
/// Untouched vertices are interchangeable, so they are only ever brought in
/// lowest-index first. The result is deterministic for a given budget.
pub fn search_girth5_gadget(
    k: usize,
    regularity: Option<usize>,
    max_vertices: usize,
    budget: &Budget,
) -> GadgetSearch {
    let r = regularity.unwrap_or_else(|| default_regularity(k));
    let mut meter = budget.meter();
    let mut out = GadgetSearch {
        gadget: None,
        orders_refuted: Vec::new(),
        stopped_at: None,
        nodes: 0,
    };
    if k < 2 || r == 0 || max_vertices > MAX_GADGET_ORDER {
        return out;
    }
    let orders: Vec<usize> = (gadget_lower_bound(k, r)..=max_vertices)
        .filter(|m| (m * r).is_multiple_of(k))
        .collect();
    let per_order = match budget.max_nodes {
        Some(max) => (max / (2 * orders.len().max(1) as u64)).max(10_000),
        None => 2_000_000,
    };
    for &m in &orders {
        let mut s = Search::new(k, r, m);
        match s.run(&mut meter, Some(per_order)) {
            Step::Found => {
                out.gadget = Some(s.hypergraph());
                break;
            }
            Step::Refuted => {
                out.orders_refuted.push(m);
                continue;
            }
            Step::OutOfBudget => {
                out.stopped_at = Some(m);
                break;
            }
            Step::Restart => {}
        }
        match restarts(k, r, m, m as u64, per_order, &mut meter) {
            (Step::Found, Some(h)) => {
                out.gadget = Some(h);
                break;
            }
            (Step::Refuted, _) => out.orders_refuted.push(m),
            (Step::OutOfBudget, _) => {
                out.stopped_at = Some(m);
                break;
            }
            _ => {}
        }
    }
    out.nodes = meter.used();
    out
}

/// Largest order the bitmask representation supports.
pub const MAX_GADGET_ORDER: usize = 256;

/// Randomized restarts with geometrically growing per-restart limits until
/// `total` nodes have been spent at this order.
fn restarts(
    k: usize,
    r: usize,
    m: usize,
    seed: u64,
    total: u64,
    meter: &mut Meter,
) -> (Step, Option<Hypergraph>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = meter.used();
    let mut limit = 1_000u64;
    while meter.used() - start < total {
        let mut s = Search::new(k, r, m);
        s.shuffle = Some(ChaCha8Rng::seed_from_u64(rand::Rng::gen(&mut rng)));
        match s.run(meter, Some(limit.min(total - (meter.used() - start)))) {
            Step::Found => return (Step::Found, Some(s.hypergraph())),
            Step::Refuted => return (Step::Refuted, None),
            Step::OutOfBudget => return (Step::OutOfBudget, None),
            Step::Restart => limit = limit.saturating_mul(3) / 2,
        }
    }
    (Step::Restart, None)
}

enum Step {
    Found,
    Refuted,
    OutOfBudget,
    Restart,
}

struct Search {
    k: usize,
    r: usize,
    m: usize,
    degree: Vec<usize>,
    adj: Vec<GroundMask>,
    edges: Vec<Vec<u16>>,
    /// Lowest vertex never used by any edge.
    fresh: usize,
    shuffle: Option<ChaCha8Rng>,
    local_nodes: u64,
}

fn set(m: &mut GroundMask, v: usize) {
    m.0[v / 64] |= 1 << (v % 64);
}

fn has(m: &GroundMask, v: usize) -> bool {
    m.0[v / 64] >> (v % 64) & 1 == 1
}

fn or(a: &GroundMask, b: &GroundMask) -> GroundMask {
    let mut o = *a;
    for i in 0..4 {
        o.0[i] |= b.0[i];
    }
    o
}

impl Search {
    fn new(k: usize, r: usize, m: usize) -> Search {
        Search {
            k,
            r,
            m,
            degree: vec![0; m],
            adj: vec![GroundMask::default(); m],
            edges: Vec::new(),
            fresh: 0,
            shuffle: None,
            local_nodes: 0,
        }
    }

    fn hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.m, self.edges.clone()).expect("search produces valid edges")
    }

    /// Vertices within 2-section distance 2 of `v`, including `v`.
    fn ball2(&self, v: usize) -> GroundMask {
        let mut b = self.adj[v];
        set(&mut b, v);
        let mut out = b;
        for i in 0..self.m {
            if has(&b, i) {
                out = or(&out, &self.adj[i]);
            }
        }
        out
    }

    /// True when `a` and `b` are at 2-section distance at least 4.
    fn far(&self, a: usize, ball_b: &GroundMask) -> bool {
        let mut na = self.adj[a];
        set(&mut na, a);
        na.is_disjoint(ball_b)
    }

    fn run(&mut self, meter: &mut Meter, restart_after: Option<u64>) -> Step {
        self.local_nodes = 0;
        self.dfs(meter, restart_after, None)
    }

    fn dfs(
        &mut self,
        meter: &mut Meter,
        restart_after: Option<u64>,
        last: Option<(usize, Vec<usize>)>,
    ) -> Step {
        if !meter.charge(1) {
            return Step::OutOfBudget;
        }
        self.local_nodes += 1;
        if restart_after.is_some_and(|l| self.local_nodes > l) {
            return Step::Restart;
        }
        let Some(v) = (0..self.m).find(|&v| self.degree[v] < self.r) else {
            return Step::Found;
        };
        // Candidates: deficient, far from v, and not beyond the first fresh
        // vertex block (fresh vertices are interchangeable).
        let ball_v = self.ball2(v);
        let cand: Vec<usize> = (v + 1..self.m)
            .filter(|&u| self.degree[u] < self.r && self.far(u, &ball_v))
            .collect();
        if cand.len() < self.k - 1 {
            return Step::Refuted;
        }
        let fresh_from = self.fresh.max(v + 1);
        let mut combos = Vec::new();
        let mut buf = Vec::with_capacity(self.k - 1);
        self.collect_edges(&cand, 0, fresh_from, &mut buf, &mut combos);
        // Edges at the same pivot are added in increasing order.
        if let Some((pv, prev)) = &last {
            if *pv == v {
                combos.retain(|c| c > prev);
            }
        }
        if let Some(rng) = self.shuffle.as_mut() {
            combos.shuffle(rng);
        }
        for others in combos {
            let mut edge = vec![v];
            edge.extend(&others);
            let saved_fresh = self.fresh;
            for &x in &edge {
                self.degree[x] += 1;
                self.fresh = self.fresh.max(x + 1);
            }
            let saved_adj: Vec<GroundMask> = edge.iter().map(|&x| self.adj[x]).collect();
            for &x in &edge {
                for &y in &edge {
                    if x != y {
                        set(&mut self.adj[x], y);
                    }
                }
            }
            self.edges
                .push(edge.iter().map(|&x| x as u16 + 1).collect());
            let step = self.dfs(meter, restart_after, Some((v, others)));
            if matches!(step, Step::Found | Step::OutOfBudget | Step::Restart) {
                return step;
            }
            self.edges.pop();
            for (i, &x) in edge.iter().enumerate() {
                self.adj[x] = saved_adj[i];
                self.degree[x] -= 1;
            }
            self.fresh = saved_fresh;
        }
        Step::Refuted
    }

    /// (k−1)-subsets of `cand` that are pairwise far apart and use fresh
    /// vertices only as a lowest-index prefix.
    fn collect_edges(
        &self,
        cand: &[usize],
        from: usize,
        fresh_from: usize,
        buf: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if buf.len() == self.k - 1 {
            out.push(buf.clone());
            return;
        }
        for i in from..cand.len() {
            let u = cand[i];
            if u >= fresh_from {
                // The next fresh vertex must be the lowest unused one.
                let next_fresh = buf.iter().filter(|&&x| x >= fresh_from).count() + fresh_from;
                if u != next_fresh {
                    continue;
                }
            }
            let ball_u = self.ball2(u);
            if buf.iter().all(|&x| self.far(x, &ball_u)) {
                buf.push(u);
                self.collect_edges(cand, i + 1, fresh_from, buf, out);
                buf.pop();
            }
        }
    }
}

/// Cache directory: `$LOCDIM_CACHE_DIR`, else `$XDG_CACHE_HOME/locdim/gadgets`,
/// else `$HOME/.cache/locdim/gadgets`.
pub fn cache_dir() -> PathBuf {
    if let Some(d) = std::env::var_os("LOCDIM_CACHE_DIR") {
        return PathBuf::from(d);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("locdim").join("gadgets")
}

fn cache_file(dir: &Path, k: usize, r: usize) -> PathBuf {
    dir.join(format!("gadget-k{k}-r{r}.json"))
}

/// Loads and re-verifies a cached gadget. A file that fails verification is
/// an error, not a silent miss.
pub fn load_cached_gadget(dir: &Path, k: usize, r: usize) -> Result<Option<Hypergraph>> {
    let path = cache_file(dir, k, r);
    if !path.exists() {
        return Ok(None);
    }
    let g: Gadget = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
    if g.k != k || g.regularity != r {
        return Err(Error::invalid(format!(
            "{} records k={} r={}",
            path.display(),
            g.k,
            g.regularity
        )));
    }
    g.verify().map(Some)
}

pub fn store_gadget(dir: &Path, h: &Hypergraph) -> Result<PathBuf> {
    let k = h
        .uniformity()
        .ok_or_else(|| Error::invalid("gadget must be uniform"))?;
    let r = h
        .regularity()
        .ok_or_else(|| Error::invalid("gadget must be regular"))?;
    let g = Gadget {
        k,
        m: h.n,
        regularity: r,
        edges: h.edges.clone(),
    };
    g.verify()?;
    std::fs::create_dir_all(dir)?;
    let path = cache_file(dir, k, r);
    std::fs::write(&path, serde_json::to_string_pretty(&g)? + "\n")?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_girth, Graph};
    use crate::hyper::is_detectable;

    fn as_graph(h: &Hypergraph) -> Graph {
        let edges: Vec<_> = h
            .edges
            .iter()
            .map(|e| (e[0] as usize - 1, e[1] as usize - 1))
            .collect();
        Graph::from_edges(h.n, &edges, None).unwrap()
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(gadget_lower_bound(2, 2), 5);
        assert_eq!(gadget_lower_bound(2, 3), 10);
        assert_eq!(gadget_lower_bound(3, 3), 31);
        assert_eq!(default_regularity(2), 2);
        assert_eq!(default_regularity(3), 3);
        assert_eq!(default_regularity(4), 3);
        assert_eq!(default_regularity(5), 4);
    }

    #[test]
    fn k2_finds_the_five_cycle() {
        let s = search_girth5_gadget(2, None, 12, &Budget::nodes(100_000));
        let h = s.gadget.unwrap();
        assert_eq!(h.n, 5);
        assert_eq!(h.regularity(), Some(2));
        assert_eq!(graph_girth(&as_graph(&h)), Some(5));
    }

    #[test]
    fn k2_cubic_finds_petersen_order() {
        let s = search_girth5_gadget(2, Some(3), 12, &Budget::nodes(1_000_000));
        let h = s.gadget.unwrap();
        assert_eq!(h.n, 10);
        let g = as_graph(&h);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(graph_girth(&g), Some(5));
        assert_eq!(crate::graph::is_moore_diam2(&g), Some(3));
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let s = search_girth5_gadget(3, None, 40, &Budget::nodes(50));
        assert!(s.gadget.is_none());
        assert!(s.stopped_at.is_some());
    }

    #[test]
    fn cache_round_trip_and_reverification() {
        let dir = tempfile::tempdir().unwrap();
        let c5 = Hypergraph::new(
            5,
            vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
        )
        .unwrap();
        assert!(load_cached_gadget(dir.path(), 2, 2).unwrap().is_none());
        store_gadget(dir.path(), &c5).unwrap();
        assert_eq!(load_cached_gadget(dir.path(), 2, 2).unwrap(), Some(c5));
        // A corrupted file (a 4-cycle) is rejected on load.
        let bad = Gadget {
            k: 2,
            m: 4,
            regularity: 2,
            edges: vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]],
        };
        std::fs::write(
            dir.path().join("gadget-k2-r2.json"),
            serde_json::to_string(&bad).unwrap(),
        )
        .unwrap();
        assert!(load_cached_gadget(dir.path(), 2, 2).is_err());
    }

    #[test]
    fn found_gadgets_are_detectable() {
        let h = search_girth5_gadget(2, None, 12, &Budget::nodes(100_000))
            .gadget
            .unwrap();
        assert!(certify_detectable(&h, 2).unwrap());
        assert!(is_detectable(&h, 2).unwrap().detectable);
    }
}
