use serde::Serialize;

use super::{greedy_resolving, is_resolving, Classes, ResolvingCertificate};
use crate::budget::{Budget, Meter};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Exact metric dimension, or the interval known when the budget ran out.
#[derive(Debug, Clone, Serialize)]
pub struct MetricDimension {
    /// Present when the search closed.
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    /// A resolving set of size `upper`.
    pub certificate: ResolvingCertificate,
    pub nodes: u64,
    pub budget_exhausted: bool,
}

/// Smallest j with n ≤ j + D^j: the j landmarks see themselves at distance
/// 0 and every other vertex as a vector in {1..D}^j.
pub fn counting_lower_bound(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let Some(d) = g.diameter() else {
        return 1;
    };
    let d = d as u128;
    (1..=n)
        .find(|&j| n as u128 <= j as u128 + d.saturating_pow(j as u32))
        .unwrap_or(n)
}

/// Iterative deepening over the target size from the counting bound up to
/// the greedy size. Each level is a hitting-set search: take the unresolved
/// pair with the fewest usable distinguishers and branch on which of them
/// joins the set, forbidding the ones tried in earlier branches.
pub fn metric_dimension(g: &Graph, budget: &Budget) -> MetricDimension {
    metric_dimension_from(g, budget, 0)
}

/// As [`metric_dimension`], starting the deepening at `known_lower` when it
/// exceeds the counting bound (the caller vouches for it).
pub fn metric_dimension_from(g: &Graph, budget: &Budget, known_lower: usize) -> MetricDimension {
    let greedy = greedy_resolving(g);
    let mut best = greedy.clone();
    let mut lower = counting_lower_bound(g).max(known_lower).min(greedy.len());
    let mut meter = budget.meter();
    let mut exhausted = false;
    let base = match g.diameter() {
        Some(d) => d as u64 + 1,
        None => g.order() as u64,
    };
    while lower < best.len() {
        let mut search = Search {
            g,
            target: lower,
            base,
            chosen: Vec::with_capacity(lower),
            forbidden: VertexSet::empty(g.order()),
            meter: &mut meter,
        };
        match search.run(Classes::new(g.order())) {
            Outcome::Found(s) => {
                best = s;
                break;
            }
            Outcome::Refuted => lower += 1,
            Outcome::OutOfBudget => {
                exhausted = true;
                break;
            }
        }
    }
    best.sort_unstable();
    let certificate = is_resolving(g, &best).expect("landmarks are vertices");
    debug_assert!(certificate.verified);
    let upper = best.len();
    let lower = if exhausted { lower } else { upper };
    MetricDimension {
        value: (!exhausted).then_some(upper),
        lower,
        upper,
        certificate,
        nodes: meter.used(),
        budget_exhausted: exhausted,
    }
}

enum Outcome {
    Found(Vec<usize>),
    Refuted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    target: usize,
    base: u64,
    chosen: Vec<usize>,
    forbidden: VertexSet,
    meter: &'a mut Meter,
}

impl Search<'_> {
    fn run(&mut self, classes: Classes) -> Outcome {
        if !self.meter.charge(1) {
            return Outcome::OutOfBudget;
        }
        if classes.unresolved_pairs() == 0 {
            return Outcome::Found(self.chosen.clone());
        }
        let left = self.target - self.chosen.len();
        // Each landmark splits a class into at most `base` parts.
        if (classes.largest() as u128) > (self.base as u128).saturating_pow(left as u32) {
            return Outcome::Refuted;
        }
        let Some(distinguishers) = self.tightest_pair(&classes) else {
            return Outcome::Refuted;
        };
        let saved = self.forbidden.clone();
        let mut result = Outcome::Refuted;
        for &x in &distinguishers {
            self.chosen.push(x);
            let next = classes.refine(self.g, x);
            let r = self.run(next);
            self.chosen.pop();
            match r {
                Outcome::Refuted => {}
                other => {
                    result = other;
                    break;
                }
            }
            self.forbidden.insert(x);
        }
        self.forbidden = saved;
        result
    }

    /// Usable distinguishers of the unresolved pair that has the fewest,
    /// or `None` when some pair has none.
    fn tightest_pair(&self, classes: &Classes) -> Option<Vec<usize>> {
        let n = self.g.order();
        let usable: Vec<usize> = (0..n).filter(|&x| !self.forbidden.contains(x)).collect();
        let mut best: Option<Vec<usize>> = None;
        for u in 0..n {
            for v in u + 1..n {
                if !classes.same(u, v) {
                    continue;
                }
                let (du, dv) = (self.g.dist_row(u), self.g.dist_row(v));
                let d: Vec<usize> = usable.iter().copied().filter(|&x| du[x] != dv[x]).collect();
                if d.is_empty() {
                    return None;
                }
                if best.as_ref().is_none_or(|b| d.len() < b.len()) {
                    best = Some(d);
                }
            }
        }
        best
    }
}
