use std::time::{Duration, Instant};

/// Work limit shared by the exponential searches.
///
/// `max_nodes` counts whatever unit the search calls a node (search-tree
/// nodes for the metric-dimension solver, placement evaluations for the
/// localization solver, backtracking steps for the gadget search).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        deadline: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            deadline: None,
        }
    }

    pub fn with_seconds(mut self, seconds: f64) -> Self {
        self.deadline = Some(Instant::now() + Duration::from_secs_f64(seconds));
        self
    }

    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = Some(max_nodes);
        self
    }

    pub fn meter(&self) -> Meter {
        Meter {
            budget: *self,
            used: 0,
            calls: 0,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}

/// Running counter against a [`Budget`].
#[derive(Debug, Clone)]
pub struct Meter {
    budget: Budget,
    used: u64,
    calls: u64,
}

impl Meter {
    /// Charges `amount` units; returns false once the budget is exhausted.
    #[inline]
    pub fn charge(&mut self, amount: u64) -> bool {
        self.used = self.used.saturating_add(amount);
        if let Some(max) = self.budget.max_nodes {
            if self.used > max {
                return false;
            }
        }
        self.calls += 1;
        // Checking the clock on every node is measurable in the hot loops.
        if self.calls & 0x3ff == 0 {
            if let Some(deadline) = self.budget.deadline {
                if Instant::now() >= deadline {
                    return false;
                }
            }
        }
        true
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn would_exceed(&self, amount: u64) -> bool {
        matches!(self.budget.max_nodes, Some(max) if self.used.saturating_add(amount) > max)
    }
}
