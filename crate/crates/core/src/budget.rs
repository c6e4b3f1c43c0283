//! Search budgets and outcome flags.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Limits for one search. `None` means unlimited.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 10_000_000;
    pub const DEFAULT_SECS: u64 = 60;

    pub fn unlimited() -> Self {
        SearchBudget { node_limit: None, time_limit: None }
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget { node_limit: Some(limit), time_limit: None }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter {
            nodes: 0,
            limit: self.node_limit,
            deadline: self.time_limit.map(|t| Instant::now() + t),
            tripped: false,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: Some(Self::DEFAULT_NODES),
            time_limit: Some(Duration::from_secs(Self::DEFAULT_SECS)),
        }
    }
}

/// How a budgeted search ended. `Exhausted` is never a proof of anything.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Proved,
    Disproved,
    Exhausted,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Proved => "proved",
            Outcome::Disproved => "disproved",
            Outcome::Exhausted => "exhausted",
        })
    }
}

/// Node counter with a lazily checked wall-clock deadline.
#[derive(Debug)]
pub(crate) struct Meter {
    pub nodes: u64,
    limit: Option<u64>,
    deadline: Option<Instant>,
    tripped: bool,
}

impl Meter {
    /// Counts one node; false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.tripped {
            return false;
        }
        self.nodes += 1;
        let over = self.limit.is_some_and(|l| self.nodes > l);
        if over || (self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d)) {
            self.tripped = true;
        }
        !self.tripped
    }

    pub fn exhausted(&self) -> bool {
        self.tripped
    }
}
