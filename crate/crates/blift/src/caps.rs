//! Search caps and budgets.
//!
//! Every representation search is exhaustive within explicit bounds. The caps
//! below bound the graphs a search may enumerate; exceeding them produces a
//! resource error, never a silent "no".

use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicI64, Ordering};

/// Caps on representation searches.
///
/// `max_parallel` defaults to 4: a parallel class of 5 edges forces a
/// U(2,5)-restriction in the lift matroid, so callers probing matroids with
/// such restrictions must raise the cap explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_parallel: usize,
    /// Upper bound on enumeration/search tree nodes in one top-level call.
    pub node_budget: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_vertices: 8,
            max_edges: 14,
            max_parallel: 4,
            node_budget: 2_000_000_000,
        }
    }
}

impl SearchCaps {
    /// Caps large enough to decide membership for every minor of an
    /// `n`-element matroid exhaustively: a coloop-free representation on `m`
    /// edges has at most `m` vertices (each vertex carries degree >= 2).
    pub fn for_ground_size(n: usize) -> Self {
        let d = SearchCaps::default();
        SearchCaps {
            max_vertices: d.max_vertices.max(n),
            max_edges: d.max_edges.max(n),
            max_parallel: d.max_parallel.max(n),
            node_budget: d.node_budget,
        }
    }
}

/// Shared countdown used by searches; safe to decrement from worker threads.
#[derive(Debug)]
pub struct NodeBudget {
    remaining: AtomicI64,
}

impl NodeBudget {
    pub fn new(limit: u64) -> Self {
        NodeBudget {
            remaining: AtomicI64::new(limit.min(i64::MAX as u64) as i64),
        }
    }

    /// Charge `n` nodes; returns false once the budget is gone.
    #[inline]
    pub fn charge(&self, n: u64) -> bool {
        self.remaining.fetch_sub(n as i64, Ordering::Relaxed) > n as i64
    }

    pub fn exhausted(&self) -> bool {
        self.remaining.load(Ordering::Relaxed) <= 0
    }
}
