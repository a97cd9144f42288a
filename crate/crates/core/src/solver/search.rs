//! Branch and bound over the outside set `O = V - D`.
//!
//! Vertices are decided in index order, "stays in D" before "goes to O", so
//! the first complete assignment with `|O| = k` has the lexicographically
//! smallest `D`. Feasible outside sizes are downward closed (dropping a
//! vertex from `O` never invalidates another witness), so `k` grows from 1
//! until a size fails; the last success is optimal.
//!
//! A partial `O` is viable while every member `w` still has a candidate
//! witness `u ∈ N(w) - O` with `N(u) ∩ O ⊆ {w}`.

use std::cell::Cell;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{Solution, SolverConfig, SolverError};
use crate::graph::{Graph, VertexSet};

/// Bitset operations the search needs; implemented for `u64` (n <= 64) and
/// for `VertexSet`.
trait Bits: Clone + Send + Sync {
    fn zero() -> Self;
    /// `{lo, ..., hi-1}`.
    fn range(lo: usize, hi: usize) -> Self;
    fn with(&self, v: usize) -> Self;
    fn has(&self, v: usize) -> bool;
    fn is_disjoint(&self, other: &Self) -> bool;
    /// Some `u ∈ adj[w] - out` has `adj[u] ∩ out ⊆ {w}`.
    fn witness_exists(adj: &[Self], out: &Self, w: usize) -> bool;
    fn to_set(&self) -> VertexSet;
}

impl Bits for u64 {
    fn zero() -> Self {
        0
    }

    fn range(lo: usize, hi: usize) -> Self {
        let below = |k: usize| if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
        below(hi) & !below(lo)
    }

    fn with(&self, v: usize) -> Self {
        self | 1 << v
    }

    fn has(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }

    fn is_disjoint(&self, other: &Self) -> bool {
        self & other == 0
    }

    fn witness_exists(adj: &[u64], out: &u64, w: usize) -> bool {
        let others = out & !(1 << w);
        let mut cand = adj[w] & !out;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if adj[u] & others == 0 {
                return true;
            }
        }
        false
    }

    fn to_set(&self) -> VertexSet {
        VertexSet::from_mask(*self)
    }
}

impl Bits for VertexSet {
    fn zero() -> Self {
        VertexSet::new()
    }

    fn range(lo: usize, hi: usize) -> Self {
        (lo..hi).collect()
    }

    fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    fn has(&self, v: usize) -> bool {
        self.contains(v)
    }

    fn is_disjoint(&self, other: &Self) -> bool {
        VertexSet::is_disjoint(self, other)
    }

    fn witness_exists(adj: &[VertexSet], out: &VertexSet, w: usize) -> bool {
        let mut others = out.clone();
        others.remove(w);
        adj[w].difference(out).iter().any(|u| adj[u].is_disjoint(&others))
    }

    fn to_set(&self) -> VertexSet {
        self.clone()
    }
}

#[derive(Debug)]
struct TimedOut;

struct Search<'a, S> {
    adj: &'a [S],
    target: usize,
    deadline: Option<Instant>,
    cancelled: &'a AtomicBool,
}

#[derive(Clone)]
struct Node<S> {
    next: usize,
    out: S,
    members: Vec<usize>,
}

const CLOCK_EVERY: u32 = 1 << 12;

thread_local! {
    static TICKS: Cell<u32> = const { Cell::new(0) };
}

impl<S: Bits> Search<'_, S> {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn check_clock(&self) -> Result<(), TimedOut> {
        let t = TICKS.with(|c| {
            let t = c.get().wrapping_add(1);
            c.set(t);
            t
        });
        if t.is_multiple_of(CLOCK_EVERY) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.cancelled.store(true, Ordering::Relaxed);
                }
            }
        }
        if self.cancelled.load(Ordering::Relaxed) {
            return Err(TimedOut);
        }
        Ok(())
    }

    /// Cheap infeasibility test for a node. Each new outside vertex is an
    /// undecided vertex with a possible witness, and needs its own witness:
    /// either a decided D-vertex with no outside neighbour yet and an
    /// undecided neighbour, or an undecided vertex that stays in D.
    fn hopeless(&self, node: &Node<S>) -> bool {
        let n = self.n();
        let need = self.target - node.members.len();
        let remaining = n - node.next;
        if need > remaining {
            return true;
        }
        let undecided = S::range(node.next, n);
        let mut helpers = undecided.clone();
        let mut free = 0;
        for u in 0..node.next {
            if !node.out.has(u) && self.adj[u].is_disjoint(&node.out) {
                helpers = helpers.with(u);
                if !self.adj[u].is_disjoint(&undecided) {
                    free += 1;
                }
            }
        }
        if 2 * need > free + remaining {
            return true;
        }
        let possible = (node.next..n).filter(|&v| !self.adj[v].is_disjoint(&helpers)).count();
        need > possible
    }

    fn children(&self, node: &Node<S>) -> [Option<Node<S>>; 2] {
        let v = node.next;
        let stay = Node { next: v + 1, out: node.out.clone(), members: node.members.clone() };
        let out = node.out.with(v);
        let leave = (S::witness_exists(self.adj, &out, v)
            && node.members.iter().all(|&w| S::witness_exists(self.adj, &out, w)))
        .then(|| {
            let mut members = node.members.clone();
            members.push(v);
            Node { next: v + 1, out, members }
        });
        [Some(stay), leave]
    }

    fn dfs(&self, node: &Node<S>) -> Result<Option<S>, TimedOut> {
        if node.members.len() == self.target {
            return Ok(Some(node.out.clone()));
        }
        if self.hopeless(node) {
            return Ok(None);
        }
        self.check_clock()?;
        for child in self.children(node).into_iter().flatten() {
            if let Some(found) = self.dfs(&child)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Nodes at `depth`, in the same order the sequential DFS visits them.
    fn frontier(&self, node: Node<S>, depth: usize, acc: &mut Vec<Node<S>>) {
        if depth == 0 || node.members.len() == self.target || node.next == self.n() {
            acc.push(node);
            return;
        }
        if self.hopeless(&node) {
            return;
        }
        for child in self.children(&node).into_iter().flatten() {
            self.frontier(child, depth - 1, acc);
        }
    }
}

fn root<S: Bits>() -> Node<S> {
    Node { next: 0, out: S::zero(), members: Vec::new() }
}

const PARALLEL_MIN_N: usize = 16;

fn find_outside<S: Bits>(
    adj: &[S],
    target: usize,
    cfg: &SolverConfig,
    deadline: Option<Instant>,
    pool: Option<&rayon::ThreadPool>,
) -> Result<Option<S>, TimedOut> {
    let cancelled = AtomicBool::new(false);
    let search = Search { adj, target, deadline, cancelled: &cancelled };
    let Some(pool) = pool else {
        return search.dfs(&root());
    };
    let depth = (pool.current_num_threads() * 8).ilog2() as usize + 2;
    let mut nodes = Vec::new();
    search.frontier(root(), depth.min(adj.len()), &mut nodes);
    let run = |node: &Node<S>| match search.dfs(node) {
        Ok(Some(found)) => Some(Ok(found)),
        Ok(None) => None,
        Err(e) => Some(Err(e)),
    };
    let hit = pool.install(|| {
        if cfg.deterministic {
            nodes.par_iter().find_map_first(run)
        } else {
            nodes.par_iter().find_map_any(run)
        }
    });
    hit.transpose()
}

fn solve<S: Bits>(g: &Graph, adj: &[S], cfg: &SolverConfig) -> Result<Solution, SolverError> {
    let n = g.n();
    let started = Instant::now();
    let deadline = cfg.time_budget.map(|b| started + b);
    let pool = (cfg.thread_budget > 1 && n >= PARALLEL_MIN_N)
        .then(|| rayon::ThreadPoolBuilder::new().num_threads(cfg.thread_budget).build())
        .transpose()
        .expect("thread pool construction");
    let timeout = || SolverError::TimeBudgetExceeded(cfg.time_budget.unwrap_or_default());

    let mut best = S::zero();
    for target in 1..=n / 2 {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(timeout());
        }
        match find_outside(adj, target, cfg, deadline, pool.as_ref()).map_err(|_| timeout())? {
            Some(out) => best = out,
            None => break,
        }
    }
    Ok(Solution::from_set(g, best.to_set().complement(n)))
}

/// Exact `γ_sp(G)` with one minimum set and its witness. With
/// `cfg.deterministic` the set is the lexicographically smallest minimum
/// super dominating set, independent of the thread budget.
pub fn gamma_sp_exact(g: &Graph, cfg: &SolverConfig) -> Result<Solution, SolverError> {
    match g.masks() {
        Some(masks) => solve(g, &masks, cfg),
        None => {
            let adj: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
            solve(g, &adj, cfg)
        }
    }
}
