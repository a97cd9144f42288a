//! Trees: the support-count bracket `⌈n/2⌉ <= γ_sp <= n − s`, the families
//! ℛ (γ_sp = n/2) and 𝒮 (γ_sp = n − s), their build sequences, seeded
//! generators, the splitting check and Prüfer enumeration.
//!
//! Membership is decided by comparing γ_sp with the extremal value. The
//! decompositions are separate structural algorithms; agreement between the
//! two is what the exhaustive tests check.

mod decompose;
mod prufer;
mod sequence;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::rng::{pick, seeded};
use crate::solver::{gamma_sp_exact, SolverConfig, SolverError};

pub use prufer::{all_labeled_trees, tree_from_prufer, LabeledTrees};
pub use sequence::{BuildSequence, Family, Status, StatusLabeling, Step};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("input is not a tree")]
    NotATree,
    #[error("tree needs n >= {min}, got n = {n}")]
    TooSmall { n: usize, min: usize },
    #[error("tree has odd order {0}")]
    OddOrder(usize),
    #[error("{0}")]
    BadParameter(&'static str),
    #[error("build sequence line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("build sequence step {step}: {msg}")]
    Replay { step: usize, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("splitting property violated at edge {edge:?}")]
    SplitViolation { edge: (usize, usize) },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

fn require_tree(t: &Graph, min: usize) -> Result<(), TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    if t.n() < min {
        return Err(TreeError::TooSmall { n: t.n(), min });
    }
    Ok(())
}

fn gamma(t: &Graph, cfg: &SolverConfig) -> Result<usize, TreeError> {
    Ok(gamma_sp_exact(t, cfg)?.gamma_sp)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeMeta {
    /// Number of support vertices.
    pub s: usize,
    pub end_vertices: VertexSet,
    pub supports: VertexSet,
    pub strong_supports: VertexSet,
}

pub fn tree_meta(t: &Graph) -> TreeMeta {
    let sup = t.support_vertices();
    TreeMeta { s: sup.supports.len(), end_vertices: t.end_vertices(), supports: sup.supports, strong_supports: sup.strong }
}

/// `(⌈n/2⌉, n − s)`.
pub fn tree_bounds(t: &Graph) -> Result<(usize, usize), TreeError> {
    require_tree(t, 3)?;
    Ok((t.n().div_ceil(2), t.n() - tree_meta(t).s))
}

/// `γ_sp(t) = n/2`.
pub fn is_family_r(t: &Graph) -> Result<bool, TreeError> {
    is_family_r_with(t, &SolverConfig::default())
}

pub fn is_family_r_with(t: &Graph, cfg: &SolverConfig) -> Result<bool, TreeError> {
    require_tree(t, 2)?;
    Ok(t.n().is_multiple_of(2) && 2 * gamma(t, cfg)? == t.n())
}

/// `γ_sp(t) = n − s`.
pub fn is_family_s(t: &Graph) -> Result<bool, TreeError> {
    is_family_s_with(t, &SolverConfig::default())
}

pub fn is_family_s_with(t: &Graph, cfg: &SolverConfig) -> Result<bool, TreeError> {
    let (_, upper) = tree_bounds(t)?;
    Ok(gamma(t, cfg)? == upper)
}

/// An ℛ build sequence for `t` with the labeling it induces, or `None`
/// when `t` is not in ℛ.
pub fn decompose_r(t: &Graph) -> Result<Option<(BuildSequence, StatusLabeling)>, TreeError> {
    require_tree(t, 2)?;
    if t.n() % 2 == 1 {
        return Err(TreeError::OddOrder(t.n()));
    }
    Ok(decompose::decompose_r(t))
}

/// An 𝒮 build sequence for `t` with the labeling it induces, or `None`
/// when `t` is not in 𝒮.
pub fn decompose_s(t: &Graph) -> Result<Option<(BuildSequence, StatusLabeling)>, TreeError> {
    require_tree(t, 3)?;
    Ok(decompose::decompose_s(t))
}

/// A random ℛ tree on `2m` vertices. The base is `a_1 = 0, b_1 = 1`; step
/// `j` adds `a_j = 2j − 2` and `b_j = 2j − 1`, attached to a vertex drawn
/// uniformly from those already present.
pub fn generate_r(m: usize, seed: u64) -> Result<(Graph, BuildSequence), TreeError> {
    if m < 1 {
        return Err(TreeError::BadParameter("ℛ generator needs m >= 1"));
    }
    let mut rng = seeded(seed);
    let mut steps = vec![Step::RBase { a: 0, b: 1 }];
    for j in 1..m {
        let present: Vec<usize> = (0..2 * j).collect();
        steps.push(Step::RPair { a: 2 * j, b: 2 * j + 1, attach: pick(&mut rng, &present) });
    }
    let seq = BuildSequence { family: Family::R, steps };
    let (g, _) = seq.replay()?;
    Ok((g, seq))
}

/// A random 𝒮 tree from `j − 1` steps after the base `a_1 = 0, b_0 = 1,
/// b_1 = 2`. Each step draws a kind uniformly among those with at least one
/// valid attachment vertex in the current tree, then the vertex uniformly
/// from the ascending candidate list. New vertices take the next free ids,
/// `a` before `b`.
pub fn generate_s(j: usize, seed: u64) -> Result<(Graph, BuildSequence), TreeError> {
    if j < 1 {
        return Err(TreeError::BadParameter("𝒮 generator needs j >= 1"));
    }
    let mut rng = seeded(seed);
    let mut status = vec![Status::A, Status::B, Status::B];
    let mut adj: Vec<Vec<usize>> = vec![vec![1], vec![0, 2], vec![1]];
    let mut steps = vec![Step::SBase { a: 0, b0: 1, b1: 2 }];
    for _ in 1..j {
        let b_vertices: Vec<usize> = (0..status.len()).filter(|&v| status[v] == Status::B).collect();
        let is_support = |v: usize| adj[v].iter().any(|&u| adj[u].len() == 1);
        let (supports, others): (Vec<usize>, Vec<usize>) = b_vertices.iter().partition(|&&v| is_support(v));
        let kinds: Vec<u8> = [(1, &b_vertices), (2, &others), (3, &supports)]
            .into_iter()
            .filter(|(_, c)| !c.is_empty())
            .map(|(k, _)| k)
            .collect();
        let next = status.len();
        let step = match pick(&mut rng, &kinds) {
            1 => Step::SPair { a: next, b: next + 1, attach: pick(&mut rng, &b_vertices) },
            2 => Step::SLeafA { a: next, attach: pick(&mut rng, &others) },
            _ => Step::SLeafB { b: next, attach: pick(&mut rng, &supports) },
        };
        let new_edges = match step {
            Step::SPair { a, b, attach } => {
                status.extend([Status::A, Status::B]);
                vec![(a, b), (attach, b)]
            }
            Step::SLeafA { a, attach } => {
                status.push(Status::A);
                vec![(attach, a)]
            }
            Step::SLeafB { b, attach } => {
                status.push(Status::B);
                vec![(attach, b)]
            }
            _ => unreachable!("only growth steps are drawn"),
        };
        adj.resize(status.len(), Vec::new());
        for (u, v) in new_edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        steps.push(step);
    }
    let seq = BuildSequence { family: Family::S, steps };
    let (g, _) = seq.replay()?;
    Ok((g, seq))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitEdge {
    pub edge: (usize, usize),
    pub orders: (usize, usize),
    pub gamma_sp: (usize, usize),
    /// γ_sp of the two halves sums to γ_sp of the tree.
    pub additive: bool,
}

/// Removes each edge in turn. On every additive edge both halves must have
/// γ_sp equal to half their order; other edges are only reported.
pub fn split_check(t: &Graph) -> Result<Vec<SplitEdge>, TreeError> {
    split_check_with(t, &SolverConfig::default())
}

pub fn split_check_with(t: &Graph, cfg: &SolverConfig) -> Result<Vec<SplitEdge>, TreeError> {
    require_tree(t, 2)?;
    let n = t.n();
    if n % 2 == 1 {
        return Err(TreeError::OddOrder(n));
    }
    let total = gamma(t, cfg)?;
    if 2 * total != n {
        return Err(TreeError::Precondition(format!("γ_sp = {total} is not n/2 = {}", n / 2)));
    }
    let mut report = Vec::with_capacity(n - 1);
    for (u, v) in t.edges() {
        let (du, dv) = (t.distances_from(u), t.distances_from(v));
        let side: VertexSet = (0..n).filter(|&w| du[w] < dv[w]).collect();
        let (left, _) = t.induced_subgraph(&side);
        let (right, _) = t.induced_subgraph(&side.complement(n));
        let parts = (gamma(&left, cfg)?, gamma(&right, cfg)?);
        let additive = parts.0 + parts.1 == total;
        if additive && (2 * parts.0 != left.n() || 2 * parts.1 != right.n()) {
            return Err(TreeError::SplitViolation { edge: (u, v) });
        }
        report.push(SplitEdge { edge: (u, v), orders: (left.n(), right.n()), gamma_sp: parts, additive });
    }
    Ok(report)
}
