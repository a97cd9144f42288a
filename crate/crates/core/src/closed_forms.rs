//! Closed-form super domination numbers for paths, cycles, complete graphs,
//! stars and complete bipartite graphs, plus explicit minimum sets for the
//! standard labelings of [`generate_standard`](crate::graph::generate_standard).

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphKind, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("{family} formula needs {requirement}")]
    OutOfDomain { family: &'static str, requirement: &'static str },
}

fn domain(family: &'static str, requirement: &'static str) -> ClosedFormError {
    ClosedFormError::OutOfDomain { family, requirement }
}

/// `⌈n/2⌉` when `n ≡ 0, 3 (mod 4)`, otherwise `⌈(n+1)/2⌉`.
pub fn gamma_sp_cycle(n: usize) -> Result<usize, ClosedFormError> {
    if n < 3 {
        return Err(domain("cycle", "n >= 3"));
    }
    Ok(match n % 4 {
        0 | 3 => n.div_ceil(2),
        _ => (n + 1).div_ceil(2),
    })
}

pub fn gamma_sp_path(n: usize) -> Result<usize, ClosedFormError> {
    if n < 3 {
        return Err(domain("path", "n >= 3"));
    }
    Ok(n.div_ceil(2))
}

pub fn gamma_sp_complete(n: usize) -> Result<usize, ClosedFormError> {
    if n < 2 {
        return Err(domain("complete", "n >= 2"));
    }
    Ok(n - 1)
}

/// `K_{1,n-1}`, `n` counting the center.
pub fn gamma_sp_star(n: usize) -> Result<usize, ClosedFormError> {
    if n < 2 {
        return Err(domain("star", "n >= 2"));
    }
    Ok(n - 1)
}

pub fn gamma_sp_complete_bipartite(m: usize, n: usize) -> Result<usize, ClosedFormError> {
    if m.min(n) < 2 {
        return Err(domain("complete bipartite", "min(m, n) >= 2; use the star formula"));
    }
    Ok(m + n - 2)
}

/// How a minimum set is built for the standard labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// No vertex can leave `D`.
    AllVertices,
    /// Drop the last vertex; vertex 0 witnesses it.
    DropOneVertex,
    /// Drop one vertex from each side.
    DropOnePerSide,
    /// Outside vertices at positions `0, 3 (mod 4)`, with a fix-up at the end.
    PathBlocks,
    /// Consecutive pairs `{4i+1, 4i+2}` in `D`, with a fix-up at the end.
    CycleBlocks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub kind: GraphKind,
    pub value: usize,
    pub construction: Construction,
}

fn closed_form(kind: GraphKind) -> Option<ClosedForm> {
    use Construction::*;
    let (value, construction) = match kind {
        GraphKind::Empty(n) if n >= 1 => (n, AllVertices),
        GraphKind::Complete(n) => (gamma_sp_complete(n).ok()?, DropOneVertex),
        GraphKind::Star(n) => (gamma_sp_star(n).ok()?, DropOneVertex),
        GraphKind::Path(n) => (gamma_sp_path(n).ok()?, PathBlocks),
        GraphKind::Cycle(n) => (gamma_sp_cycle(n).ok()?, CycleBlocks),
        GraphKind::CompleteBipartite(a, b) => (gamma_sp_complete_bipartite(a, b).ok()?, DropOnePerSide),
        _ => return None,
    };
    Some(ClosedForm { kind, value, construction })
}

/// Recognises the families above from degrees, connectivity and a
/// bipartition test. Graphs outside them (or not recognised) yield `None`.
pub fn recognize(g: &Graph) -> Option<GraphKind> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let q = g.q();
    if q == 0 {
        return Some(GraphKind::Empty(n));
    }
    if !g.is_connected() {
        return None;
    }
    let degrees = g.degrees();
    let max = *degrees.iter().max()?;
    let min = *degrees.iter().min()?;
    if q == n * (n - 1) / 2 {
        return Some(GraphKind::Complete(n));
    }
    if max == n - 1 && min == 1 && q == n - 1 {
        return Some(GraphKind::Star(n));
    }
    if q == n - 1 && max == 2 {
        return Some(GraphKind::Path(n));
    }
    if q == n && min == 2 && max == 2 {
        return Some(GraphKind::Cycle(n));
    }
    let side = bipartition(g)?;
    let (a, b) = (side.len(), n - side.len());
    if q == a * b && a.min(b) >= 2 {
        return Some(GraphKind::CompleteBipartite(a.min(b), a.max(b)));
    }
    None
}

/// Colour class of vertex 0 in a proper 2-colouring of a connected graph.
fn bipartition(g: &Graph) -> Option<VertexSet> {
    let dist = g.distances_from(0);
    let side: VertexSet = (0..g.n()).filter(|&v| dist[v].is_some_and(|d| d % 2 == 0)).collect();
    g.edges().all(|(u, v)| side.contains(u) != side.contains(v)).then_some(side)
}

pub fn recognize_and_solve(g: &Graph) -> Option<ClosedForm> {
    recognize(g).and_then(closed_form)
}

/// A minimum super dominating set of `generate_standard(kind)`, built
/// directly rather than searched.
pub fn construct_minimum_set(kind: GraphKind) -> Option<VertexSet> {
    closed_form(kind)?;
    let set = match kind {
        GraphKind::Empty(n) => VertexSet::full(n),
        GraphKind::Complete(n) | GraphKind::Star(n) => VertexSet::full(n - 1),
        GraphKind::CompleteBipartite(a, b) => {
            let mut s = VertexSet::full(a + b);
            s.remove(0);
            s.remove(a);
            s
        }
        GraphKind::Path(n) => path_blocks(n),
        GraphKind::Cycle(n) => cycle_blocks(n),
        _ => return None,
    };
    Some(set)
}

/// Path `0-1-...-(n-1)`: vertices at positions `0, 3 (mod 4)` leave `D`,
/// witnessed by their inner neighbour; when `n ≡ 1 (mod 4)` the lone last
/// vertex stays in `D`.
fn path_blocks(n: usize) -> VertexSet {
    let mut d: VertexSet = (0..n).filter(|i| matches!(i % 4, 1 | 2)).collect();
    if n % 4 == 1 {
        d.insert(n - 1);
    }
    d
}

/// Cycle on `0..n`: `D` holds the pairs `{4i+1, 4i+2}` of every full block
/// of four. For `n ≡ 1 (mod 4)` the last vertex joins `D`; for `n ≡ 2, 3`
/// the last two do.
fn cycle_blocks(n: usize) -> VertexSet {
    let full_blocks = n / 4;
    let mut d: VertexSet = (0..full_blocks).flat_map(|i| [4 * i + 1, 4 * i + 2]).collect();
    match n % 4 {
        1 => {
            d.insert(n - 1);
        }
        2 | 3 => {
            d.insert(n - 2);
            d.insert(n - 1);
        }
        _ => {}
    }
    d
}
