use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Named graph families with fixed vertex labelings:
///
/// * `Path(n)`: edges `(i, i+1)`.
/// * `Cycle(n)`: edges `(i, i+1 mod n)`.
/// * `Complete(n)`: all pairs.
/// * `Star(n)`: `K_{1,n-1}` with center `0`.
/// * `CompleteBipartite(m, n)`: sides `0..m` and `m..m+n`.
/// * `Empty(n)`: no edges.
/// * `FriendshipLike(k)`: hub `0` joined to every vertex, plus the matching
///   `(2i-1, 2i)` for `i = 1..=k`; `n = 2k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
    FriendshipLike(usize),
    Other,
}

fn below(kind: &'static str, msg: impl Into<String>) -> GraphError {
    GraphError::BadParameter { kind, msg: msg.into() }
}

pub fn generate_standard(kind: GraphKind) -> Result<Graph, GraphError> {
    use GraphKind::*;
    let (n, edges): (usize, Vec<(usize, usize)>) = match kind {
        Path(n) if n >= 1 => (n, (1..n).map(|i| (i - 1, i)).collect()),
        Path(_) => return Err(below("path", "n >= 1")),
        Cycle(n) if n >= 3 => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
        Cycle(_) => return Err(below("cycle", "n >= 3")),
        Complete(n) if n >= 1 => (n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()),
        Complete(_) => return Err(below("complete", "n >= 1")),
        Star(n) if n >= 2 => (n, (1..n).map(|v| (0, v)).collect()),
        Star(_) => return Err(below("star", "n >= 2")),
        CompleteBipartite(a, b) if a >= 1 && b >= 1 => {
            (a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
        }
        CompleteBipartite(..) => return Err(below("complete bipartite", "m, n >= 1")),
        Empty(n) if n >= 1 => (n, Vec::new()),
        Empty(_) => return Err(below("empty", "n >= 1")),
        FriendshipLike(k) if k >= 1 => {
            let mut edges = Vec::with_capacity(3 * k);
            for i in 1..=k {
                let (x, y) = (2 * i - 1, 2 * i);
                edges.extend([(x, y), (0, x), (0, y)]);
            }
            (2 * k + 1, edges)
        }
        FriendshipLike(_) => return Err(below("friendship-like", "k >= 1")),
        Other => return Err(below("other", "no generator")),
    };
    Graph::from_edge_list(n, &edges)
}

/// Every labeled graph on `n` vertices, `2^(n(n-1)/2)` of them, ordered by
/// the edge mask over pairs `(u, v)`, `u < v`, in lexicographic order.
///
/// # Panics
/// If `n > 11`, where the count no longer fits a `u64` mask.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "too many labeled graphs on {n} vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edge_list(n, &edges).expect("pairs are in range")
    })
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Path(n) => write!(f, "path:{n}"),
            GraphKind::Cycle(n) => write!(f, "cycle:{n}"),
            GraphKind::Complete(n) => write!(f, "complete:{n}"),
            GraphKind::Star(n) => write!(f, "star:{n}"),
            GraphKind::CompleteBipartite(a, b) => write!(f, "bipartite:{a}:{b}"),
            GraphKind::Empty(n) => write!(f, "empty:{n}"),
            GraphKind::FriendshipLike(k) => write!(f, "friendship:{k}"),
            GraphKind::Other => f.write_str("other"),
        }
    }
}

/// Parses the `Display` form, e.g. `cycle:7` or `bipartite:2:3`.
impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let nums: Vec<usize> = parts
            .map(|p| p.parse().map_err(|_| format!("bad number {p:?} in {s:?}")))
            .collect::<Result<_, _>>()?;
        let kind = match (name, nums.as_slice()) {
            ("path", [n]) => GraphKind::Path(*n),
            ("cycle", [n]) => GraphKind::Cycle(*n),
            ("complete", [n]) => GraphKind::Complete(*n),
            ("star", [n]) => GraphKind::Star(*n),
            ("bipartite", [a, b]) => GraphKind::CompleteBipartite(*a, *b),
            ("empty", [n]) => GraphKind::Empty(*n),
            ("friendship", [k]) => GraphKind::FriendshipLike(*k),
            ("other", []) => GraphKind::Other,
            _ => return Err(format!("unknown graph kind {s:?}")),
        };
        Ok(kind)
    }
}
