//! Simple undirected graphs on vertices `0..n`, stored as one neighbour
//! bitset per vertex.

mod edgelist;
mod generate;
mod graph6;
mod vertex_set;

use std::collections::VecDeque;

use thiserror::Error;

pub use edgelist::{emit_edge_list, parse_edge_list, EdgeListReader};
pub use generate::{all_labeled_graphs, generate_standard, GraphKind};
pub use graph6::{emit_graph6, parse_graph6, Graph6Reader};
pub use vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for n = {n}")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("{kind}: parameter below minimum ({msg})")]
    BadParameter { kind: &'static str, msg: String },
}

/// An immutable simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    q: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![VertexSet::new(); n], q: 0 }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse into one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![VertexSet::new(); n];
        let mut q = 0;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                q += 1;
            }
        }
        Ok(Self { adj, q })
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Edge count.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// `N(S)`, the union of the neighbourhoods of `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj: Vec<VertexSet> = (0..n)
            .map(|v| {
                let mut s = self.adj[v].complement(n);
                s.remove(v);
                s
            })
            .collect();
        Self { adj, q: n * n.saturating_sub(1) / 2 - self.q }
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// increasing order. Returns the graph and the new-to-old vertex map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Self, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let adj: Vec<VertexSet> = old
            .iter()
            .map(|&v| self.adj[v].intersection(keep).iter().map(|u| new_of[u]).collect())
            .collect();
        let q = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        (Self { adj, q }, old)
    }

    /// Ω(G): vertices of degree one.
    pub fn end_vertices(&self) -> VertexSet {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Support vertices (neighbours of end vertices) and the strong ones
    /// among them (two or more end-vertex neighbours).
    pub fn support_vertices(&self) -> Supports {
        let ends = self.end_vertices();
        let mut supports = VertexSet::new();
        let mut strong = VertexSet::new();
        for v in 0..self.n() {
            match self.adj[v].intersection_len(&ends) {
                0 => {}
                1 => {
                    supports.insert(v);
                }
                _ => {
                    supports.insert(v);
                    strong.insert(v);
                }
            }
        }
        Supports { supports, strong }
    }

    /// BFS distances from `src`; unreachable vertices get `None`.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest eccentricity; `None` means infinite (disconnected).
    /// Graphs with at most one vertex have diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                diam = diam.max(d?);
            }
        }
        Some(diam)
    }

    /// True when every other vertex is adjacent to `v` or shares a
    /// neighbour with it. The vertex itself is not tested.
    pub fn is_semi_universal(&self, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(v)?;
        let nv = &self.adj[v];
        Ok((0..self.n())
            .filter(|&u| u != v)
            .all(|u| nv.contains(u) || !self.adj[u].is_disjoint(nv)))
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.q + 1 == self.n() && self.is_connected()
    }

    /// Cycle detection by DFS, independent of the edge count.
    pub fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![(root, usize::MAX)];
            while let Some((u, parent)) = stack.pop() {
                for w in &self.adj[u] {
                    if w == parent {
                        continue;
                    }
                    if seen[w] {
                        return false;
                    }
                    seen[w] = true;
                    stack.push((w, u));
                }
            }
        }
        true
    }

    /// Adjacency as one `u64` mask per vertex. Only valid for `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n() <= 64).then(|| self.adj.iter().map(VertexSet::low_mask).collect())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Supports {
    pub supports: VertexSet,
    pub strong: VertexSet,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{random_graph, seeded};
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        generate_standard(GraphKind::Path(n)).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!((p2.n(), p2.q()), (2, 1));
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.q(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        let dup = Graph::from_edge_list(3, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.q(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn complement_examples() {
        let k4 = generate_standard(GraphKind::Complete(4)).unwrap();
        assert_eq!(k4.complement(), Graph::empty(4));
        // P_4 is self-complementary: 0-1-2-3 maps to 1-3-0-2.
        let cp4 = path(4).complement();
        let expected = Graph::from_edge_list(4, &[(1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(cp4, expected);
    }

    #[test]
    fn end_and_support_vertices() {
        let p4 = path(4);
        assert_eq!(p4.end_vertices(), VertexSet::from([0, 3]));
        let s = p4.support_vertices();
        assert_eq!(s.supports, VertexSet::from([1, 2]));
        assert!(s.strong.is_empty());

        let c5 = generate_standard(GraphKind::Cycle(5)).unwrap();
        assert!(c5.end_vertices().is_empty());

        let k13 = generate_standard(GraphKind::Star(4)).unwrap();
        assert_eq!(k13.end_vertices(), VertexSet::from([1, 2, 3]));
        let s = k13.support_vertices();
        assert_eq!(s.supports, VertexSet::from([0]));
        assert_eq!(s.strong, VertexSet::from([0]));

        let c6 = generate_standard(GraphKind::Cycle(6)).unwrap();
        assert!(c6.support_vertices().supports.is_empty());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(generate_standard(GraphKind::Cycle(4)).unwrap().diameter(), Some(2));
        assert_eq!(path(5).diameter(), Some(4));
        assert_eq!(Graph::empty(2).diameter(), None);
        assert_eq!(Graph::empty(1).diameter(), Some(0));
        assert_eq!(Graph::empty(0).diameter(), Some(0));
        for n in 2..8 {
            assert_eq!(generate_standard(GraphKind::Complete(n)).unwrap().diameter(), Some(1));
        }
    }

    #[test]
    fn semi_universal_examples() {
        let star = generate_standard(GraphKind::Star(6)).unwrap();
        assert_eq!(star.is_semi_universal(0), Ok(true));
        assert_eq!(path(4).is_semi_universal(0), Ok(false));
        let fr = generate_standard(GraphKind::FriendshipLike(3)).unwrap();
        assert_eq!(fr.is_semi_universal(0), Ok(true));
        assert_eq!(
            path(4).is_semi_universal(4),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 4 })
        );
    }

    #[test]
    fn tree_examples() {
        assert!(path(7).is_tree());
        assert!(!generate_standard(GraphKind::Cycle(4)).unwrap().is_tree());
        let two_p2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_p2.is_tree());
        assert!(Graph::empty(1).is_tree());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = generate_standard(GraphKind::Cycle(5)).unwrap();
        let (h, map) = c5.induced_subgraph(&VertexSet::from([1, 2, 3]));
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h, path(3));
    }

    #[test]
    fn tree_formulations_agree_on_random_graphs() {
        let mut rng = seeded(11);
        for i in 0..400 {
            let n = 1 + i % 10;
            // Sparse graphs so that trees actually show up.
            let g = random_graph(n, 1.5 / n as f64, &mut rng);
            assert_eq!(g.is_tree(), g.is_connected() && g.is_acyclic(), "{g:?}");
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
                let edges: Vec<_> =
                    pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e).collect();
                Graph::from_edge_list(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn structural_invariants(g in arb_graph(12)) {
            let n = g.n();
            let deg_sum: usize = g.degrees().iter().sum();
            prop_assert_eq!(deg_sum, 2 * g.q());
            for v in 0..n {
                prop_assert!(!g.has_edge(v, v));
                for u in g.neighbors(v) {
                    prop_assert!(g.has_edge(u, v));
                }
            }
            prop_assert_eq!(g.complement().complement(), g.clone());
            if g.is_connected() {
                prop_assert!(g.diameter().unwrap() <= n.saturating_sub(1));
            }
            let ends = g.end_vertices();
            let sup = g.support_vertices();
            prop_assert!(sup.supports.is_subset(&g.open_neighborhood(&ends)));
            prop_assert!(sup.strong.is_subset(&sup.supports));
            for v in &ends {
                prop_assert!(!g.neighbors(v).is_disjoint(&sup.supports));
            }
        }
    }
}
