use std::collections::BinaryHeap;
use std::cmp::Reverse;

use crate::graph::Graph;

/// The labeled tree on `seq.len() + 2` vertices with Prüfer code `seq`.
///
/// # Panics
/// If an entry of `seq` is not a vertex.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    assert!(seq.iter().all(|&v| v < n), "Prüfer entries must be below {n}");
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(w) = leaves.pop().expect("two vertices remain");
    edges.push((u, w));
    Graph::from_edge_list(n, &edges).expect("Prüfer decoding yields valid endpoints")
}

/// Every labeled tree on `n` vertices, in lexicographic order of Prüfer
/// code. Yields `n^(n-2)` trees for `n >= 2` and the single vertex for
/// `n = 1`.
pub fn all_labeled_trees(n: usize) -> LabeledTrees {
    LabeledTrees { n, seq: vec![0; n.saturating_sub(2)], done: n == 0 }
}

pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        let tree = if self.n == 1 { Graph::empty(1) } else { tree_from_prufer(&self.seq) };
        // odometer increment, last position fastest
        self.done = true;
        for slot in self.seq.iter_mut().rev() {
            *slot += 1;
            if *slot < self.n {
                self.done = false;
                break;
            }
            *slot = 0;
        }
        Some(tree)
    }
}
