//! Seeded randomness shared by the generators and the test corpora.
//!
//! Every stream is a ChaCha8 generator initialised with
//! `ChaCha8Rng::seed_from_u64(seed)`; uniform picks use `gen_range` over the
//! candidate list sorted by vertex index. Both are platform independent, so a
//! seed identifies a graph everywhere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub type GraphRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform element of a non-empty slice.
pub fn pick<T: Copy>(rng: &mut GraphRng, items: &[T]) -> T {
    items[rng.gen_range(0..items.len())]
}

/// Erdős–Rényi G(n, p); pairs are visited in `(u, v)`, `u < v` order.
pub fn random_graph(n: usize, p: f64, rng: &mut GraphRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated endpoints are in range")
}
