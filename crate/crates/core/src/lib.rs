//! Exact computation of the super domination number of finite simple graphs.
//!
//! A set `D ⊆ V(G)` is *super dominating* when every vertex `v` outside `D`
//! has a neighbour `u ∈ D` whose whole neighbourhood lies in `D ∪ {v}`. The
//! smallest such `D` has size `γ_sp(G)`.
//!
//! The crate is split into:
//! * [`graph`]: bitset graphs, graph6 / edge-list I/O, generators and predicates.
//! * [`solver`]: witness checking, the branch-and-bound solver and a brute-force oracle.
//! * [`closed_forms`]: formulas for paths, cycles, complete and complete bipartite graphs.
//! * [`bounds`]: every general bound, evaluated and compared with the exact value.
//! * [`trees`]: tree bounds and the two extremal tree families with their build sequences.

pub mod bounds;
pub mod closed_forms;
pub mod graph;
pub mod rng;
pub mod solver;
pub mod trees;

pub use graph::{Graph, GraphError, GraphKind, VertexSet};
pub use solver::{Solution, SolverConfig, SolverError, SuperDomWitness};
