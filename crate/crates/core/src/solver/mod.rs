//! Super dominating sets: verification with explicit witnesses, the exact
//! branch-and-bound solver, and a brute-force oracle.

mod oracle;
mod search;

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

pub use oracle::{gamma_sp_oracle, gamma_sp_oracle_with_cap, ORACLE_CAP};
pub use search::gamma_sp_exact;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("time budget of {0:?} exceeded")]
    TimeBudgetExceeded(Duration),
    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("{set} is not a super dominating set")]
    NotSuperDominating { set: VertexSet },
}

/// For each vertex `v` outside `D`, a vertex `u ∈ N(v) ∩ D` with
/// `N(u) ⊆ D ∪ {v}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuperDomWitness {
    pub assignments: BTreeMap<usize, usize>,
}

impl SuperDomWitness {
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignments.iter().map(|(&v, &u)| (v, u))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = VertexSet::new();
        self.assignments.values().all(|&u| seen.insert(u))
    }

    /// Re-checks every assignment against `g` and `d`.
    pub fn certifies(&self, g: &Graph, d: &VertexSet) -> bool {
        let outside = d.complement(g.n());
        let covered: VertexSet = self.assignments.keys().copied().collect();
        covered == outside
            && self.pairs().all(|(v, u)| {
                d.contains(u) && g.has_edge(u, v) && {
                    let mut allowed = d.clone();
                    allowed.insert(v);
                    g.neighbors(u).is_subset(&allowed)
                }
            })
    }
}

impl Serialize for SuperDomWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.pairs().map(|(v, u)| [v, u]))
    }
}

/// Result of [`check_super_dominating`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    SuperDominating(SuperDomWitness),
    /// Outside vertices that have no private-neighbour witness.
    Uncovered(VertexSet),
}

impl CheckOutcome {
    pub fn witness(self) -> Option<SuperDomWitness> {
        match self {
            CheckOutcome::SuperDominating(w) => Some(w),
            CheckOutcome::Uncovered(_) => None,
        }
    }

    pub fn is_super_dominating(&self) -> bool {
        matches!(self, CheckOutcome::SuperDominating(_))
    }
}

/// Decides whether `d` is super dominating. The witness picks, for each
/// outside vertex, the smallest admissible neighbour.
pub fn check_super_dominating(g: &Graph, d: &VertexSet) -> Result<CheckOutcome, GraphError> {
    g.check_set(d)?;
    let mut assignments = BTreeMap::new();
    let mut uncovered = VertexSet::new();
    for v in &d.complement(g.n()) {
        let mut allowed = d.clone();
        allowed.insert(v);
        match g.neighbors(v).intersection(d).iter().find(|&u| g.neighbors(u).is_subset(&allowed)) {
            Some(u) => {
                assignments.insert(v, u);
            }
            None => {
                uncovered.insert(v);
            }
        }
    }
    Ok(if uncovered.is_empty() {
        CheckOutcome::SuperDominating(SuperDomWitness { assignments })
    } else {
        CheckOutcome::Uncovered(uncovered)
    })
}

/// True when the cut edges between `d` and its complement form a perfect
/// matching. Errors if `d` is not super dominating.
pub fn is_perfect_set(g: &Graph, d: &VertexSet) -> Result<bool, SolverError> {
    if !check_super_dominating(g, d)?.is_super_dominating() {
        return Err(SolverError::NotSuperDominating { set: d.clone() });
    }
    Ok(cut_is_perfect_matching(g, d))
}

fn cut_is_perfect_matching(g: &Graph, d: &VertexSet) -> bool {
    let outside = d.complement(g.n());
    d.iter().all(|u| g.neighbors(u).intersection_len(&outside) == 1)
        && outside.iter().all(|v| g.neighbors(v).intersection_len(d) == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub gamma_sp: usize,
    /// A minimum super dominating set.
    pub set: VertexSet,
    pub witness: SuperDomWitness,
    /// Whether the cut of `set` is a perfect matching.
    pub perfect: bool,
}

impl Solution {
    pub(crate) fn from_set(g: &Graph, set: VertexSet) -> Self {
        let witness = check_super_dominating(g, &set)
            .expect("solver sets are in range")
            .witness()
            .expect("solver returned a set that is not super dominating");
        Self { gamma_sp: set.len(), perfect: cut_is_perfect_matching(g, &set), set, witness }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Return the lexicographically smallest minimum set.
    pub deterministic: bool,
    pub thread_budget: usize,
    pub time_budget: Option<Duration>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { deterministic: true, thread_budget: 1, time_budget: None }
    }
}

/// Every minimum super dominating set, in lexicographic order.
pub fn all_minimum_sets(g: &Graph) -> Result<Vec<VertexSet>, SolverError> {
    let n = g.n();
    if n > ORACLE_CAP {
        return Err(SolverError::AboveCap { n, cap: ORACLE_CAP });
    }
    let gamma = gamma_sp_oracle(g)?.gamma_sp;
    let mut found = Vec::new();
    oracle::for_each_subset_of_size(n, gamma, |d| {
        if check_super_dominating(g, d).expect("in range").is_super_dominating() {
            found.push(d.clone());
        }
        false
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_standard, GraphKind};

    fn kind(k: GraphKind) -> Graph {
        generate_standard(k).unwrap()
    }

    #[test]
    fn check_c4_adjacent_pair() {
        let c4 = kind(GraphKind::Cycle(4));
        let w = check_super_dominating(&c4, &VertexSet::from([1, 2])).unwrap().witness().unwrap();
        assert_eq!(w.assignments, BTreeMap::from([(0, 1), (3, 2)]));
        assert!(w.is_injective());
        assert!(w.certifies(&c4, &VertexSet::from([1, 2])));
    }

    #[test]
    fn check_k3_single_vertex_fails() {
        let k3 = kind(GraphKind::Complete(3));
        assert_eq!(
            check_super_dominating(&k3, &VertexSet::from([0])).unwrap(),
            CheckOutcome::Uncovered(VertexSet::from([1, 2]))
        );
    }

    #[test]
    fn check_full_set_is_vacuous() {
        let g = kind(GraphKind::Cycle(5));
        let w = check_super_dominating(&g, &g.vertices()).unwrap().witness().unwrap();
        assert!(w.assignments.is_empty());
    }

    #[test]
    fn check_rejects_out_of_range() {
        let g = kind(GraphKind::Path(3));
        assert_eq!(
            check_super_dominating(&g, &VertexSet::from([5])),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        );
    }

    #[test]
    fn perfect_set_examples() {
        let c4 = kind(GraphKind::Cycle(4));
        assert_eq!(is_perfect_set(&c4, &VertexSet::from([1, 2])), Ok(true));
        let k4 = kind(GraphKind::Complete(4));
        assert_eq!(is_perfect_set(&k4, &VertexSet::from([0, 1, 2])), Ok(false));
        // P_4: {1,2} is super dominating and its cut edges 01, 23 match perfectly.
        let p4 = kind(GraphKind::Path(4));
        assert!(check_super_dominating(&p4, &VertexSet::from([1, 2])).unwrap().is_super_dominating());
        assert_eq!(is_perfect_set(&p4, &VertexSet::from([1, 2])), Ok(true));
        assert!(matches!(
            is_perfect_set(&p4, &VertexSet::from([1])),
            Err(SolverError::NotSuperDominating { .. })
        ));
    }

    #[test]
    fn all_minimum_sets_examples() {
        let p2 = kind(GraphKind::Path(2));
        assert_eq!(all_minimum_sets(&p2).unwrap(), vec![VertexSet::from([0]), VertexSet::from([1])]);
        let k3 = kind(GraphKind::Complete(3));
        assert_eq!(
            all_minimum_sets(&k3).unwrap(),
            vec![VertexSet::from([0, 1]), VertexSet::from([0, 2]), VertexSet::from([1, 2])]
        );
        let c4 = kind(GraphKind::Cycle(4));
        assert_eq!(
            all_minimum_sets(&c4).unwrap(),
            vec![
                VertexSet::from([0, 1]),
                VertexSet::from([0, 3]),
                VertexSet::from([1, 2]),
                VertexSet::from([2, 3]),
            ]
        );
        assert!(matches!(
            all_minimum_sets(&Graph::empty(21)),
            Err(SolverError::AboveCap { n: 21, cap: 20 })
        ));
    }
}
