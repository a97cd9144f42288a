//! Plain enumeration of subsets by increasing size. Shares nothing with the
//! branch-and-bound path except the `Graph` type.

use super::{Solution, SolverError};
use crate::graph::{Graph, VertexSet};

pub const ORACLE_CAP: usize = 20;

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`. Returns whether it stopped early.
pub(crate) fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(&VertexSet) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set: VertexSet = idx.iter().copied().collect();
        if f(&set) {
            return true;
        }
        // advance to the next combination
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Definition check written against adjacency lists: every outside vertex
/// `v` needs a neighbour in `in_d` that is adjacent to no outside vertex
/// other than `v`.
fn is_super_dominating(adj: &[Vec<usize>], in_d: &[bool]) -> bool {
    (0..adj.len()).filter(|&v| !in_d[v]).all(|v| {
        adj[v].iter().any(|&u| in_d[u] && adj[u].iter().all(|&x| x == v || in_d[x]))
    })
}

pub fn gamma_sp_oracle(g: &Graph) -> Result<Solution, SolverError> {
    gamma_sp_oracle_with_cap(g, ORACLE_CAP)
}

pub fn gamma_sp_oracle_with_cap(g: &Graph, cap: usize) -> Result<Solution, SolverError> {
    let n = g.n();
    if n > cap {
        return Err(SolverError::AboveCap { n, cap });
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    for k in 0..=n {
        let mut best = None;
        for_each_subset_of_size(n, k, |d| {
            let mut in_d = vec![false; n];
            for v in d {
                in_d[v] = true;
            }
            if is_super_dominating(&adj, &in_d) {
                best = Some(d.clone());
                true
            } else {
                false
            }
        });
        if let Some(d) = best {
            return Ok(Solution::from_set(g, d));
        }
    }
    unreachable!("the full vertex set is always super dominating")
}
