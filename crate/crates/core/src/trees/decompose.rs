//! Reverse construction: peel a tree back to its base along longest paths,
//! then replay the recorded steps forwards.
//!
//! Longest-path ties go to the smallest vertex index. Every decomposition
//! is replayed and compared with the input before it is returned.

use super::sequence::{BuildSequence, Family, Status, StatusLabeling, Step};
use crate::graph::{Graph, VertexSet};

/// A tree with some vertices deleted.
struct Remnant<'a> {
    g: &'a Graph,
    alive: VertexSet,
}

impl<'a> Remnant<'a> {
    fn new(g: &'a Graph) -> Self {
        Self { g, alive: g.vertices() }
    }

    fn len(&self) -> usize {
        self.alive.len()
    }

    fn neighbors(&self, v: usize) -> VertexSet {
        self.g.neighbors(v).intersection(&self.alive)
    }

    fn degree(&self, v: usize) -> usize {
        self.g.neighbors(v).intersection_len(&self.alive)
    }

    fn eccentricity(&self, src: usize) -> usize {
        let mut seen = VertexSet::from([src]);
        let mut frontier = seen.clone();
        let mut ecc = 0;
        loop {
            let next = self.g.open_neighborhood(&frontier).intersection(&self.alive).difference(&seen);
            if next.is_empty() {
                return ecc;
            }
            seen = seen.union(&next);
            frontier = next;
            ecc += 1;
        }
    }

    /// Vertices that start a longest path, ascending.
    fn path_ends(&self) -> Vec<usize> {
        let ecc: Vec<(usize, usize)> = self.alive.iter().map(|v| (v, self.eccentricity(v))).collect();
        let diam = ecc.iter().map(|&(_, e)| e).max().unwrap_or(0);
        ecc.into_iter().filter(|&(_, e)| e == diam).map(|(v, _)| v).collect()
    }

    fn remove(&mut self, v: usize) {
        self.alive.remove(v);
    }
}

fn replay_matches(t: &Graph, seq: BuildSequence) -> Option<(BuildSequence, StatusLabeling)> {
    let (g, labeling) = seq.replay().ok()?;
    (g == *t).then_some((seq, labeling))
}

/// Peels pendant paths `x1 x2` with `deg(x2) = 2` off a longest path until
/// `P_2` remains; `sta(x2) = sta(x3)` on the way back up.
pub(super) fn decompose_r(t: &Graph) -> Option<(BuildSequence, StatusLabeling)> {
    let mut rem = Remnant::new(t);
    let mut strips = Vec::new();
    while rem.len() > 2 {
        let x1 = rem.path_ends()[0];
        let x2 = rem.neighbors(x1).first()?;
        if rem.degree(x2) != 2 {
            return None;
        }
        let x3 = rem.neighbors(x2).iter().find(|&v| v != x1)?;
        strips.push((x1, x2, x3));
        rem.remove(x1);
        rem.remove(x2);
    }
    let a = rem.alive.first()?;
    let b = rem.alive.last()?;
    let mut status = vec![Status::A; t.n()];
    status[b] = Status::B;
    let mut steps = vec![Step::RBase { a, b }];
    for &(x1, x2, x3) in strips.iter().rev() {
        let s = status[x3];
        status[x2] = s;
        status[x1] = s.other();
        let (a, b) = if s == Status::A { (x2, x1) } else { (x1, x2) };
        steps.push(Step::RPair { a, b, attach: x3 });
    }
    replay_matches(t, BuildSequence { family: Family::R, steps })
}

/// Status every valid labeling shares up to swapping leaves of one support:
/// each support keeps its smallest leaf as the a-vertex, all else is b.
fn canonical_s_labeling(t: &Graph) -> Vec<Status> {
    let ends = t.end_vertices();
    let mut status = vec![Status::B; t.n()];
    for s in &t.support_vertices().supports {
        if let Some(leaf) = t.neighbors(s).intersection(&ends).first() {
            status[leaf] = Status::A;
        }
    }
    status
}

/// Takes the longest path whose second vertex `v2` has the largest degree.
/// With `deg(v2) > 2` a b-leaf of `v2` is removed (reverse kind 3);
/// otherwise `{v1, v2}` is removed (reverse kind 1), or just `v1` when the
/// remnant is `P_4` (reverse kind 2). Stops at `P_3`.
pub(super) fn decompose_s(t: &Graph) -> Option<(BuildSequence, StatusLabeling)> {
    let status = canonical_s_labeling(t);
    let mut rem = Remnant::new(t);
    let mut reversed = Vec::new();
    while rem.len() > 3 {
        let (v1, v2) = rem
            .path_ends()
            .into_iter()
            .map(|v1| (v1, rem.neighbors(v1).first().expect("connected remnant")))
            .max_by_key(|&(v1, v2)| (rem.degree(v2), std::cmp::Reverse(v1)))?;
        if rem.degree(v2) > 2 {
            let leaf = rem
                .neighbors(v2)
                .iter()
                .filter(|&u| rem.degree(u) == 1 && status[u] == Status::B)
                .last()?;
            reversed.push(Step::SLeafB { b: leaf, attach: v2 });
            rem.remove(leaf);
        } else if rem.len() == 4 {
            reversed.push(Step::SLeafA { a: v1, attach: v2 });
            rem.remove(v1);
        } else {
            let v3 = rem.neighbors(v2).iter().find(|&u| u != v1)?;
            reversed.push(Step::SPair { a: v1, b: v2, attach: v3 });
            rem.remove(v1);
            rem.remove(v2);
        }
    }
    let center = rem.alive.iter().find(|&v| rem.degree(v) == 2)?;
    let leaves = rem.neighbors(center);
    let a = leaves.iter().find(|&v| status[v] == Status::A)?;
    let b1 = leaves.iter().find(|&v| status[v] == Status::B)?;
    let mut steps = vec![Step::SBase { a, b0: center, b1 }];
    steps.extend(reversed.into_iter().rev());
    let (seq, labeling) = replay_matches(t, BuildSequence { family: Family::S, steps })?;
    (0..t.n()).all(|v| labeling.status(v) == status[v]).then_some((seq, labeling))
}
