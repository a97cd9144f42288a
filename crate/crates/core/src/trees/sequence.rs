//! Build sequences and status labelings.
//!
//! Text form, one step per line (`#` starts a comment):
//!
//! ```text
//! R base <a1> <b1>
//! R <a_j> <b_j> attach=<v>
//! S base <a1> <b0> <b1>
//! S kind=1 <a_l> <b_k> attach=<b_i>
//! S kind=2 <a_l> attach=<b_i>
//! S kind=3 <b_k> attach=<b_i>
//! ```
//!
//! An `R` step joins the new pair to `attach` through the new vertex whose
//! status matches `attach`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::TreeError;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    A,
    B,
}

impl Status {
    pub fn other(self) -> Self {
        match self {
            Status::A => Status::B,
            Status::B => Status::A,
        }
    }

    fn as_char(self) -> char {
        match self {
            Status::A => 'a',
            Status::B => 'b',
        }
    }
}

/// Status of every vertex, indexed by vertex. Displays and serializes as a
/// string such as `"abba"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatusLabeling {
    status: Vec<Status>,
}

impl StatusLabeling {
    pub fn new(status: Vec<Status>) -> Self {
        Self { status }
    }

    pub fn status(&self, v: usize) -> Status {
        self.status[v]
    }

    pub fn len(&self) -> usize {
        self.status.len()
    }

    pub fn is_empty(&self) -> bool {
        self.status.is_empty()
    }

    pub fn class(&self, s: Status) -> VertexSet {
        (0..self.len()).filter(|&v| self.status[v] == s).collect()
    }

    fn class_neighbors(&self, t: &Graph, v: usize, s: Status) -> usize {
        t.neighbors(v).iter().filter(|&u| self.status[u] == s).count()
    }

    /// Every a-vertex has exactly one b-neighbour and vice versa.
    pub fn check_r(&self, t: &Graph) -> bool {
        self.len() == t.n()
            && (0..t.n()).all(|v| self.class_neighbors(t, v, self.status[v].other()) == 1)
    }

    /// Every a-vertex has exactly one b-neighbour, every b-vertex at most
    /// one a-neighbour, and every non-end vertex has status b.
    pub fn check_s(&self, t: &Graph) -> bool {
        self.len() == t.n()
            && (0..t.n()).all(|v| match self.status[v] {
                Status::A => self.class_neighbors(t, v, Status::B) == 1 && t.degree(v) == 1,
                Status::B => self.class_neighbors(t, v, Status::A) <= 1,
            })
    }
}

impl fmt::Display for StatusLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.status.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl Serialize for StatusLabeling {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    R,
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    RBase { a: usize, b: usize },
    RPair { a: usize, b: usize, attach: usize },
    SBase { a: usize, b0: usize, b1: usize },
    /// Kind 1: new `a–b` pair, `b` joined to a b-vertex.
    SPair { a: usize, b: usize, attach: usize },
    /// Kind 2: new a-leaf on a b-vertex that is not a support.
    SLeafA { a: usize, attach: usize },
    /// Kind 3: new b-leaf on a support.
    SLeafB { b: usize, attach: usize },
}

impl Step {
    pub fn family(&self) -> Family {
        match self {
            Step::RBase { .. } | Step::RPair { .. } => Family::R,
            _ => Family::S,
        }
    }

    fn is_base(&self) -> bool {
        matches!(self, Step::RBase { .. } | Step::SBase { .. })
    }

    fn new_vertices(&self) -> Vec<(usize, Status)> {
        use Status::*;
        match *self {
            Step::RBase { a, b } | Step::RPair { a, b, .. } | Step::SPair { a, b, .. } => vec![(a, A), (b, B)],
            Step::SBase { a, b0, b1 } => vec![(a, A), (b0, B), (b1, B)],
            Step::SLeafA { a, .. } => vec![(a, A)],
            Step::SLeafB { b, .. } => vec![(b, B)],
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::RBase { a, b } => write!(f, "R base {a} {b}"),
            Step::RPair { a, b, attach } => write!(f, "R {a} {b} attach={attach}"),
            Step::SBase { a, b0, b1 } => write!(f, "S base {a} {b0} {b1}"),
            Step::SPair { a, b, attach } => write!(f, "S kind=1 {a} {b} attach={attach}"),
            Step::SLeafA { a, attach } => write!(f, "S kind=2 {a} attach={attach}"),
            Step::SLeafB { b, attach } => write!(f, "S kind=3 {b} attach={attach}"),
        }
    }
}

impl FromStr for Step {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| format!("bad vertex {t:?}"));
        let attach = |t: &str| match t.strip_prefix("attach=") {
            Some(v) => num(v),
            None => Err(format!("expected attach=<vertex>, got {t:?}")),
        };
        match tokens.as_slice() {
            ["R", "base", a, b] => Ok(Step::RBase { a: num(a)?, b: num(b)? }),
            ["R", a, b, at] => Ok(Step::RPair { a: num(a)?, b: num(b)?, attach: attach(at)? }),
            ["S", "base", a, b0, b1] => Ok(Step::SBase { a: num(a)?, b0: num(b0)?, b1: num(b1)? }),
            ["S", "kind=1", a, b, at] => Ok(Step::SPair { a: num(a)?, b: num(b)?, attach: attach(at)? }),
            ["S", "kind=2", a, at] => Ok(Step::SLeafA { a: num(a)?, attach: attach(at)? }),
            ["S", "kind=3", b, at] => Ok(Step::SLeafB { b: num(b)?, attach: attach(at)? }),
            _ => Err(format!("unrecognised step {s:?}")),
        }
    }
}

/// Construction steps certifying membership in one of the two families.
/// The first step is the base tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildSequence {
    pub family: Family,
    pub steps: Vec<Step>,
}

impl BuildSequence {
    pub fn vertex_count(&self) -> usize {
        self.steps.iter().map(|s| s.new_vertices().len()).sum()
    }

    /// Rebuilds the tree and its labeling, checking that each step's
    /// attachment vertex exists and meets the step's side condition in the
    /// tree built so far.
    pub fn replay(&self) -> Result<(Graph, StatusLabeling), TreeError> {
        let n = self.vertex_count();
        let mut status: Vec<Option<Status>> = vec![None; n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        for (i, step) in self.steps.iter().enumerate() {
            let fail = |msg: String| Err(TreeError::Replay { step: i, msg });
            if step.family() != self.family {
                return fail(format!("{step} does not belong to family {:?}", self.family));
            }
            if step.is_base() != (i == 0) {
                return fail("the base must be exactly the first step".into());
            }
            let attach = match *step {
                Step::RPair { attach, .. }
                | Step::SPair { attach, .. }
                | Step::SLeafA { attach, .. }
                | Step::SLeafB { attach, .. } => match status.get(attach).copied().flatten() {
                    Some(s) => Some((attach, s)),
                    None => return fail(format!("attach vertex {attach} is not in the tree yet")),
                },
                _ => None,
            };
            let is_support = |v: usize| adj[v].iter().any(|&u| adj[u].len() == 1);
            match (*step, attach) {
                (Step::SPair { .. } | Step::SLeafB { .. } | Step::SLeafA { .. }, Some((v, Status::A))) => {
                    return fail(format!("attach vertex {v} has status a"));
                }
                (Step::SLeafA { .. }, Some((v, _))) if is_support(v) => {
                    return fail(format!("kind 2 needs a non-support, {v} is a support"));
                }
                (Step::SLeafB { .. }, Some((v, _))) if !is_support(v) => {
                    return fail(format!("kind 3 needs a support, {v} is not one"));
                }
                _ => {}
            }
            for (v, s) in step.new_vertices() {
                match status.get_mut(v) {
                    Some(slot @ None) => *slot = Some(s),
                    Some(Some(_)) => return fail(format!("vertex {v} added twice")),
                    None => return fail(format!("vertex {v} out of range for {n} vertices")),
                }
            }
            let mut join = |u: usize, v: usize| {
                adj[u].push(v);
                adj[v].push(u);
                edges.push((u, v));
            };
            match *step {
                Step::RBase { a, b } => join(a, b),
                Step::RPair { a, b, attach } => {
                    join(a, b);
                    match status[attach] {
                        Some(Status::A) => join(attach, a),
                        _ => join(attach, b),
                    }
                }
                Step::SBase { a, b0, b1 } => {
                    join(a, b0);
                    join(b0, b1);
                }
                Step::SPair { a, b, attach } => {
                    join(a, b);
                    join(attach, b);
                }
                Step::SLeafA { a, attach } => join(attach, a),
                Step::SLeafB { b, attach } => join(attach, b),
            }
        }
        let graph = Graph::from_edge_list(n, &edges).expect("ids checked above");
        let labeling = StatusLabeling::new(status.into_iter().map(|s| s.expect("every id assigned")).collect());
        Ok((graph, labeling))
    }
}

impl fmt::Display for BuildSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| writeln!(f, "{s}"))
    }
}

impl FromStr for BuildSequence {
    type Err = TreeError;

    fn from_str(text: &str) -> Result<Self, TreeError> {
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            steps.push(line.parse::<Step>().map_err(|msg| TreeError::Parse { line: i + 1, msg })?);
        }
        let family = match steps.first() {
            Some(s) => s.family(),
            None => return Err(TreeError::Parse { line: 0, msg: "empty build sequence".into() }),
        };
        Ok(Self { family, steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "S base 0 1 2\nS kind=1 3 4 attach=2\nS kind=3 5 attach=4\nS kind=2 6 attach=1\n";
        let seq: BuildSequence = text.parse().unwrap();
        assert_eq!(seq.family, Family::S);
        assert_eq!(seq.to_string(), text);
        let r: BuildSequence = "# a comment\nR base 0 1\n\nR 2 3 attach=1 # trailing\n".parse().unwrap();
        assert_eq!(r.to_string(), "R base 0 1\nR 2 3 attach=1\n");
        assert!(matches!("R 0 1 at=2".parse::<BuildSequence>(), Err(TreeError::Parse { line: 1, .. })));
        assert!("".parse::<BuildSequence>().is_err());
    }

    #[test]
    fn replay_builds_p4_both_ways() {
        // b1 = 1 carries status b, so the new pair joins through b_2 = 3.
        let r: BuildSequence = "R base 0 1\nR 2 3 attach=1".parse().unwrap();
        let (g, lab) = r.replay().unwrap();
        assert_eq!(g, Graph::from_edge_list(4, &[(0, 1), (2, 3), (1, 3)]).unwrap());
        assert_eq!(lab.to_string(), "abab");
        assert!(lab.check_r(&g));
        let s: BuildSequence = "S base 0 1 2\nS kind=2 3 attach=2".parse().unwrap();
        let (g, lab) = s.replay().unwrap();
        assert_eq!(g, Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
        assert_eq!(lab.to_string(), "abba");
        assert!(lab.check_s(&g));
    }

    #[test]
    fn replay_rejects_bad_side_conditions() {
        let bad = [
            "S base 0 1 2\nS kind=2 3 attach=1",  // 1 is a support
            "S base 0 1 2\nS kind=3 3 attach=2",  // 2 is not a support
            "S base 0 1 2\nS kind=1 3 4 attach=0", // 0 has status a
            "S base 0 1 2\nS kind=3 3 attach=7",  // 7 not yet present
            "S base 0 1 2\nS kind=3 2 attach=1",  // 2 added twice
            "R base 0 1\nS kind=3 2 attach=1",    // mixed families
            "S kind=3 0 attach=1",                // no base
        ];
        for text in bad {
            let seq: BuildSequence = text.parse().unwrap();
            assert!(matches!(seq.replay(), Err(TreeError::Replay { .. })), "{text}");
        }
    }
}
