//! Per-record work for each subcommand and the chunked batch runner.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use superdom::bounds::{bound_report_with, BoundError, BoundReport};
use superdom::solver::{
    check_super_dominating, gamma_sp_exact, gamma_sp_oracle_with_cap, is_perfect_set, CheckOutcome, SolverConfig,
    SolverError, SuperDomWitness, ORACLE_CAP,
};
use superdom::trees::{decompose_r, decompose_s, tree_meta, TreeError};
use superdom::{Graph, VertexSet};

use crate::input::Records;
use crate::output::{join, Emitter, ErrorKind, RecordError, Report};

/// Largest `n` the exact solver accepts without `--cap-override`.
pub const EXACT_CAP: usize = 64;
const CHUNK: usize = 64;

#[derive(Debug, Clone)]
pub struct Settings {
    pub deterministic: bool,
    pub threads: usize,
    pub cap_override: bool,
    pub oracle: bool,
    pub time_limit: Option<Duration>,
}

impl Settings {
    fn solver_config(&self, threads: usize) -> SolverConfig {
        SolverConfig { deterministic: self.deterministic, thread_budget: threads, time_budget: self.time_limit }
    }

    fn guard_exact(&self, g: &Graph) -> Result<(), RecordError> {
        if g.n() > EXACT_CAP && !self.cap_override {
            return Err(RecordError::new(
                ErrorKind::Cap,
                format!("n = {} exceeds the exact-solver cap of {EXACT_CAP}; pass --cap-override", g.n()),
            ));
        }
        Ok(())
    }
}

fn solver_error(e: SolverError) -> RecordError {
    match e {
        SolverError::AboveCap { .. } => RecordError::new(ErrorKind::Cap, format!("{e}; pass --cap-override")),
        e => RecordError::new(ErrorKind::Other, e),
    }
}

fn bound_error(e: BoundError) -> RecordError {
    match e {
        BoundError::Solver(e) => solver_error(e),
        e => RecordError::new(ErrorKind::Other, e),
    }
}

fn tree_error(e: TreeError) -> RecordError {
    match e {
        TreeError::Solver(e) => solver_error(e),
        e => RecordError::new(ErrorKind::Other, e),
    }
}

/// Processes records in chunks on a pool of `settings.threads` workers and
/// emits results in input order. A chunk holding a single record gives the
/// whole budget to that record's solver; otherwise each record gets one
/// thread. Returns the most severe error kind seen.
pub fn run_batch<R, W, F>(
    settings: &Settings,
    mut records: Records,
    emitter: &mut Emitter<W>,
    work: F,
) -> io::Result<Option<ErrorKind>>
where
    R: Report,
    W: Write,
    F: Fn(&Graph, &SolverConfig) -> Result<R, RecordError> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(settings.threads)
        .build()
        .map_err(io::Error::other)?;
    emitter.header::<R>()?;
    let mut worst = None;
    let mut id = 0;
    loop {
        let chunk: Vec<_> = records.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let cfg = settings.solver_config(if chunk.len() == 1 { settings.threads } else { 1 });
        let results: Vec<_> = pool.install(|| {
            chunk
                .into_par_iter()
                .map(|(line, parsed)| {
                    let start = Instant::now();
                    let result = match parsed {
                        Ok(g) => work(&g, &cfg),
                        Err(e) => Err(RecordError::new(ErrorKind::Parse, e)),
                    };
                    (line, result, start.elapsed().as_micros())
                })
                .collect()
        });
        for (line, result, micros) in results {
            if let Err(e) = &result {
                eprintln!("record #{id} (line {line}): {} error: {}", e.error_kind.as_str(), e.error);
                worst = worst.max(Some(e.error_kind));
            }
            emitter.emit(id, line, &result, (!settings.deterministic).then_some(micros))?;
            id += 1;
        }
        emitter.flush()?;
    }
    Ok(worst)
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub q: usize,
    pub gamma_sp: usize,
    pub set: VertexSet,
    pub witness: SuperDomWitness,
    pub perfect: bool,
    pub method: &'static str,
    /// Present for trees with `n >= 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_r: Option<bool>,
    /// Present for trees with `n >= 3`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_s: Option<bool>,
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn witness_text(w: &SuperDomWitness) -> String {
    w.pairs().map(|(v, u)| format!("{v}->{u}")).collect::<Vec<_>>().join(",")
}

impl Report for SolveReport {
    const CSV_HEADER: &'static [&'static str] =
        &["n", "q", "gamma_sp", "set", "witness", "perfect", "method", "family_r", "family_s"];

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.q.to_string(),
            self.gamma_sp.to_string(),
            join(&self.set),
            join(self.witness.pairs().map(|(v, u)| format!("{v}:{u}"))),
            self.perfect.to_string(),
            self.method.to_string(),
            opt(self.family_r),
            opt(self.family_s),
        ]
    }

    fn text(&self) -> String {
        let mut s = format!(
            "n={} q={} gamma_sp={} set={} perfect={} witness={{{}}}",
            self.n,
            self.q,
            self.gamma_sp,
            self.set,
            self.perfect,
            witness_text(&self.witness)
        );
        if let Some(r) = self.family_r {
            s.push_str(&format!(" R={r}"));
        }
        if let Some(f) = self.family_s {
            s.push_str(&format!(" S={f}"));
        }
        s
    }
}

pub fn solve(g: &Graph, cfg: &SolverConfig, settings: &Settings) -> Result<SolveReport, RecordError> {
    let (solution, method) = if settings.oracle {
        let cap = if settings.cap_override { usize::MAX } else { ORACLE_CAP };
        (gamma_sp_oracle_with_cap(g, cap).map_err(solver_error)?, "oracle")
    } else {
        settings.guard_exact(g)?;
        (gamma_sp_exact(g, cfg).map_err(solver_error)?, "exact")
    };
    let (n, gamma) = (g.n(), solution.gamma_sp);
    let tree = g.is_tree();
    Ok(SolveReport {
        n,
        q: g.q(),
        gamma_sp: gamma,
        family_r: (tree && n >= 2).then(|| 2 * gamma == n),
        family_s: (tree && n >= 3).then(|| gamma == n - tree_meta(g).s),
        set: solution.set,
        witness: solution.witness,
        perfect: solution.perfect,
        method,
    })
}

#[derive(Debug, Serialize)]
pub struct BoundsRecord {
    pub connected: bool,
    #[serde(flatten)]
    pub report: BoundReport,
}

impl BoundsRecord {
    /// `n/a` when the bound's hypothesis needs connectivity, `none` when it
    /// does not apply for another reason.
    fn conditional(&self, value: Option<usize>) -> String {
        match (self.connected, value) {
            (false, _) => "n/a".into(),
            (true, Some(v)) => v.to_string(),
            (true, None) => "none".into(),
        }
    }
}

impl Report for BoundsRecord {
    const CSV_HEADER: &'static [&'static str] = &[
        "n",
        "q",
        "gamma_sp",
        "connected",
        "lower_half",
        "edge_lower",
        "diameter_upper",
        "edge_upper",
        "trivial_upper",
        "ng_sum",
        "ng_lower_attained",
        "ng_upper_attained",
        "attained",
    ];

    fn csv_fields(&self) -> Vec<String> {
        let r = &self.report;
        let ng = r.nordhaus_gaddum.as_ref();
        vec![
            r.n.to_string(),
            r.q.to_string(),
            r.gamma_sp.to_string(),
            self.connected.to_string(),
            r.lower_half.to_string(),
            r.edge_lower.to_string(),
            self.conditional(r.diameter_upper),
            self.conditional(r.edge_upper),
            r.trivial_upper.to_string(),
            opt(ng.map(|x| x.sum)),
            opt(ng.map(|x| x.lower_attained)),
            opt(ng.map(|x| x.upper_attained)),
            join(r.attained.iter().map(|t| t.as_str())),
        ]
    }

    fn text(&self) -> String {
        let r = &self.report;
        let ng = match &r.nordhaus_gaddum {
            Some(ng) => format!("{} (+ {} = {})", ng.gamma_sp, ng.gamma_sp_complement, ng.sum),
            None => "n/a".into(),
        };
        format!(
            "n={} q={} gamma_sp={} lower_half={} edge_lower={:.6} diameter_upper={} edge_upper={} trivial_upper={} \
             nordhaus_gaddum={} attained=[{}]",
            r.n,
            r.q,
            r.gamma_sp,
            r.lower_half,
            r.edge_lower,
            self.conditional(r.diameter_upper),
            self.conditional(r.edge_upper),
            r.trivial_upper,
            ng,
            r.attained.iter().map(|t| t.as_str()).collect::<Vec<_>>().join(",")
        )
    }
}

pub fn bounds(g: &Graph, cfg: &SolverConfig, settings: &Settings) -> Result<BoundsRecord, RecordError> {
    settings.guard_exact(g)?;
    let report = bound_report_with(g, cfg).map_err(bound_error)?;
    Ok(BoundsRecord { connected: g.is_connected(), report })
}

#[derive(Debug, Serialize)]
pub struct TreeRecord {
    pub n: usize,
    pub gamma_sp: usize,
    pub s: usize,
    pub strong_supports: VertexSet,
    /// `(⌈n/2⌉, n − s)`, for `n >= 3`.
    pub bounds: Option<(usize, usize)>,
    pub family_r: bool,
    pub family_s: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_sequence: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_sequence: Option<Decomposition>,
}

#[derive(Debug, Serialize)]
pub struct Decomposition {
    pub steps: Vec<String>,
    pub labeling: String,
}

impl Report for TreeRecord {
    const CSV_HEADER: &'static [&'static str] =
        &["n", "gamma_sp", "s", "lower", "upper", "family_r", "family_s", "r_labeling", "s_labeling"];

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.gamma_sp.to_string(),
            self.s.to_string(),
            opt(self.bounds.map(|b| b.0)),
            opt(self.bounds.map(|b| b.1)),
            self.family_r.to_string(),
            opt(self.family_s),
            opt(self.r_sequence.as_ref().map(|d| &d.labeling)),
            opt(self.s_sequence.as_ref().map(|d| &d.labeling)),
        ]
    }

    fn text(&self) -> String {
        let mut s = format!(
            "n={} gamma_sp={} s={} bounds={} R={} S={}",
            self.n,
            self.gamma_sp,
            self.s,
            self.bounds.map(|(lo, hi)| format!("[{lo},{hi}]")).unwrap_or_else(|| "n/a".into()),
            self.family_r,
            opt(self.family_s),
        );
        for (name, d) in [("R", &self.r_sequence), ("S", &self.s_sequence)] {
            if let Some(d) = d {
                s.push_str(&format!("\n  {name} labeling {}", d.labeling));
                for step in &d.steps {
                    s.push_str(&format!("\n  {step}"));
                }
            }
        }
        s
    }
}

pub fn tree(g: &Graph, cfg: &SolverConfig, settings: &Settings, sequences: bool) -> Result<TreeRecord, RecordError> {
    if !g.is_tree() {
        return Err(tree_error(TreeError::NotATree));
    }
    settings.guard_exact(g)?;
    let n = g.n();
    let gamma = gamma_sp_exact(g, cfg).map_err(solver_error)?.gamma_sp;
    let meta = tree_meta(g);
    let family_r = n >= 2 && 2 * gamma == n;
    let family_s = (n >= 3).then(|| gamma == n - meta.s);
    let as_decomposition = |(seq, lab): (superdom::trees::BuildSequence, superdom::trees::StatusLabeling)| {
        Decomposition { steps: seq.steps.iter().map(ToString::to_string).collect(), labeling: lab.to_string() }
    };
    let mismatch = |name| RecordError::new(ErrorKind::Other, format!("{name} decomposition disagrees with membership"));
    let r_sequence = if n >= 2 && n.is_multiple_of(2) { decompose_r(g).map_err(tree_error)? } else { None };
    if r_sequence.is_some() != family_r {
        return Err(mismatch("R"));
    }
    let s_sequence = if n >= 3 { decompose_s(g).map_err(tree_error)? } else { None };
    if s_sequence.is_some() != family_s.unwrap_or(false) {
        return Err(mismatch("S"));
    }
    Ok(TreeRecord {
        n,
        gamma_sp: gamma,
        s: meta.s,
        strong_supports: meta.strong_supports,
        bounds: (n >= 3).then(|| (n.div_ceil(2), n - meta.s)),
        family_r,
        family_s,
        r_sequence: r_sequence.filter(|_| sequences).map(as_decomposition),
        s_sequence: s_sequence.filter(|_| sequences).map(as_decomposition),
    })
}

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub n: usize,
    pub set: VertexSet,
    pub super_dominating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SuperDomWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncovered: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<bool>,
}

impl Report for VerifyRecord {
    const CSV_HEADER: &'static [&'static str] = &["n", "set", "super_dominating", "witness", "uncovered", "perfect"];

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            join(&self.set),
            self.super_dominating.to_string(),
            opt(self.witness.as_ref().map(|w| join(w.pairs().map(|(v, u)| format!("{v}:{u}"))))),
            opt(self.uncovered.as_ref().map(join)),
            opt(self.perfect),
        ]
    }

    fn text(&self) -> String {
        match (&self.witness, &self.uncovered) {
            (Some(w), _) => format!(
                "set={} super dominating, perfect={} witness={{{}}}",
                self.set,
                opt(self.perfect),
                witness_text(w)
            ),
            (_, Some(u)) => format!("set={} not super dominating, uncovered={u}", self.set),
            _ => unreachable!("one of witness and uncovered is set"),
        }
    }
}

pub fn verify(g: &Graph, set: &VertexSet) -> Result<VerifyRecord, RecordError> {
    let outcome = check_super_dominating(g, set).map_err(|e| RecordError::new(ErrorKind::Other, e))?;
    let (witness, uncovered, perfect) = match outcome {
        CheckOutcome::SuperDominating(w) => (Some(w), None, is_perfect_set(g, set).ok()),
        CheckOutcome::Uncovered(u) => (None, Some(u), None),
    };
    Ok(VerifyRecord { n: g.n(), set: set.clone(), super_dominating: witness.is_some(), witness, uncovered, perfect })
}
