//! Every general bound on γ_sp, evaluated independently of the solver and
//! then compared against the exact value.
//!
//! [`bound_report`] returns an error on any violated bound.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::solver::{gamma_sp_exact, SolverConfig, SolverError};

/// Slack used when comparing the real-valued edge bound with integers.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("q = {q} is out of range for n = {n}")]
    EdgeCountOutOfRange { n: usize, q: usize },
    #[error("bound requires a connected graph")]
    Disconnected,
    #[error("bound requires n >= {min}, got n = {n}")]
    TooSmall { n: usize, min: usize },
    #[error("bound violated: {0}")]
    Violation(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundTag {
    LowerHalf,
    EdgeLower,
    DiameterUpper,
    EdgeUpper,
    TrivialUpper,
}

impl BoundTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundTag::LowerHalf => "lower_half",
            BoundTag::EdgeLower => "edge_lower",
            BoundTag::DiameterUpper => "diameter_upper",
            BoundTag::EdgeUpper => "edge_upper",
            BoundTag::TrivialUpper => "trivial_upper",
        }
    }
}

/// `n − 1/2 − √((2n² − 2n − 4q + 1)/4)`.
pub fn edge_lower_bound(n: usize, q: usize) -> Result<f64, BoundError> {
    if q > n * n.saturating_sub(1) / 2 {
        return Err(BoundError::EdgeCountOutOfRange { n, q });
    }
    let (nf, qf) = (n as f64, q as f64);
    let radicand = (2.0 * nf * nf - 2.0 * nf - 4.0 * qf + 1.0) / 4.0;
    assert!(radicand >= 0.0, "radicand {radicand} < 0 for n = {n}, q = {q}");
    Ok(nf - 0.5 - radicand.sqrt())
}

/// `2q − n + 1` for connected graphs with `n > 1`.
pub fn edge_upper_bound(g: &Graph) -> Result<usize, BoundError> {
    if g.n() <= 1 {
        return Err(BoundError::TooSmall { n: g.n(), min: 2 });
    }
    if !g.is_connected() {
        return Err(BoundError::Disconnected);
    }
    Ok(2 * g.q() + 1 - g.n())
}

/// `n − 2` when the diameter is at least 3, `None` otherwise.
pub fn diameter_bound(g: &Graph) -> Result<Option<usize>, BoundError> {
    match g.diameter() {
        None => Err(BoundError::Disconnected),
        Some(d) if d >= 3 => Ok(Some(g.n() - 2)),
        Some(_) => Ok(None),
    }
}

/// `n − 1` when the graph has an edge, `n` otherwise.
pub fn trivial_upper_bound(g: &Graph) -> usize {
    if g.q() > 0 {
        g.n() - 1
    } else {
        g.n()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NordhausGaddum {
    pub gamma_sp: usize,
    pub gamma_sp_complement: usize,
    pub sum: usize,
    /// `n <= sum <= 2n − 1`.
    pub in_range: bool,
    pub lower_attained: bool,
    pub upper_attained: bool,
}

/// γ_sp of `g` and of its complement. `in_range` is reported as computed,
/// so `K_1` (sum 2 > 2n − 1) shows `false`.
pub fn nordhaus_gaddum(g: &Graph) -> Result<NordhausGaddum, BoundError> {
    nordhaus_gaddum_with(g, &SolverConfig::default())
}

pub fn nordhaus_gaddum_with(g: &Graph, cfg: &SolverConfig) -> Result<NordhausGaddum, BoundError> {
    let gamma = gamma_sp_exact(g, cfg)?.gamma_sp;
    nordhaus_gaddum_given(g, gamma, cfg)
}

fn nordhaus_gaddum_given(g: &Graph, gamma: usize, cfg: &SolverConfig) -> Result<NordhausGaddum, BoundError> {
    let n = g.n();
    if n == 0 {
        return Err(BoundError::TooSmall { n, min: 1 });
    }
    let gamma_c = gamma_sp_exact(&g.complement(), cfg)?.gamma_sp;
    let sum = gamma + gamma_c;
    Ok(NordhausGaddum {
        gamma_sp: gamma,
        gamma_sp_complement: gamma_c,
        sum,
        in_range: n <= sum && sum < 2 * n,
        lower_attained: sum == n,
        upper_attained: sum == 2 * n - 1,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub q: usize,
    pub gamma_sp: usize,
    /// `⌈n/2⌉`.
    pub lower_half: usize,
    pub edge_lower: f64,
    /// `None` when disconnected or the diameter is below 3.
    pub diameter_upper: Option<usize>,
    /// `None` when disconnected or `n <= 1`.
    pub edge_upper: Option<usize>,
    pub trivial_upper: usize,
    /// `None` for `n <= 1`.
    pub nordhaus_gaddum: Option<NordhausGaddum>,
    pub attained: BTreeSet<BoundTag>,
}

pub fn bound_report(g: &Graph) -> Result<BoundReport, BoundError> {
    bound_report_with(g, &SolverConfig::default())
}

pub fn bound_report_with(g: &Graph, cfg: &SolverConfig) -> Result<BoundReport, BoundError> {
    let (n, q) = (g.n(), g.q());
    let gamma = gamma_sp_exact(g, cfg)?.gamma_sp;
    let connected = g.is_connected();
    let lower_half = n.div_ceil(2);
    let edge_lower = edge_lower_bound(n, q)?;
    let diameter_upper = if connected { diameter_bound(g)? } else { None };
    let edge_upper = if connected && n > 1 { Some(edge_upper_bound(g)?) } else { None };
    let trivial_upper = trivial_upper_bound(g);
    let nordhaus_gaddum = if n >= 2 { Some(nordhaus_gaddum_given(g, gamma, cfg)?) } else { None };

    let fail = |msg: String| Err(BoundError::Violation(format!("{msg} (n = {n}, q = {q}, γ_sp = {gamma})")));
    if gamma < lower_half || gamma > n {
        return fail(format!("γ_sp outside [⌈n/2⌉, n] = [{lower_half}, {n}]"));
    }
    if (gamma as f64) < (edge_lower - EPS).ceil() {
        return fail(format!("edge lower bound {edge_lower}"));
    }
    if gamma > trivial_upper {
        return fail(format!("trivial upper bound {trivial_upper}"));
    }
    if n > 0 && (gamma == n) != (q == 0) {
        return fail("γ_sp = n must hold exactly for edgeless graphs".into());
    }
    if (gamma == 1) != (n == 1 || (n == 2 && q == 1)) {
        return fail("γ_sp = 1 must hold exactly for K_1 and K_2".into());
    }
    if let Some(b) = diameter_upper.filter(|&b| gamma > b) {
        return fail(format!("diameter bound {b}"));
    }
    if connected && n >= 2 && gamma == n - 1 {
        if g.diameter().is_some_and(|d| d > 2) {
            return fail("γ_sp = n − 1 with diameter above 2".into());
        }
        if !(0..n).all(|v| g.is_semi_universal(v).expect("in range")) {
            return fail("γ_sp = n − 1 with a vertex that is not semi-universal".into());
        }
    }
    if let Some(b) = edge_upper {
        if gamma > b {
            return fail(format!("edge upper bound {b}"));
        }
        if gamma == b && !g.is_tree() {
            return fail("γ_sp = 2q − n + 1 on a graph that is not a tree".into());
        }
    }
    if let Some(ng) = &nordhaus_gaddum {
        if !ng.in_range {
            return fail(format!("γ_sp(G) + γ_sp(complement) = {} outside [n, 2n − 1]", ng.sum));
        }
        if ng.upper_attained != (q == 0 || q == n * (n - 1) / 2) {
            return fail("sum 2n − 1 must hold exactly for K_n and its complement".into());
        }
    }

    let mut attained = BTreeSet::new();
    let mut mark = |tag, hit: bool| {
        if hit {
            attained.insert(tag);
        }
    };
    mark(BoundTag::LowerHalf, gamma == lower_half);
    mark(BoundTag::EdgeLower, (gamma as f64 - edge_lower).abs() < EPS);
    mark(BoundTag::DiameterUpper, diameter_upper == Some(gamma));
    mark(BoundTag::EdgeUpper, edge_upper == Some(gamma));
    mark(BoundTag::TrivialUpper, gamma == trivial_upper);

    Ok(BoundReport {
        n,
        q,
        gamma_sp: gamma,
        lower_half,
        edge_lower,
        diameter_upper,
        edge_upper,
        trivial_upper,
        nordhaus_gaddum,
        attained,
    })
}
