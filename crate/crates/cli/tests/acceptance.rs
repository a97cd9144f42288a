//! The twelve acceptance criteria, one PASS/FAIL line each.
//!
//! Expected values come from formulas written out here, not from the
//! library's closed forms.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use superdom::bounds::{bound_report, edge_lower_bound};
use superdom::graph::{all_labeled_graphs, emit_graph6, generate_standard};
use superdom::rng::{random_graph, seeded};
use superdom::solver::{all_minimum_sets, gamma_sp_exact, gamma_sp_oracle, gamma_sp_oracle_with_cap};
use superdom::trees::{
    all_labeled_trees, decompose_r, decompose_s, generate_r, generate_s, is_family_r_with, is_family_s_with,
    tree_bounds, tree_meta,
};
use superdom::{Graph, GraphKind, SolverConfig, VertexSet};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn gamma(g: &Graph) -> usize {
    gamma_sp_exact(g, &cfg()).expect("solver succeeds").gamma_sp
}

fn kind(k: GraphKind) -> Graph {
    generate_standard(k).expect("valid kind")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn cycle_formula(n: usize) -> usize {
    if n.is_multiple_of(4) || n % 4 == 3 {
        n.div_ceil(2)
    } else {
        (n + 1).div_ceil(2)
    }
}

/// Every graph named by criteria 1 to 4 with its expected value.
fn table_graphs() -> Vec<(String, Graph, usize)> {
    let mut out = Vec::new();
    for n in 3..=24 {
        out.push((format!("C_{n}"), kind(GraphKind::Cycle(n)), cycle_formula(n)));
    }
    for n in 3..=24 {
        out.push((format!("P_{n}"), kind(GraphKind::Path(n)), n.div_ceil(2)));
    }
    for n in 2..=10 {
        out.push((format!("K_{n}"), kind(GraphKind::Complete(n)), n - 1));
        out.push((format!("K_1,{}", n - 1), kind(GraphKind::Star(n)), n - 1));
    }
    for m in 2..=6 {
        for n in 2..=6 {
            out.push((format!("K_{m},{n}"), kind(GraphKind::CompleteBipartite(m, n)), m + n - 2));
        }
    }
    out.push(("P_4".into(), kind(GraphKind::Path(4)), 2));
    out.push(("co-P_4".into(), kind(GraphKind::Path(4)).complement(), 2));
    for n in 1..=8 {
        out.push((format!("E_{n}"), kind(GraphKind::Empty(n)), n));
        if n == 1 {
            out.push(("K_1".into(), kind(GraphKind::Complete(1)), 1));
        }
    }
    out
}

fn check_table(graphs: impl IntoIterator<Item = (String, Graph, usize)>) -> Outcome {
    for (name, g, expected) in graphs {
        let got = gamma(&g);
        ensure(got == expected, || format!("{name}: got {got}, expected {expected}"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    check_table((3..=24).map(|n| (format!("C_{n}"), kind(GraphKind::Cycle(n)), cycle_formula(n))))?;
    within(start, Duration::from_secs(60))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    check_table((3..=24).map(|n| (format!("P_{n}"), kind(GraphKind::Path(n)), n.div_ceil(2))))?;
    within(start, Duration::from_secs(30))
}

fn criterion_3() -> Outcome {
    let mut graphs = Vec::new();
    for n in 2..=10 {
        graphs.push((format!("K_{n}"), kind(GraphKind::Complete(n)), n - 1));
        graphs.push((format!("K_1,{}", n - 1), kind(GraphKind::Star(n)), n - 1));
    }
    for m in 2..=6 {
        for n in 2..=6 {
            graphs.push((format!("K_{m},{n}"), kind(GraphKind::CompleteBipartite(m, n)), m + n - 2));
        }
    }
    check_table(graphs)
}

fn criterion_4() -> Outcome {
    let c4 = gamma(&kind(GraphKind::Cycle(4)));
    let lower = edge_lower_bound(4, 4).map_err(|e| e.to_string())?;
    ensure(c4 == 2 && (lower - 2.0).abs() < 1e-9, || format!("C_4: gamma {c4}, edge lower bound {lower}"))?;
    let p4 = kind(GraphKind::Path(4));
    let sum = gamma(&p4) + gamma(&p4.complement());
    ensure(sum == 4, || format!("P_4 sum {sum}"))?;
    // K_1 is also edgeless, so the sum there is 2
    ensure(gamma(&kind(GraphKind::Complete(1))) == 1, || "K_1".into())?;
    for n in 2..=8 {
        let sum = gamma(&kind(GraphKind::Complete(n))) + gamma(&kind(GraphKind::Empty(n)));
        ensure(sum == 2 * n - 1, || format!("K_{n} + E_{n}: sum {sum}"))?;
    }
    Ok(())
}

/// Checks each bound by its own formula, then asks the library's report to
/// agree.
fn check_bounds(g: &Graph) -> Outcome {
    let (n, q) = (g.n(), g.q());
    let gs = gamma(g);
    let fail = |what: &str| format!("{what} violated on {} (gamma {gs})", emit_graph6(g));
    ensure(n.div_ceil(2) <= gs && gs <= n, || fail("trivial range"))?;
    let disc = (2 * n * n) as f64 - (2 * n) as f64 - (4 * q) as f64 + 1.0;
    let edge_lower = n as f64 - 0.5 - (disc / 4.0).sqrt();
    ensure(gs as f64 >= edge_lower - 1e-9, || fail("edge lower bound"))?;
    if g.is_connected() && n > 1 {
        ensure(gs + n <= 2 * q + 1, || fail("edge upper bound"))?;
        if g.diameter().is_some_and(|d| d >= 3) {
            ensure(gs + 2 <= n, || fail("diameter bound"))?;
        }
    }
    if n >= 2 {
        let sum = gs + gamma(&g.complement());
        ensure(n <= sum && sum < 2 * n, || fail("Nordhaus-Gaddum range"))?;
    }
    bound_report(g).map(|_| ()).map_err(|e| format!("report on {}: {e}", emit_graph6(g)))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let small: Vec<Graph> = all_labeled_graphs(5).collect();
    ensure(small.len() == 1024, || format!("{} graphs on 5 vertices", small.len()))?;
    small.par_iter().try_for_each(check_bounds)?;
    (0..500u64).into_par_iter().try_for_each(|seed| -> Outcome {
        let n = 6 + (seed % 7) as usize;
        let p = 0.15 + 0.1 * (seed % 8) as f64;
        check_bounds(&random_graph(n, p, &mut seeded(seed)))
    })?;
    within(start, Duration::from_secs(600))
}

fn criterion_6() -> Outcome {
    for n in 1..=5 {
        all_labeled_graphs(n).collect::<Vec<_>>().par_iter().try_for_each(|g| -> Outcome {
            let gs = gamma(g);
            let k1_or_k2 = n <= 2 && g.q() == n - 1;
            ensure((gs == 1) == k1_or_k2, || format!("gamma 1 mismatch on {}", emit_graph6(g)))?;
            ensure((gs == n) == (g.q() == 0), || format!("gamma n mismatch on {}", emit_graph6(g)))
        })?;
    }
    Ok(())
}

/// Cut edges between `d` and its complement form a perfect matching.
fn perfect(g: &Graph, d: &VertexSet) -> bool {
    let outside = d.complement(g.n());
    d.len() == outside.len()
        && d.iter().all(|v| g.neighbors(v).intersection_len(&outside) == 1)
        && outside.iter().all(|v| g.neighbors(v).intersection_len(d) == 1)
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in [4, 6] {
        let connected: Vec<Graph> = all_labeled_graphs(n).filter(Graph::is_connected).collect();
        connected.par_iter().try_for_each(|g| -> Outcome {
            let sets = all_minimum_sets(g).map_err(|e| e.to_string())?;
            let half = sets[0].len() * 2 == n;
            let all_perfect = sets.iter().all(|d| perfect(g, d));
            ensure(half == all_perfect, || format!("counterexample {}", emit_graph6(g)))
        })?;
        checked += connected.len();
    }
    ensure(checked >= 2000 + 38, || format!("only {checked} graphs"))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    for n in 3..=8 {
        all_labeled_trees(n).par_bridge().try_for_each(|t| -> Outcome {
            let g6 = emit_graph6(&t);
            let gs = gamma(&t);
            let (lo, hi) = tree_bounds(&t).map_err(|e| e.to_string())?;
            ensure(lo == n.div_ceil(2) && hi == n - tree_meta(&t).s, || format!("bounds on {g6}"))?;
            ensure(lo <= gs && gs <= hi, || format!("gamma {gs} outside [{lo}, {hi}] on {g6}"))?;
            let in_r = is_family_r_with(&t, &cfg()).map_err(|e| e.to_string())?;
            let r = if n % 2 == 0 { decompose_r(&t).map_err(|e| e.to_string())? } else { None };
            ensure(in_r == r.is_some(), || format!("R mismatch on {g6}"))?;
            let in_s = is_family_s_with(&t, &cfg()).map_err(|e| e.to_string())?;
            let s = decompose_s(&t).map_err(|e| e.to_string())?;
            ensure(in_s == s.is_some(), || format!("S mismatch on {g6}"))?;
            for (seq, _) in r.iter().chain(&s) {
                let (replayed, _) = seq.replay().map_err(|e| e.to_string())?;
                ensure(replayed == t, || format!("replay differs on {g6}"))?;
            }
            Ok(())
        })?;
    }
    within(start, Duration::from_secs(1800))
}

fn criterion_9() -> Outcome {
    (0..100u64).into_par_iter().try_for_each(|seed| -> Outcome {
        let m = 1 + (seed % 10) as usize;
        let (t, seq) = generate_r(m, seed).map_err(|e| e.to_string())?;
        ensure(t.n() == 2 * m && t.is_tree(), || format!("R seed {seed}: not a tree on {} vertices", 2 * m))?;
        ensure(gamma(&t) == m, || format!("R seed {seed}: gamma differs from {m}"))?;
        ensure(tree_meta(&t).strong_supports.is_empty(), || format!("R seed {seed}: strong support"))?;
        let (replayed, _) = seq.replay().map_err(|e| e.to_string())?;
        ensure(replayed == t, || format!("R seed {seed}: replay differs"))
    })?;
    (0..100u64).into_par_iter().try_for_each(|seed| -> Outcome {
        let j = 1 + (seed % 10) as usize;
        let (t, seq) = generate_s(j, seed).map_err(|e| e.to_string())?;
        ensure(t.is_tree(), || format!("S seed {seed}: not a tree"))?;
        let s = tree_meta(&t).s;
        ensure(gamma(&t) == t.n() - s, || format!("S seed {seed}: gamma differs from n - s"))?;
        let (replayed, _) = seq.replay().map_err(|e| e.to_string())?;
        ensure(replayed == t, || format!("S seed {seed}: replay differs"))
    })
}

fn criterion_10() -> Outcome {
    (0..200u64).into_par_iter().try_for_each(|seed| -> Outcome {
        let n = 1 + (seed % 12) as usize;
        let p = 0.1 + 0.1 * (seed % 9) as f64;
        let g = random_graph(n, p, &mut seeded(1000 + seed));
        let oracle = gamma_sp_oracle(&g).map_err(|e| e.to_string())?.gamma_sp;
        ensure(gamma(&g) == oracle, || format!("seed {seed}: exact and oracle differ"))
    })?;
    table_graphs().par_iter().try_for_each(|(name, g, _)| -> Outcome {
        let oracle = gamma_sp_oracle_with_cap(g, 24).map_err(|e| e.to_string())?.gamma_sp;
        ensure(gamma(g) == oracle, || format!("{name}: exact and oracle differ"))
    })
}

fn criterion_11() -> Outcome {
    for k in 2..=5 {
        let g = kind(GraphKind::FriendshipLike(k));
        let gs = gamma(&g);
        ensure(g.diameter() == Some(2), || format!("k = {k}: diameter {:?}", g.diameter()))?;
        ensure(gs <= k + 1 && k + 1 < 2 * k, || format!("k = {k}: gamma {gs}"))?;
    }
    Ok(())
}

fn run_cli(input: &PathBuf, threads: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_superdom"))
        .args(["solve", "--deterministic", "--out", "json", "--threads", threads])
        .arg(input)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn criterion_12() -> Outcome {
    let graphs = table_graphs();
    let input = std::env::temp_dir().join(format!("superdom-acceptance-{}.g6", std::process::id()));
    let corpus: String = graphs.iter().map(|(_, g, _)| emit_graph6(g) + "\n").collect();
    std::fs::write(&input, corpus).map_err(|e| e.to_string())?;
    let one = run_cli(&input, "1");
    let eight = run_cli(&input, "8");
    let _ = std::fs::remove_file(&input);
    let (one, eight) = (one?, eight?);
    ensure(one == eight, || "JSON output differs between 1 and 8 threads".into())?;
    let text = String::from_utf8(one).map_err(|e| e.to_string())?;
    let records: Vec<&str> = text.lines().collect();
    ensure(records.len() == graphs.len(), || format!("{} records for {} graphs", records.len(), graphs.len()))?;
    for ((name, _, expected), line) in graphs.iter().zip(records) {
        let rec: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        ensure(rec["gamma_sp"] == *expected, || format!("{name}: record {line}"))?;
        ensure(rec.get("elapsed_us").is_none(), || "timing present in deterministic output".into())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("cycle table", criterion_1),
        ("path table", criterion_2),
        ("named families", criterion_3),
        ("sharpness", criterion_4),
        ("bound suite", criterion_5),
        ("extreme values", criterion_6),
        ("perfect sets at n/2", criterion_7),
        ("tree sweep", criterion_8),
        ("generator soundness", criterion_9),
        ("oracle equivalence", criterion_10),
        ("counterexample family", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
