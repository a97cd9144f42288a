//! `superdom`: super domination numbers, bounds and tree families from the
//! command line.

mod commands;
mod input;
mod output;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use superdom::graph::{emit_graph6, generate_standard};
use superdom::trees::{generate_r, generate_s, BuildSequence};
use superdom::{Graph, GraphKind, VertexSet};

use commands::Settings;
use input::Format;
use output::{Echo, Emitter, ErrorKind, OutFormat};

#[derive(Parser)]
#[command(name = "superdom", version, about = "Exact super domination numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    input: Option<PathBuf>,
    /// A record given directly; `;` separates edge-list lines.
    #[arg(long, conflicts_with = "input")]
    inline: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,
    /// Fix tie-breaking and omit timings so output is byte-identical across runs.
    #[arg(long)]
    deterministic: bool,
    #[arg(long, env = "SUPERDOM_THREADS", default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Lift the exact-solver cap of 64 vertices and the oracle cap of 20.
    #[arg(long)]
    cap_override: bool,
    /// Per-record wall-clock budget for the exact solver, in milliseconds.
    #[arg(long)]
    time_limit_ms: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ_sp with a minimum set and its witness.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Use the brute-force oracle instead of the exact search.
        #[arg(long)]
        oracle: bool,
    },
    /// Evaluate every bound against γ_sp.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Tree bounds and membership in the families R and S.
    Tree {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Include build sequences and status labelings.
        #[arg(long)]
        sequences: bool,
    },
    /// Check whether a given set is super dominating.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Vertices of the set, e.g. `0,2,3`.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Emit graphs as graph6: random trees from R or S, or a standard family.
    Generate {
        /// `R`, `S`, a family name (`path`, `cycle`, `complete`, `star`,
        /// `empty`, `friendship`) or a full kind such as `bipartite:2:3`.
        #[arg(long, visible_alias = "kind")]
        family: String,
        /// Steps for R and S, or the size parameter of a named family.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Record `i` uses seed `seed + i`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory for `<i>.seq` build-sequence files.
        #[arg(long)]
        sidecar: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        out: OutFormat,
    },
}

fn settings(run: &RunArgs, oracle: bool) -> Settings {
    Settings {
        deterministic: run.deterministic,
        threads: usize::from(run.threads),
        cap_override: run.cap_override,
        oracle,
        time_limit: run.time_limit_ms.map(Duration::from_millis),
    }
}

fn echo(run: &RunArgs, oracle: bool) -> Echo {
    Echo { seed: run.seed, deterministic: run.deterministic, oracle, cap_override: run.cap_override }
}

fn parse_set(text: &str) -> Result<VertexSet, String> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}');
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("invalid vertex '{t}' in --set")))
        .collect()
}

fn batch<R, F>(input: &InputArgs, run: &RunArgs, oracle: bool, work: F) -> io::Result<Option<ErrorKind>>
where
    R: output::Report,
    F: Fn(&Graph, &superdom::SolverConfig) -> Result<R, output::RecordError> + Sync,
{
    let records = input::open(input.input.as_deref(), input.inline.as_deref(), input.format)?;
    let stdout = io::stdout().lock();
    let mut emitter = Emitter::new(run.out, BufWriter::new(stdout), echo(run, oracle));
    commands::run_batch(&settings(run, oracle), records, &mut emitter, work)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve { input, run, oracle } => {
            let s = settings(run, *oracle);
            batch(input, run, *oracle, |g, cfg| commands::solve(g, cfg, &s))
        }
        Command::Bounds { input, run } => {
            let s = settings(run, false);
            batch(input, run, false, |g, cfg| commands::bounds(g, cfg, &s))
        }
        Command::Tree { input, run, sequences } => {
            let s = settings(run, false);
            batch(input, run, false, |g, cfg| commands::tree(g, cfg, &s, *sequences))
        }
        Command::Verify { input, run, set } => match parse_set(set) {
            Ok(set) => batch(input, run, false, |g, _| commands::verify(g, &set)),
            Err(msg) => {
                eprintln!("superdom: {msg}");
                return ExitCode::from(2);
            }
        },
        Command::Generate { family, size, count, seed, sidecar, out } => {
            return match generate(family, *size, *count, *seed, sidecar.as_deref(), *out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(msg) => {
                    eprintln!("superdom: {msg}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match outcome {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(kind)) => ExitCode::from(kind.exit_code()),
        Err(e) => {
            eprintln!("superdom: {e}");
            ExitCode::from(1)
        }
    }
}

enum Source {
    R(usize),
    S(usize),
    Kind(GraphKind),
}

impl Source {
    fn parse(family: &str, size: Option<usize>) -> Result<Self, String> {
        let need_size = || size.ok_or_else(|| format!("--size is required for family '{family}'"));
        match family {
            "R" | "r" => Ok(Source::R(need_size()?)),
            "S" | "s" => Ok(Source::S(need_size()?)),
            f if f.contains(':') => f.parse().map(Source::Kind).map_err(|e| e.to_string()),
            f => format!("{f}:{}", need_size()?).parse().map(Source::Kind).map_err(|e| e.to_string()),
        }
    }

    fn label(&self) -> String {
        match self {
            Source::R(_) => "R".into(),
            Source::S(_) => "S".into(),
            Source::Kind(k) => k.to_string(),
        }
    }

    fn build(&self, seed: u64) -> Result<(Graph, Option<BuildSequence>), String> {
        match self {
            Source::R(m) => generate_r(*m, seed).map(|(g, s)| (g, Some(s))).map_err(|e| e.to_string()),
            Source::S(j) => generate_s(*j, seed).map(|(g, s)| (g, Some(s))).map_err(|e| e.to_string()),
            Source::Kind(k) => generate_standard(*k).map(|g| (g, None)).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct Generated<'a> {
    id: usize,
    seed: u64,
    family: &'a str,
    n: usize,
    q: usize,
    graph6: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    sequence: Option<Vec<String>>,
}

fn generate(
    family: &str,
    size: Option<usize>,
    count: usize,
    seed: u64,
    sidecar: Option<&Path>,
    out: OutFormat,
) -> Result<(), String> {
    let source = Source::parse(family, size)?;
    let label = source.label();
    if let Some(dir) = sidecar {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let stdout = io::stdout().lock();
    let mut plain = BufWriter::new(stdout);
    let io_err = |e: io::Error| e.to_string();
    let mut table = (out == OutFormat::Csv).then(|| csv::Writer::from_writer(Vec::new()));
    if let Some(w) = &mut table {
        w.write_record(["id", "seed", "family", "n", "q", "graph6"]).map_err(|e| e.to_string())?;
    }
    for i in 0..count {
        let record_seed = seed.wrapping_add(i as u64);
        let (g, seq) = source.build(record_seed)?;
        let g6 = emit_graph6(&g);
        if let (Some(dir), Some(seq)) = (sidecar, &seq) {
            let path = dir.join(format!("{i}.seq"));
            fs::write(&path, seq.to_string()).map_err(|e| format!("{}: {e}", path.display()))?;
        }
        match (out, &mut table) {
            (OutFormat::Csv, Some(w)) => {
                let fields =
                    [i.to_string(), record_seed.to_string(), label.clone(), g.n().to_string(), g.q().to_string(), g6];
                w.write_record(&fields).map_err(|e| e.to_string())?;
            }
            (OutFormat::Json, _) => {
                let rec = Generated {
                    id: i,
                    seed: record_seed,
                    family: &label,
                    n: g.n(),
                    q: g.q(),
                    graph6: &g6,
                    sequence: seq.map(|s| s.steps.iter().map(ToString::to_string).collect()),
                };
                let line = serde_json::to_string(&rec).map_err(|e| e.to_string())?;
                writeln!(plain, "{line}").map_err(io_err)?;
            }
            _ => writeln!(plain, "{g6}").map_err(io_err)?,
        }
    }
    if let Some(w) = table {
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        plain.write_all(&bytes).map_err(io_err)?;
    }
    plain.flush().map_err(io_err)
}
