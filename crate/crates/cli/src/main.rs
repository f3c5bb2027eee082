//! `colex` — build, query, dump, and self-check graph indexes.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 internal-consistency
//! failure (a bug, never valid output), 3 a self-check found a
//! counterexample.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use colex_core::doc::IndexDocument;
use colex_core::{EdgeLabeledGraph, Error, LabeledGraph, MsIndex, Side, Violation};

#[derive(Parser)]
#[command(
    name = "colex",
    version,
    about = "Index node-labeled graphs for matching-statistics queries"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an index from a graph file and write the index document.
    Build {
        /// Graph file (`v <id> <label>` / `e <src> <dst>` lines).
        graph: PathBuf,
        /// If validation finds nodes without incoming edges, add a `$`
        /// sentinel source instead of failing.
        #[arg(long)]
        augment_sentinel: bool,
        /// Treat the input as the edge-labeled format and normalize it.
        #[arg(long)]
        edge_labeled: bool,
        /// Output path for the index document.
        #[arg(long)]
        out: PathBuf,
    },
    /// Matching statistics for patterns, one per line, as TSV on stdout.
    Ms {
        /// Index document written by `build`.
        index: PathBuf,
        /// Pattern file; stdin when omitted.
        patterns: Option<PathBuf>,
    },
    /// Dump index components as TSV, one entry per line.
    Dump {
        /// Index document written by `build`.
        index: PathBuf,
        #[arg(long, value_enum)]
        what: DumpWhat,
    },
    /// Build an index and cross-check it against reference computations.
    Check {
        /// Graph file (not an index document).
        graph: PathBuf,
        #[arg(long)]
        augment_sentinel: bool,
        #[arg(long)]
        edge_labeled: bool,
        /// Number of seeded random patterns to verify.
        #[arg(long, default_value_t = 50)]
        patterns: usize,
        /// Seed for the pattern draws.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DumpWhat {
    LcpMin,
    LcpMax,
    LcpJoint,
    Order,
    Chains,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("colex: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Internal(_)) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Build {
            graph,
            augment_sentinel,
            edge_labeled,
            out,
        } => cmd_build(&graph, augment_sentinel, edge_labeled, &out),
        Cmd::Ms { index, patterns } => cmd_ms(&index, patterns.as_deref()),
        Cmd::Dump { index, what } => cmd_dump(&index, what),
        Cmd::Check {
            graph,
            augment_sentinel,
            edge_labeled,
            patterns,
            seed,
        } => cmd_check(&graph, augment_sentinel, edge_labeled, patterns, seed),
    }
}

/// Parse a graph file, normalizing and/or augmenting per the flags.
fn load_graph(
    path: &Path,
    augment_sentinel: bool,
    edge_labeled: bool,
) -> anyhow::Result<LabeledGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let g = if edge_labeled {
        EdgeLabeledGraph::parse(&text)?.normalize(None)?.0
    } else {
        LabeledGraph::parse(&text)?
    };
    let report = g.validate();
    if report.ok() {
        return Ok(g);
    }
    let fixable = report
        .violations
        .iter()
        .all(|(_, kind)| *kind == Violation::NoIncomingEdge);
    if augment_sentinel && fixable {
        Ok(g.augment_with_sentinel()?)
    } else {
        report.into_result()?;
        unreachable!("non-ok report maps to an error")
    }
}

fn cmd_build(
    graph_path: &Path,
    augment_sentinel: bool,
    edge_labeled: bool,
    out: &Path,
) -> anyhow::Result<ExitCode> {
    let g = load_graph(graph_path, augment_sentinel, edge_labeled)?;
    let started = Instant::now();
    let index = MsIndex::build(&g)?;
    let doc = IndexDocument::from_index(&index);
    std::fs::write(out, doc.to_json())
        .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", out.display()))?;
    eprintln!(
        "built index: n={} e={} sigma={} p={} rounds={} ({} ms)",
        g.n(),
        g.edge_count(),
        g.sigma(),
        index.p(),
        index.order().rounds(),
        started.elapsed().as_millis()
    );
    Ok(ExitCode::SUCCESS)
}

fn load_index(path: &Path) -> anyhow::Result<MsIndex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    Ok(IndexDocument::from_json(&text)?.to_index()?)
}

fn cmd_ms(index_path: &Path, patterns: Option<&Path>) -> anyhow::Result<ExitCode> {
    let index = load_index(index_path)?;
    let input = match patterns {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let mut out = String::new();
    for (i, line) in input.lines().enumerate() {
        let pattern = line.strip_suffix('\r').unwrap_or(line);
        let values = index.matching_statistics(pattern)?;
        let values = values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "{}\t{}\t{}", i + 1, pattern, values);
    }
    std::io::stdout().write_all(out.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_dump(index_path: &Path, what: DumpWhat) -> anyhow::Result<ExitCode> {
    let index = load_index(index_path)?;
    let mut out = String::new();
    match what {
        DumpWhat::LcpMin => {
            for v in index.lcp().lcp_min() {
                let _ = writeln!(out, "{v}");
            }
        }
        DumpWhat::LcpMax => {
            for v in index.lcp().lcp_max() {
                let _ = writeln!(out, "{v}");
            }
        }
        DumpWhat::LcpJoint => {
            for v in index.lcp().lcp_joint() {
                let _ = writeln!(out, "{v}");
            }
        }
        DumpWhat::Order => {
            for &item in index.order().sorted() {
                let side = match item.side {
                    Side::Min => "MIN",
                    Side::Max => "MAX",
                };
                let _ = writeln!(out, "{}\t{}\t{}", index.order().rank(item), item.node, side);
            }
        }
        DumpWhat::Chains => {
            for (k, chain) in index.chains().chains().iter().enumerate() {
                for (pos, node) in chain.iter().enumerate() {
                    let _ = writeln!(out, "{k}\t{pos}\t{node}");
                }
            }
        }
    }
    std::io::stdout().write_all(out.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(
    graph_path: &Path,
    augment_sentinel: bool,
    edge_labeled: bool,
    patterns: usize,
    seed: u64,
) -> anyhow::Result<ExitCode> {
    let g = load_graph(graph_path, augment_sentinel, edge_labeled)?;
    let report = colex_core::check::run_checks(&g, patterns, seed)?;
    println!("{}", report.summary());
    match report.failure {
        None => Ok(ExitCode::SUCCESS),
        Some(failure) => {
            let replay = serde_json::json!({
                "graph": graph_path.display().to_string(),
                "seed": seed,
                "patterns": patterns,
                "counterexample": failure,
            });
            eprintln!("colex: check failed: {replay}");
            Ok(ExitCode::from(3))
        }
    }
}
