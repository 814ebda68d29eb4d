use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kneser_sym::families::{build, FamilySpec};
use kneser_sym::graph::io::{from_adjacency_list, from_graph6, to_adjacency_list, to_dot, to_graph6};
use kneser_sym::graph::{diameter, is_connected, parity_parts, vertex_connectivity, GraphError, LabeledGraph};
use kneser_sym::search::{
    automorphism_group_with, classify_bipartite_action, SearchError, SearchOptions, TraceNode, DEFAULT_NODE_BUDGET,
};
use kneser_sym::theorems::{run_claims, Caps, CheckOptions, ClaimId, DEFAULT_MAX_N, DEFAULT_SEED};
use serde_json::json;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "kneser-sym", version, about = "Kneser-type graphs, their automorphism groups, and claim checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family graph.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Compute the automorphism group.
    Aut {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Print one line per search node to stderr.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check claims on every instance within the caps.
    Verify {
        /// Claim ids to check; all of them with --all.
        claims: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Include elapsed times (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Summarize basic structure.
    Props {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        json: bool,
    },
    /// Write a graph to a file.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Source {
    /// Family spec such as H(5,2), K(5,2), J(4,2), Q3, BL3.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    spec: Option<String>,
    /// graph6 or adjacency-list file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Adj,
}

/// Errors reported with a specific exit status.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Budget(u64),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn parse_spec(text: &str) -> anyhow::Result<LabeledGraph> {
    let spec: FamilySpec = text.parse()?;
    Ok(build(&spec)?)
}

fn read_graph_file(path: &Path) -> anyhow::Result<LabeledGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
    let graph = if text.contains(':') && !text.starts_with(">>graph6<<") {
        from_adjacency_list(&text, name)?
    } else {
        let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
        from_graph6(line.trim(), name)?
    };
    Ok(graph)
}

impl Source {
    fn load(&self) -> anyhow::Result<LabeledGraph> {
        match (&self.spec, &self.file) {
            (Some(spec), None) => parse_spec(spec),
            (None, Some(path)) => read_graph_file(path),
            _ => bail!("give either a family spec or --file"),
        }
    }
}

fn render(g: &LabeledGraph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::Dot => to_dot(g),
        Format::Adj => to_adjacency_list(g),
    }
}

fn aut(g: &LabeledGraph, budget: u64, trace: bool, as_json: bool, out: &mut impl Write) -> Result<(), Failure> {
    let options = SearchOptions { node_budget: budget, ..SearchOptions::default() };
    let stderr = io::stderr();
    let mut tracer = |node: &TraceNode| {
        let _ = writeln!(stderr.lock(), "{node}");
    };
    let tracer: Option<&mut dyn FnMut(&TraceNode)> = if trace { Some(&mut tracer) } else { None };
    let result = match automorphism_group_with(g, &options, tracer) {
        Ok(r) => r,
        Err(SearchError::Budget(b)) => return Err(Failure::Budget(b)),
        Err(e) => return Err(Failure::Usage(e.into())),
    };
    let bipartite = g.bipartition().is_some() || (is_connected(g).unwrap_or(false) && parity_parts(g).is_some());
    let generators: Vec<(String, Option<String>)> = result
        .group
        .generators()
        .iter()
        .map(|f| {
            let action = bipartite.then(|| classify_bipartite_action(g, f).map_or_else(|e| e.to_string(), |a| a.to_string()));
            (f.to_cycle_string(), action)
        })
        .collect();
    let write = |out: &mut dyn Write| -> io::Result<()> {
        if as_json {
            let gens: Vec<_> = generators.iter().map(|(c, a)| json!({"cycles": c, "part_action": a})).collect();
            let record = json!({
                "graph": g.name(),
                "vertices": g.vertex_count(),
                "order": result.order().to_string(),
                "generators": gens,
                "nodes": result.node_count,
                "refinements": result.refinement_count,
            });
            writeln!(out, "{record}")
        } else {
            writeln!(out, "graph {}", g.name())?;
            writeln!(out, "vertices {}", g.vertex_count())?;
            writeln!(out, "order {}", result.order())?;
            writeln!(out, "generators {}", generators.len())?;
            for (cycles, action) in &generators {
                match action {
                    Some(a) => writeln!(out, "  {cycles} {a}")?,
                    None => writeln!(out, "  {cycles}")?,
                }
            }
            writeln!(out, "nodes {}", result.node_count)?;
            writeln!(out, "refinements {}", result.refinement_count)
        }
    };
    write(out).map_err(|e| Failure::Usage(e.into()))
}

fn props(g: &LabeledGraph, as_json: bool, out: &mut impl Write) -> anyhow::Result<()> {
    let regular = g.regular_degree();
    let diam = match diameter(g) {
        Ok(d) => Some(d),
        Err(GraphError::Disconnected | GraphError::Empty) => None,
        Err(e) => return Err(e.into()),
    };
    let kappa = vertex_connectivity(g)?;
    let parts = g.bipartition().map(|bp| bp.sizes());
    if as_json {
        let record = json!({
            "graph": g.name(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "regular_degree": regular,
            "diameter": diam,
            "connectivity": kappa,
            "parts": parts.map(|(a, b)| [a, b]),
        });
        writeln!(out, "{record}")?;
        return Ok(());
    }
    writeln!(out, "graph {}", g.name())?;
    writeln!(out, "vertices {}", g.vertex_count())?;
    writeln!(out, "edges {}", g.edge_count())?;
    match regular {
        Some(d) => writeln!(out, "regular {d}")?,
        None => writeln!(out, "regular no (min degree {})", g.min_degree())?,
    }
    match diam {
        Some(d) => writeln!(out, "diameter {d}")?,
        None => writeln!(out, "diameter infinite")?,
    }
    writeln!(out, "connectivity {kappa}")?;
    match parts {
        Some((a, b)) => writeln!(out, "parts {a}+{b}")?,
        None => writeln!(out, "parts none")?,
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    claims: &[String],
    all: bool,
    max_n: usize,
    budget: u64,
    seed: u64,
    as_json: bool,
    timings: bool,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let ids: Vec<ClaimId> = if all || claims.is_empty() {
        if !all {
            return Err(Failure::Usage(anyhow::anyhow!("name claim ids or pass --all")));
        }
        ClaimId::ALL.to_vec()
    } else {
        claims.iter().map(|c| c.parse::<ClaimId>()).collect::<Result<_, _>>().map_err(anyhow::Error::from)?
    };
    let caps = Caps { max_n, seed, check: CheckOptions { budget, ..CheckOptions::default() }, ..Caps::default() };
    let reports = run_claims(&caps, &ids);
    let io = |e: io::Error| Failure::Usage(e.into());
    for r in &reports {
        if as_json {
            let line = serde_json::to_string(&r.record(timings)).map_err(|e| Failure::Usage(e.into()))?;
            writeln!(out, "{line}").map_err(io)?;
        } else {
            writeln!(out, "{}", r.render_text(timings)).map_err(io)?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let summary = format!("{} reports, {} passed, {} failed", reports.len(), reports.len() - failed, failed);
    if as_json {
        eprintln!("{summary}");
    } else {
        writeln!(out, "{summary}").map_err(io)?;
    }
    Ok(if reports.iter().any(|r| r.observed.is_budget()) {
        EXIT_BUDGET
    } else if failed > 0 {
        EXIT_FAILED
    } else {
        0
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io = |e: io::Error| Failure::Usage(e.into());
    match cli.command {
        Command::Gen { spec, format } => {
            let g = parse_spec(&spec)?;
            out.write_all(render(&g, format).as_bytes()).map_err(io)?;
        }
        Command::Aut { source, budget, trace, json } => aut(&source.load()?, budget, trace, json, &mut out)?,
        Command::Verify { claims, all, max_n, budget, seed, json, timings } => {
            return verify(&claims, all, max_n, budget, seed, json, timings, &mut out)
        }
        Command::Props { source, json } => props(&source.load()?, json, &mut out)?,
        Command::Export { source, format, out: path } => {
            let g = source.load()?;
            fs::write(&path, render(&g, format))
                .with_context(|| format!("writing {}", path.display()))
                .map_err(Failure::Usage)?;
            writeln!(out, "wrote {} ({} vertices) to {}", g.name(), g.vertex_count(), path.display()).map_err(io)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(e)) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Budget(b)) => {
            eprintln!("error: search budget of {b} nodes exceeded");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
