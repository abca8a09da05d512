//! Command-line front end.
//!
//! Exit status: `0` success or pass, `1` verified negative (invalid plan,
//! not path-pairable), `2` usage or input errors, `3` inconclusive.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::blown_cycle::{build, BlownCycle};
use crate::generators::{generate, FamilySpec};
use crate::graph::Graph;
use crate::io::{read_graph, sniff_format, write_graph, BlownCycleTag, GraphFormat};
use crate::metrics::diameter;
use crate::pairability::{
    diameter_bound, find_disjoint_paths, is_path_pairable_with, screen, DecideOptions,
    SearchResult, Status, DEFAULT_BUDGET,
};
use crate::pairing::{Pairing, PairingDocument};
use crate::parallel::Execution;
use crate::plan::PlanDocument;
use crate::router::route;
use crate::verifier::verify_plan;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "pathpair", version, about = "Path-pairable graph toolkit")]
pub struct CommandSpec {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph from a named family.
    Generate {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Route a pairing through a blown cycle and print the plan as JSON.
    Route {
        #[command(flatten)]
        source: GraphSource,
        /// Pairing JSON file.
        #[arg(long, conflicts_with = "random")]
        pairing: Option<PathBuf>,
        /// Seed for a random perfect pairing.
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a plan (file or stdin) for edge-disjointness and endpoints.
    Verify {
        /// Plan JSON; read from stdin when absent.
        #[arg(long)]
        plan: Option<PathBuf>,
        #[command(flatten)]
        source: GraphSource,
        /// Pairing the plan must serve; defaults to the plan's own pairs.
        #[arg(long)]
        pairing: Option<PathBuf>,
    },
    /// Decide path-pairability by exhaustive search (at most 12 vertices),
    /// or test a single pairing with `--pairing`.
    Decide {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        pairing: Option<PathBuf>,
        /// Write the witness pairing here when one is found.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Run the necessary-condition screener.
    Screen {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Print vertex and edge counts, maximum degree and diameter.
    Stats {
        #[command(flatten)]
        source: GraphSource,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Dot,
    Edgelist,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => GraphFormat::Json,
            FormatArg::Dot => GraphFormat::Dot,
            FormatArg::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Hypercube,
    Petersen,
    Grid2,
    Grid3,
    BlownCycle,
}

/// Where a command gets its graph: a file, or a family with parameters.
/// `--m` alone selects the blown cycle.
#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Graph file (JSON, DOT or edge list, detected from content).
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Half cycle length of the blown cycle.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub dim: Option<usize>,
}

/// A loaded graph, with its blown-cycle structure when it has one.
struct Loaded {
    graph: Graph,
    blown: Option<BlownCycle>,
}

impl Loaded {
    fn tag(&self) -> Option<BlownCycleTag> {
        self.blown.as_ref().map(BlownCycle::tag)
    }
}

type CliResult<T> = Result<T, String>;

impl GraphSource {
    fn is_empty(&self) -> bool {
        self.graph.is_none() && self.family.is_none() && self.m.is_none()
    }

    fn load(&self) -> CliResult<Loaded> {
        if let Some(path) = &self.graph {
            let text = read_file(path)?;
            let (graph, tag) = read_graph(&text, sniff_format(&text))
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let blown = match tag {
                Some(tag) => Some(blown_matching(&graph, tag)?),
                None => None,
            };
            return Ok(Loaded { graph, blown });
        }
        let need =
            |value: Option<usize>, flag: &str| value.ok_or_else(|| format!("missing --{flag}"));
        let family = match (self.family, self.m) {
            (Some(f), _) => f,
            (None, Some(_)) => FamilyArg::BlownCycle,
            (None, None) => return Err("no graph given: use --graph, --family or --m".into()),
        };
        let spec = match family {
            FamilyArg::BlownCycle => {
                let b = build(need(self.m, "m")?).map_err(|e| e.to_string())?;
                return Ok(Loaded {
                    graph: b.graph().clone(),
                    blown: Some(b),
                });
            }
            FamilyArg::Path => FamilySpec::Path {
                n: need(self.n, "n")?,
            },
            FamilyArg::Cycle => FamilySpec::Cycle {
                n: need(self.n, "n")?,
            },
            FamilyArg::Complete => FamilySpec::Complete {
                n: need(self.n, "n")?,
            },
            FamilyArg::CompleteBipartite => FamilySpec::CompleteBipartite {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
            },
            FamilyArg::Hypercube => FamilySpec::Hypercube {
                dim: need(self.dim, "dim")?,
            },
            FamilyArg::Petersen => FamilySpec::Petersen,
            FamilyArg::Grid2 => FamilySpec::Grid2 {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
            },
            FamilyArg::Grid3 => FamilySpec::Grid3 {
                a: need(self.a, "a")?,
                b: need(self.b, "b")?,
                c: need(self.c, "c")?,
            },
        };
        Ok(Loaded {
            graph: generate(spec).map_err(|e| e.to_string())?,
            blown: None,
        })
    }
}

fn blown_matching(graph: &Graph, tag: BlownCycleTag) -> CliResult<BlownCycle> {
    let b = build(tag.m).map_err(|e| e.to_string())?;
    if b.q() != tag.q || b.graph() != graph {
        return Err(format!(
            "graph does not match its blown_cycle annotation (m={}, q={})",
            tag.m, tag.q
        ));
    }
    Ok(b)
}

fn read_file(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_pairing(path: &PathBuf) -> CliResult<Pairing> {
    let doc: PairingDocument =
        serde_json::from_str(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    doc.to_pairing()
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize") + "\n"
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with_io<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let spec = match CommandSpec::try_parse_from(args) {
        Ok(spec) => spec,
        Err(err) => {
            if err.use_stderr() {
                let _ = write!(stderr, "{err}");
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{err}");
            return EXIT_OK;
        }
    };
    match run(spec, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn run(
    spec: CommandSpec,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<u8> {
    match spec.command {
        Command::Generate {
            source,
            format,
            output,
        } => {
            let loaded = source.load()?;
            emit(
                stdout,
                output.as_ref(),
                &write_graph(&loaded.graph, format.into(), loaded.tag()),
            )?;
            Ok(EXIT_OK)
        }
        Command::Route {
            source,
            pairing,
            random,
            output,
        } => {
            let loaded = source.load()?;
            let b = loaded
                .blown
                .ok_or("routing needs a blown cycle (--m or an annotated graph file)")?;
            let n = b.graph().vertex_count();
            let p = match (pairing, random) {
                (Some(path), _) => read_pairing(&path)?,
                (None, Some(seed)) => {
                    Pairing::random_perfect(n, seed).map_err(|e| e.to_string())?
                }
                (None, None) => return Err("route needs --pairing or --random".into()),
            };
            let plan = route(&b, &p).map_err(|e| e.to_string())?;
            emit(
                stdout,
                output.as_ref(),
                &to_json(&PlanDocument::new(&plan, Some(b.tag()), random)),
            )?;
            let _ = writeln!(
                stderr,
                "n={n} diameter={} pairs={} max_route_len={} edges_used={}",
                b.diameter(),
                p.len(),
                plan.max_route_len(),
                plan.edges_used()
            );
            Ok(EXIT_OK)
        }
        Command::Verify {
            plan,
            source,
            pairing,
        } => {
            let text = match &plan {
                Some(path) => read_file(path)?,
                None => {
                    let mut buf = String::new();
                    stdin.read_to_string(&mut buf).map_err(|e| e.to_string())?;
                    buf
                }
            };
            let doc: PlanDocument =
                serde_json::from_str(&text).map_err(|e| format!("plan: {e}"))?;
            let graph = if !source.is_empty() {
                source.load()?.graph
            } else if let Some(tag) = doc.blown_cycle {
                let b = build(tag.m).map_err(|e| e.to_string())?;
                if b.q() != tag.q {
                    return Err(format!(
                        "plan annotation q={} does not match m={}",
                        tag.q, tag.m
                    ));
                }
                b.graph().clone()
            } else {
                return Err(
                    "verify needs a graph: --graph, --family, --m or an annotated plan".into(),
                );
            };
            let plan = doc.to_plan();
            let p = match pairing {
                Some(path) => read_pairing(&path)?,
                None => plan.pairing().map_err(|e| format!("plan pairs: {e}"))?,
            };
            let report = verify_plan(&graph, &p, &plan);
            stdout
                .write_all(to_json(&report).as_bytes())
                .map_err(|e| e.to_string())?;
            Ok(if report.ok { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Decide {
            source,
            budget,
            workers,
            pairing,
            witness,
        } => {
            let graph = source.load()?.graph;
            if let Some(path) = pairing {
                let p = read_pairing(&path)?;
                let outcome = find_disjoint_paths(&graph, &p, budget).map_err(|e| e.to_string())?;
                let (status, code, plan) = match outcome.result {
                    SearchResult::Feasible(plan) => (
                        "feasible",
                        EXIT_OK,
                        Some(PlanDocument::new(&plan, None, None)),
                    ),
                    SearchResult::Infeasible => ("infeasible", EXIT_NEGATIVE, None),
                    SearchResult::CapHit => ("cap-hit", EXIT_INCONCLUSIVE, None),
                };
                #[derive(Serialize)]
                struct Single {
                    status: &'static str,
                    nodes_expanded: u64,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    plan: Option<PlanDocument>,
                }
                let single = Single {
                    status,
                    nodes_expanded: outcome.nodes,
                    plan,
                };
                stdout
                    .write_all(to_json(&single).as_bytes())
                    .map_err(|e| e.to_string())?;
                return Ok(code);
            }
            let options = DecideOptions {
                budget,
                execution: Execution::Parallel,
                workers,
            };
            let verdict = is_path_pairable_with(&graph, options).map_err(|e| e.to_string())?;
            stdout
                .write_all(to_json(&verdict).as_bytes())
                .map_err(|e| e.to_string())?;
            if let (Some(path), Some(pairs)) = (witness, &verdict.witness) {
                let doc = PairingDocument {
                    pairs: pairs.clone(),
                    seed: None,
                };
                emit(stdout, Some(&path), &to_json(&doc))?;
            }
            Ok(match verdict.status {
                Status::PathPairable => EXIT_OK,
                Status::NotPathPairable => EXIT_NEGATIVE,
                Status::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Screen { source } => {
            let graph = source.load()?.graph;
            let report = screen(&graph).map_err(|e| e.to_string())?;
            stdout
                .write_all(to_json(&report).as_bytes())
                .map_err(|e| e.to_string())?;
            Ok(if report.rules_out() {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            })
        }
        Command::Stats { source } => {
            let loaded = source.load()?;
            let g = &loaded.graph;
            let d = match &loaded.blown {
                Some(b) => b.diameter(),
                None => diameter(g).map_err(|e| e.to_string())?,
            };
            let n = g.vertex_count();
            let text = format!(
                "n: {n}\nedges: {}\nmax_degree: {}\ndiameter: {d}\ndiameter_ratio: {:.6}\n",
                g.edge_count(),
                g.max_degree(),
                d as f64 / diameter_bound(n)
            );
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], input: &str) -> (u8, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with_io(
            std::iter::once("pathpair").chain(args.iter().copied()),
            &mut stdin,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn generate_blown_cycle() {
        let (code, out, _) = run_args(&["generate", "--family", "blown-cycle", "--m", "3"], "");
        assert_eq!(code, EXIT_OK);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["n"], 90);
        assert_eq!(doc["blown_cycle"]["q"], 15);
    }

    #[test]
    fn route_then_verify() {
        let (code, plan, summary) = run_args(&["route", "--m", "2", "--random", "7"], "");
        assert_eq!(code, EXIT_OK);
        assert!(summary.contains("n=44"));
        assert!(plan.contains("\"seed\":7"));
        let (code, report, _) = run_args(&["verify"], &plan);
        assert_eq!(code, EXIT_OK, "{report}");
    }

    #[test]
    fn decide_c4() {
        let (code, out, _) = run_args(&["decide", "--family", "hypercube", "--dim", "2"], "");
        assert_eq!(code, EXIT_NEGATIVE);
        assert!(out.contains("\"witness\":[[0,3],[1,2]]"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(run_args(&["stats"], "").0, EXIT_USAGE);
        assert_eq!(
            run_args(&["route", "--family", "petersen", "--random", "1"], "").0,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["verify"], "not json").0, EXIT_USAGE);
    }

    #[test]
    fn screen_exit_codes() {
        assert_eq!(
            run_args(&["screen", "--family", "path", "--n", "20"], "").0,
            EXIT_NEGATIVE
        );
        assert_eq!(run_args(&["screen", "--family", "petersen"], "").0, EXIT_OK);
    }

    #[test]
    fn stats_lines() {
        let (code, out, _) = run_args(&["stats", "--m", "2"], "");
        assert_eq!(code, EXIT_OK);
        assert!(
            out.starts_with("n: 44\nedges: 484\nmax_degree: 22\ndiameter: 2\n"),
            "{out}"
        );
    }
}
