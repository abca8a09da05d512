//! Graph serialization: JSON, DOT and plain edge lists.
//!
//! JSON: `{"n": 4, "edges": [[0,1],[0,3],[1,2],[2,3]]}` with `u < v` and
//! edges sorted, plus an optional `"blown_cycle": {"m": .., "q": ..}` block.
//! DOT: an undirected `graph` with one labelled node statement per vertex
//! and one `u -- v;` statement per edge.
//! Edge list: a `# n=<count>` header then one `u v` per line.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("unknown format `{0}` (expected json, dot or edgelist)")]
    UnknownFormat(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(GraphFormat::Json),
            "dot" => Ok(GraphFormat::Dot),
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            other => Err(FormatError::UnknownFormat(other.to_string())),
        }
    }
}

/// Class-structure annotation carried by blown-cycle graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlownCycleTag {
    pub m: usize,
    pub q: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blown_cycle: Option<BlownCycleTag>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, blown_cycle: Option<BlownCycleTag>) -> Self {
        GraphDocument {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            blown_cycle,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])))
    }
}

pub fn to_json(g: &Graph, blown_cycle: Option<BlownCycleTag>) -> String {
    serde_json::to_string(&GraphDocument::from_graph(g, blown_cycle))
        .expect("graph document serializes")
}

pub fn from_json(text: &str) -> Result<(Graph, Option<BlownCycleTag>), FormatError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    Ok((doc.to_graph()?, doc.blown_cycle))
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let label = g.label(v).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Reads the DOT subset written by [`to_dot`].
pub fn from_dot(text: &str) -> Result<Graph, FormatError> {
    let mut labels: Vec<(Vertex, String)> = Vec::new();
    let mut edges = Vec::new();
    let mut opened = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: &str| FormatError::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        let line = raw.trim();
        if line.is_empty() || line.starts_with("//") {
            continue;
        }
        if !opened {
            if line.starts_with("graph") && line.ends_with('{') {
                opened = true;
                continue;
            }
            return Err(err("expected `graph <name> {`"));
        }
        if line == "}" {
            break;
        }
        let stmt = line.strip_suffix(';').unwrap_or(line).trim();
        if let Some((a, b)) = stmt.split_once("--") {
            edges.push((parse_id(a, line_no)?, parse_id(b, line_no)?));
        } else if let Some((id, attrs)) = stmt.split_once('[') {
            let id = parse_id(id, line_no)?;
            let attrs = attrs
                .trim()
                .strip_suffix(']')
                .ok_or_else(|| err("unterminated attribute list"))?;
            let value = attrs
                .trim()
                .strip_prefix("label=\"")
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| err("expected label=\"...\""))?;
            labels.push((id, value.replace("\\\"", "\"").replace("\\\\", "\\")));
        } else {
            labels.push((parse_id(stmt, line_no)?, String::new()));
        }
    }
    if !opened {
        return Err(FormatError::Parse {
            line: 0,
            msg: "missing graph header".into(),
        });
    }
    let n = labels
        .iter()
        .map(|(v, _)| v + 1)
        .chain(edges.iter().map(|&(u, v)| u.max(v) + 1))
        .max()
        .unwrap_or(0);
    let graph = Graph::new(n, edges)?;
    let mut names: Vec<String> = (0..n).map(|v| v.to_string()).collect();
    for (v, label) in labels {
        if !label.is_empty() {
            names[v] = label;
        }
    }
    if names.iter().enumerate().all(|(v, s)| *s == v.to_string()) {
        Ok(graph)
    } else {
        Ok(graph.with_labels(names)?)
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# n={}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Reads an edge list. Without a `# n=` header the vertex count is one more
/// than the largest id seen.
pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(count) = comment.trim().strip_prefix("n=") {
                declared = Some(parse_id(count, line_no)?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => edges.push((parse_id(a, line_no)?, parse_id(b, line_no)?)),
            _ => {
                return Err(FormatError::Parse {
                    line: line_no,
                    msg: format!("expected `u v`, got `{line}`"),
                })
            }
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::new(n, edges)?)
}

pub fn write_graph(g: &Graph, format: GraphFormat, blown_cycle: Option<BlownCycleTag>) -> String {
    match format {
        GraphFormat::Json => to_json(g, blown_cycle) + "\n",
        GraphFormat::Dot => to_dot(g),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

pub fn read_graph(
    text: &str,
    format: GraphFormat,
) -> Result<(Graph, Option<BlownCycleTag>), FormatError> {
    match format {
        GraphFormat::Json => from_json(text),
        GraphFormat::Dot => Ok((from_dot(text)?, None)),
        GraphFormat::EdgeList => Ok((from_edge_list(text)?, None)),
    }
}

/// Picks a format from the leading content of a file.
pub fn sniff_format(text: &str) -> GraphFormat {
    let head = text.trim_start();
    if head.starts_with('{') {
        GraphFormat::Json
    } else if head.starts_with("graph") {
        GraphFormat::Dot
    } else {
        GraphFormat::EdgeList
    }
}

fn parse_id(s: &str, line: usize) -> Result<Vertex, FormatError> {
    s.trim().parse().map_err(|_| FormatError::Parse {
        line,
        msg: format!("invalid vertex id `{}`", s.trim()),
    })
}
