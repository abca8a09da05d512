//! Exhaustive path-pairability decision for small graphs.

use serde::Serialize;
use thiserror::Error;

use super::search::{find_disjoint_paths, SearchResult, DEFAULT_BUDGET};
use crate::graph::{Graph, Vertex};
use crate::pairing::Pairing;
use crate::parallel::{map_ordered, with_workers, Execution};

/// Largest vertex count accepted for full enumeration; `11!! = 10395` pairings.
pub const MAX_ENUMERATION_VERTICES: usize = 12;

/// Pairings are searched in fixed-size chunks so that statistics and the
/// reported witness do not depend on thread scheduling.
const CHUNK: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error("path-pairability needs an even vertex count, got {0}")]
    OddVertexCount(usize),
    #[error("{n} vertices exceeds the enumeration limit of {MAX_ENUMERATION_VERTICES}")]
    TooLarge { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    PathPairable,
    NotPathPairable,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct DecideStats {
    pub pairings_total: u64,
    pub pairings_examined: u64,
    pub nodes_expanded: u64,
    pub cap_hits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    /// The first pairing (in canonical order) with no edge-disjoint linkage.
    pub witness: Option<Vec<[Vertex; 2]>>,
    pub stats: DecideStats,
}

#[derive(Debug, Clone, Copy)]
pub struct DecideOptions {
    /// Node cap per pairing.
    pub budget: u64,
    pub execution: Execution,
    /// Thread count; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            budget: DEFAULT_BUDGET,
            execution: Execution::default(),
            workers: None,
        }
    }
}

/// `(n - 1)!!`, the number of perfect pairings of `n` vertices (`n` even).
pub fn pairing_count(n: usize) -> u64 {
    (1..n as u64).step_by(2).product()
}

/// All perfect pairings of `0..n` in canonical order: the smallest unpaired
/// vertex is matched to each remaining candidate in increasing order.
pub fn enumerate_pairings(n: usize) -> Vec<Pairing> {
    fn recurse(
        free: &mut Vec<Vertex>,
        current: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Pairing>,
    ) {
        if free.is_empty() {
            out.push(Pairing::new(current.iter().copied()).expect("disjoint by construction"));
            return;
        }
        let first = free.remove(0);
        for i in 0..free.len() {
            let partner = free.remove(i);
            current.push((first, partner));
            recurse(free, current, out);
            current.pop();
            free.insert(i, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        recurse(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    }
    out
}

pub fn is_path_pairable(g: &Graph, budget: u64) -> Result<Verdict, DecideError> {
    is_path_pairable_with(
        g,
        DecideOptions {
            budget,
            ..DecideOptions::default()
        },
    )
}

/// Runs the disjoint-path search on every perfect pairing and stops at the
/// first infeasible one.
pub fn is_path_pairable_with(g: &Graph, options: DecideOptions) -> Result<Verdict, DecideError> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Err(DecideError::OddVertexCount(n));
    }
    if n > MAX_ENUMERATION_VERTICES {
        return Err(DecideError::TooLarge { n });
    }
    let pairings = enumerate_pairings(n);
    let mut stats = DecideStats {
        pairings_total: pairings.len() as u64,
        ..DecideStats::default()
    };

    let witness = with_workers(options.workers, || {
        for chunk in pairings.chunks(CHUNK) {
            let outcomes = map_ordered(options.execution, chunk, |p| {
                find_disjoint_paths(g, p, options.budget).expect("enumerated pairings are in range")
            });
            for (p, outcome) in chunk.iter().zip(outcomes) {
                stats.pairings_examined += 1;
                stats.nodes_expanded += outcome.nodes;
                match outcome.result {
                    SearchResult::Feasible(_) => {}
                    SearchResult::CapHit => stats.cap_hits += 1,
                    SearchResult::Infeasible => return Some(p.clone()),
                }
            }
        }
        None
    });

    let status = match (&witness, stats.cap_hits) {
        (Some(_), _) => Status::NotPathPairable,
        (None, 0) => Status::PathPairable,
        (None, _) => Status::Inconclusive,
    };
    Ok(Verdict {
        status,
        witness: witness.map(|p| p.pairs().iter().map(|&(x, y)| [x, y]).collect()),
        stats,
    })
}
