//! Necessary conditions for path-pairability read off BFS layers.
//!
//! From a root `x` let `S_t` be the vertices at distance `t`, `s_t = |S_t|`
//! and `u_t = s_0 + ... + s_t`. In a path-pairable graph on `n` vertices:
//!
//! * the edges between `S_t` and `S_{t+1}` form a cut separating `u_t`
//!   vertices from `n - u_t`, so there are at least `min(u_t, n - u_t)` of
//!   them (pair that many terminals across the cut);
//! * `s_{2k} + s_{2k+1} >= k` whenever `u_{2k+1} <= n / 2`;
//! * a diameter `d >= 20` satisfies `d <= 6 * sqrt(2) * sqrt(n)`.
//!
//! Any violation proves the graph is not path-pairable. Passing all checks
//! proves nothing.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::metrics::{bfs_layers, eccentricities};
use crate::parallel::{map_ordered, Execution};

/// Smallest diameter for which the diameter bound applies.
pub const DIAMETER_BOUND_MIN: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScreenError {
    #[error("screening needs an even vertex count, got {0}")]
    OddVertexCount(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `s_{2k} + s_{2k+1} < k` although `u_{2k+1} <= n / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayerPairViolation {
    pub k: usize,
    pub layer_sum: usize,
    pub prefix: usize,
}

/// Fewer than `required` edges between layers `t` and `t + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LayerCutViolation {
    pub t: usize,
    pub cut: usize,
    pub required: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiameterViolation {
    pub diameter: usize,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootFindings {
    pub root: Vertex,
    pub sizes: Vec<usize>,
    pub layer_pair_violations: Vec<LayerPairViolation>,
    pub layer_cut_violations: Vec<LayerCutViolation>,
}

impl RootFindings {
    pub fn is_clean(&self) -> bool {
        self.layer_pair_violations.is_empty() && self.layer_cut_violations.is_empty()
    }
}

/// The condition that certifies a negative verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "condition", rename_all = "kebab-case")]
pub enum Certificate {
    LayerPair {
        root: Vertex,
        violation: LayerPairViolation,
    },
    LayerCut {
        root: Vertex,
        violation: LayerCutViolation,
    },
    Diameter(DiameterViolation),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ScreenVerdict {
    NotPathPairable { certificate: Certificate },
    CannotRuleOut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScreenReport {
    pub n: usize,
    pub diameter: usize,
    /// `6 * sqrt(2) * sqrt(n)`.
    pub diameter_bound: f64,
    pub diameter_violation: Option<DiameterViolation>,
    /// Findings for every root whose eccentricity equals the diameter.
    pub roots: Vec<RootFindings>,
    pub verdict: ScreenVerdict,
}

impl ScreenReport {
    pub fn rules_out(&self) -> bool {
        matches!(self.verdict, ScreenVerdict::NotPathPairable { .. })
    }
}

pub fn diameter_bound(n: usize) -> f64 {
    6.0 * 2f64.sqrt() * (n as f64).sqrt()
}

pub fn screen(g: &Graph) -> Result<ScreenReport, ScreenError> {
    screen_with(g, Execution::default())
}

pub fn screen_with(g: &Graph, exec: Execution) -> Result<ScreenReport, ScreenError> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Err(ScreenError::OddVertexCount(n));
    }
    let ecc = eccentricities(g, exec)?;
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    let roots: Vec<Vertex> = (0..n).filter(|&v| ecc[v] == diameter).collect();
    let findings = map_ordered(exec, &roots, |&root| examine_root(g, root))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let bound = diameter_bound(n);
    let diameter_violation = (diameter >= DIAMETER_BOUND_MIN && diameter as f64 > bound)
        .then_some(DiameterViolation { diameter, bound });

    let certificate = findings
        .iter()
        .find_map(|f| {
            f.layer_pair_violations
                .first()
                .map(|&violation| Certificate::LayerPair {
                    root: f.root,
                    violation,
                })
                .or_else(|| {
                    f.layer_cut_violations
                        .first()
                        .map(|&violation| Certificate::LayerCut {
                            root: f.root,
                            violation,
                        })
                })
        })
        .or(diameter_violation.map(Certificate::Diameter));

    Ok(ScreenReport {
        n,
        diameter,
        diameter_bound: bound,
        diameter_violation,
        roots: findings,
        verdict: match certificate {
            Some(certificate) => ScreenVerdict::NotPathPairable { certificate },
            None => ScreenVerdict::CannotRuleOut,
        },
    })
}

fn examine_root(g: &Graph, root: Vertex) -> Result<RootFindings, GraphError> {
    let profile = bfs_layers(g, root)?;
    let n = g.vertex_count();
    let (s, u) = (&profile.sizes, &profile.prefix);

    let mut layer_pair_violations = Vec::new();
    let mut k = 0;
    while 2 * k + 1 < s.len() && 2 * u[2 * k + 1] <= n {
        let layer_sum = s[2 * k] + s[2 * k + 1];
        if layer_sum < k {
            layer_pair_violations.push(LayerPairViolation {
                k,
                layer_sum,
                prefix: u[2 * k + 1],
            });
        }
        k += 1;
    }

    let layer_cut_violations = profile
        .crossing_edges(g)
        .into_iter()
        .enumerate()
        .filter_map(|(t, cut)| {
            let required = u[t].min(n - u[t]);
            (cut < required).then_some(LayerCutViolation { t, cut, required })
        })
        .collect();

    Ok(RootFindings {
        root,
        sizes: profile.sizes.clone(),
        layer_pair_violations,
        layer_cut_violations,
    })
}
