//! Routing plans: one walk per terminal pair.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;
use crate::io::BlownCycleTag;
use crate::pairing::{Pairing, PairingError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub x: Vertex,
    pub y: Vertex,
    /// Walk from `x` to `y`.
    pub path: Vec<Vertex>,
}

impl Route {
    /// Number of edges on the walk.
    pub fn len(&self) -> usize {
        self.path.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Undirected edges of the walk, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.path
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutePlan {
    routes: Vec<Route>,
    used_edges: BTreeMap<(Vertex, Vertex), usize>,
}

impl RoutePlan {
    /// Wraps routes given in pairing order. An edge walked by several
    /// routes is attributed to the first; use the verifier to detect reuse.
    pub fn new(routes: Vec<Route>) -> Self {
        let mut used_edges = BTreeMap::new();
        for (owner, route) in routes.iter().enumerate() {
            for e in route.edges() {
                used_edges.entry(e).or_insert(owner);
            }
        }
        RoutePlan { routes, used_edges }
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    /// Consumed edges with the index of the route that owns each.
    pub fn used_edges(&self) -> &BTreeMap<(Vertex, Vertex), usize> {
        &self.used_edges
    }

    /// Total edges walked, counting repeats.
    pub fn edges_used(&self) -> usize {
        self.routes.iter().map(Route::len).sum()
    }

    pub fn max_route_len(&self) -> usize {
        self.routes.iter().map(Route::len).max().unwrap_or(0)
    }

    /// The pairing the plan claims to serve.
    pub fn pairing(&self) -> Result<Pairing, PairingError> {
        Pairing::new(self.routes.iter().map(|r| (r.x, r.y)))
    }
}

/// JSON form: `{"routes":[{"x":..,"y":..,"path":[..]}], "edges_used": ..}`,
/// optionally tagged with the blown-cycle parameters and the pairing seed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanDocument {
    pub routes: Vec<Route>,
    pub edges_used: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blown_cycle: Option<BlownCycleTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl PlanDocument {
    pub fn new(plan: &RoutePlan, blown_cycle: Option<BlownCycleTag>, seed: Option<u64>) -> Self {
        PlanDocument {
            routes: plan.routes().to_vec(),
            edges_used: plan.edges_used(),
            blown_cycle,
            seed,
        }
    }

    pub fn to_plan(&self) -> RoutePlan {
        RoutePlan::new(self.routes.clone())
    }
}
