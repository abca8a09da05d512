//! BFS layers, eccentricity, diameter and edge cuts.
//!
//! Every metric here rejects disconnected graphs instead of reporting an
//! infinite distance.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, GraphError, Vertex};
use crate::parallel::{map_range, Execution};

/// Distance layers `S_0, S_1, ..., S_d` around a root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerProfile {
    pub root: Vertex,
    /// `sizes[i]` is the number of vertices at distance `i` from the root.
    pub sizes: Vec<usize>,
    /// `prefix[i] = sizes[0] + ... + sizes[i]`.
    pub prefix: Vec<usize>,
    #[serde(skip)]
    distance: Vec<usize>,
}

impl LayerProfile {
    /// Largest distance from the root.
    pub fn eccentricity(&self) -> usize {
        self.sizes.len() - 1
    }

    /// Layer index (distance from the root) of `v`.
    pub fn layer_of(&self, v: Vertex) -> usize {
        self.distance[v]
    }

    /// `crossing[t]` counts edges between layer `t` and layer `t + 1`.
    pub fn crossing_edges(&self, g: &Graph) -> Vec<usize> {
        let mut crossing = vec![0; self.eccentricity()];
        for &(u, v) in g.edges() {
            let (a, b) = (self.distance[u], self.distance[v]);
            if a != b {
                crossing[a.min(b)] += 1;
            }
        }
        crossing
    }
}

/// Hop distances from `root`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, root: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[root] = Some(0);
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn bfs_layers(g: &Graph, root: Vertex) -> Result<LayerProfile, GraphError> {
    g.check_vertex(root)?;
    let distance = bfs_distances(g, root)
        .into_iter()
        .enumerate()
        .map(|(v, d)| {
            d.ok_or(GraphError::Disconnected {
                root,
                unreachable: v,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let depth = distance.iter().copied().max().unwrap_or(0);
    let mut sizes = vec![0; depth + 1];
    for &d in &distance {
        sizes[d] += 1;
    }
    let prefix = sizes
        .iter()
        .scan(0, |acc, &s| {
            *acc += s;
            Some(*acc)
        })
        .collect();
    Ok(LayerProfile {
        root,
        sizes,
        prefix,
        distance,
    })
}

/// Eccentricity of every vertex, by one BFS per vertex.
pub fn eccentricities(g: &Graph, exec: Execution) -> Result<Vec<usize>, GraphError> {
    if g.vertex_count() == 0 {
        return Ok(Vec::new());
    }
    map_range(exec, g.vertex_count(), |v| {
        bfs_layers(g, v).map(|p| p.eccentricity())
    })
    .into_iter()
    .collect()
}

/// Exact diameter via BFS from every vertex.
pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    diameter_with(g, Execution::default())
}

pub fn diameter_with(g: &Graph, exec: Execution) -> Result<usize, GraphError> {
    Ok(eccentricities(g, exec)?.into_iter().max().unwrap_or(0))
}

/// Number of edges with exactly one endpoint in `side`.
pub fn edge_cut_size(g: &Graph, side: &[Vertex]) -> Result<usize, GraphError> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in side {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    let count = inside.iter().filter(|&&b| b).count();
    if count == 0 {
        return Err(GraphError::InvalidCut("side is empty"));
    }
    if count == g.vertex_count() {
        return Err(GraphError::InvalidCut("side contains every vertex"));
    }
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] != inside[v])
        .count())
}
