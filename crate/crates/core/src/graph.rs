//! Immutable simple undirected graph.

use std::fmt;

use thiserror::Error;

/// Vertex identifier. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex id {id} out of range for graph on {n} vertices")]
    VertexOutOfRange { id: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("graph is disconnected: vertex {unreachable} is unreachable from {root}")]
    Disconnected { root: Vertex, unreachable: Vertex },
    #[error("invalid cut side: {0}")]
    InvalidCut(&'static str),
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted ascending and the edge list holds every edge
/// once as `(u, v)` with `u < v`, sorted lexicographically. Equality compares
/// structure only; display labels are ignored.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adjacency,
            labels: None,
        })
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`, falling back to its id.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub(crate) fn check_vertex(&self, id: Vertex) -> Result<(), GraphError> {
        if id < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { id, n: self.n })
        }
    }
}

/// Builds a graph from `n` and an edge list, rejecting out-of-range ids and
/// self-loops.
pub fn make_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges.iter().copied())
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.edges.len())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_from_edges() {
        let g = make_graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.neighbors(0), &[1, 3]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = make_graph(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_out_of_range() {
        let err = make_graph(3, &[(0, 3)]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { id: 3, n: 3 });
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            make_graph(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn edge_index_is_orientation_free() {
        let g = make_graph(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_index(3, 2), Some(2));
        assert_eq!(g.edge_index(0, 1), Some(0));
        assert_eq!(g.edge_index(0, 3), None);
    }

    #[test]
    fn labels_must_cover_vertices() {
        let g = make_graph(2, &[(0, 1)]).unwrap();
        assert!(g.clone().with_labels(vec!["a".into()]).is_err());
        let g = g.with_labels(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(g.label(1), "b");
    }
}
