//! Blow-up of the cycle `C_{2m}` into a path-pairable graph of diameter `m`.
//!
//! Each cycle vertex `i` becomes an independent class `S_i` of `q = 4m + 3`
//! vertices and consecutive classes are joined completely. Vertex `(i, a)`
//! (class `i`, index `a`) has id `i * q + a`.
//!
//! The complete bipartite graph between `S_i` and `S_{i+1}` is decomposed
//! into the `q` shift matchings `(i, a) -> (i + 1, (a + j) mod q)`. Shifts
//! `1..=m` are reserved for transporting terminals between classes; the
//! remaining `3m + 3` shifts (`0` and `m+1..=4m+2`) are free and close the
//! routes inside a class. Two same-class vertices then share at least
//! `2(3m + 3) - q = 2m + 3` common neighbors in the next class over free
//! edges.
//!
//! Class size and vertex count are not given outright in the source
//! construction; `q = 4m + 3` is the only choice consistent with perfect
//! reserved matchings of size `4m + 3`, a residual degree of `3m + 3` and
//! `2m + 3` common free neighbors.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::io::BlownCycleTag;
use crate::metrics::bfs_layers;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlownCycleError {
    #[error("half cycle length must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("shift {shift} is not reserved (reserved shifts are 1..={m})")]
    ShiftNotReserved { shift: usize, m: usize },
    #[error("vertex {vertex} is in class {actual}, expected class {expected}")]
    WrongClass {
        vertex: Vertex,
        expected: usize,
        actual: usize,
    },
    #[error("vertices {0} and {1} are in different classes")]
    DifferentClasses(Vertex, Vertex),
    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(Vertex),
    #[error("boundary {boundary} out of range for {classes} classes")]
    BoundaryOutOfRange { boundary: usize, classes: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Partition of the residues mod `q` into reserved and free shifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftSystem {
    m: usize,
}

impl ShiftSystem {
    pub fn new(m: usize) -> Self {
        ShiftSystem { m }
    }

    pub fn q(&self) -> usize {
        4 * self.m + 3
    }

    pub fn is_reserved(&self, shift: usize) -> bool {
        (1..=self.m).contains(&shift)
    }

    pub fn is_free(&self, shift: usize) -> bool {
        shift < self.q() && !self.is_reserved(shift)
    }

    pub fn reserved(&self) -> impl Iterator<Item = usize> {
        1..=self.m
    }

    pub fn free(&self) -> impl Iterator<Item = usize> {
        std::iter::once(0).chain(self.m + 1..self.q())
    }
}

#[derive(Debug, Clone)]
pub struct BlownCycle {
    m: usize,
    q: usize,
    graph: Graph,
}

/// Builds the blow-up of `C_{2m}`. Requires `m >= 2`.
pub fn build(m: usize) -> Result<BlownCycle, BlownCycleError> {
    BlownCycle::new(m)
}

impl BlownCycle {
    pub fn new(m: usize) -> Result<Self, BlownCycleError> {
        if m < 2 {
            return Err(BlownCycleError::TooSmall(m));
        }
        let q = 4 * m + 3;
        let classes = 2 * m;
        let n = classes * q;
        let mut edges = Vec::with_capacity(classes * q * q);
        for i in 0..classes {
            let next = (i + 1) % classes;
            for a in 0..q {
                for b in 0..q {
                    edges.push((i * q + a, next * q + b));
                }
            }
        }
        let labels = (0..n).map(|v| format!("({},{})", v / q, v % q)).collect();
        let graph = Graph::new(n, edges)?.with_labels(labels)?;
        Ok(BlownCycle { m, q, graph })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Class size `4m + 3`.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn class_count(&self) -> usize {
        2 * self.m
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shifts(&self) -> ShiftSystem {
        ShiftSystem::new(self.m)
    }

    pub fn tag(&self) -> BlownCycleTag {
        BlownCycleTag {
            m: self.m,
            q: self.q,
        }
    }

    pub fn vertex(&self, class: usize, index: usize) -> Vertex {
        debug_assert!(class < self.class_count() && index < self.q);
        class * self.q + index
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        v / self.q
    }

    pub fn index_of(&self, v: Vertex) -> usize {
        v % self.q
    }

    /// Forward cycle distance from class `from` to class `to`, in `0..2m`.
    pub fn forward_distance(&self, from: usize, to: usize) -> usize {
        (to + self.class_count() - from) % self.class_count()
    }

    /// Shift of the edge from `u` to `z`, where `z` lies in the class after `u`'s.
    pub fn shift_between(&self, u: Vertex, z: Vertex) -> Option<usize> {
        let next = (self.class_of(u) + 1) % self.class_count();
        (self.class_of(z) == next).then(|| (self.index_of(z) + self.q - self.index_of(u)) % self.q)
    }

    /// Partner of `from` in the reserved matching of shift `shift` at
    /// boundary `(boundary, boundary + 1)`.
    pub fn matching_step(
        &self,
        boundary: usize,
        shift: usize,
        from: Vertex,
    ) -> Result<Vertex, BlownCycleError> {
        if boundary >= self.class_count() {
            return Err(BlownCycleError::BoundaryOutOfRange {
                boundary,
                classes: self.class_count(),
            });
        }
        if !self.shifts().is_reserved(shift) {
            return Err(BlownCycleError::ShiftNotReserved { shift, m: self.m });
        }
        self.graph.check_vertex(from)?;
        let actual = self.class_of(from);
        if actual != boundary {
            return Err(BlownCycleError::WrongClass {
                vertex: from,
                expected: boundary,
                actual,
            });
        }
        let next = (boundary + 1) % self.class_count();
        Ok(self.vertex(next, (self.index_of(from) + shift) % self.q))
    }

    /// Vertices `z` of the next class joined to both `u` and `v` by free
    /// edges, sorted by index.
    pub fn free_common_neighbors(
        &self,
        u: Vertex,
        v: Vertex,
    ) -> Result<Vec<Vertex>, BlownCycleError> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u == v {
            return Err(BlownCycleError::SameVertex(u));
        }
        let class = self.class_of(u);
        if class != self.class_of(v) {
            return Err(BlownCycleError::DifferentClasses(u, v));
        }
        let shifts = self.shifts();
        let next = (class + 1) % self.class_count();
        let (au, av) = (self.index_of(u), self.index_of(v));
        Ok((0..self.q)
            .filter(|&t| {
                shifts.is_free((t + self.q - au) % self.q)
                    && shifts.is_free((t + self.q - av) % self.q)
            })
            .map(|t| self.vertex(next, t))
            .collect())
    }

    /// Diameter from a single BFS. Rotating classes and cyclically shifting
    /// indices are automorphisms, so every vertex has the same eccentricity.
    pub fn diameter(&self) -> usize {
        bfs_layers(&self.graph, 0)
            .expect("blown cycle is connected")
            .eccentricity()
    }
}
