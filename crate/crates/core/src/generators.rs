//! Named graph families with fixed vertex numbering.
//!
//! | family                | numbering                                                   |
//! |-----------------------|-------------------------------------------------------------|
//! | `Path(n)`             | `0 - 1 - ... - n-1`                                         |
//! | `Cycle(n)`            | path plus `n-1 - 0`                                         |
//! | `Complete(n)`         | `0..n`                                                      |
//! | `CompleteBipartite`   | part A is `0..a`, part B is `a..a+b`                        |
//! | `Hypercube(d)`        | vertex id is its binary coordinate vector                   |
//! | `Petersen`            | outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5` |
//! | `Grid2(a, b)`         | `K_a x K_b`, row-major: `(r, c) -> r*b + c`                 |
//! | `Grid3(a, b, c)`      | `K_a x K_b x K_c`, row-major: `(r, s, t) -> (r*b + s)*c + t` |

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Hypercube { dim: usize },
    Petersen,
    Grid2 { a: usize, b: usize },
    Grid3 { a: usize, b: usize, c: usize },
}

impl FamilySpec {
    fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidFamily(msg));
        match *self {
            FamilySpec::Path { n: 0 } => bad("path needs at least one vertex".into()),
            FamilySpec::Cycle { n } if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            FamilySpec::Complete { n: 0 } => bad("complete graph needs n >= 1".into()),
            FamilySpec::CompleteBipartite { a, b } if a == 0 || b == 0 => bad(format!(
                "complete bipartite parts must be nonempty, got ({a}, {b})"
            )),
            FamilySpec::Hypercube { dim: 0 } => bad("hypercube dimension must be >= 1".into()),
            // 2^26 vertices is already far beyond anything the metrics can handle.
            FamilySpec::Hypercube { dim } if dim > 26 => {
                bad(format!("hypercube dimension {dim} too large"))
            }
            FamilySpec::Grid2 { a, b } if a == 0 || b == 0 => {
                bad(format!("grid sides must be positive, got ({a}, {b})"))
            }
            FamilySpec::Grid3 { a, b, c } if a == 0 || b == 0 || c == 0 => {
                bad(format!("grid sides must be positive, got ({a}, {b}, {c})"))
            }
            _ => Ok(()),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    match spec {
        FamilySpec::Path { n } => Graph::new(n, (1..n).map(|v| (v - 1, v))),
        FamilySpec::Cycle { n } => Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))),
        FamilySpec::Complete { n } => {
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        FamilySpec::CompleteBipartite { a, b } => {
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        FamilySpec::Hypercube { dim } => hypercube(dim),
        FamilySpec::Petersen => petersen(),
        FamilySpec::Grid2 { a, b } => complete_grid(&[a, b]),
        FamilySpec::Grid3 { a, b, c } => complete_grid(&[a, b, c]),
    }
}

fn hypercube(dim: usize) -> Result<Graph, GraphError> {
    let n = 1usize << dim;
    let edges = (0..n)
        .flat_map(|v| (0..dim).map(move |k| (v, v ^ (1 << k))))
        .filter(|&(u, v)| u < v);
    let labels = (0..n).map(|v| format!("{v:0dim$b}")).collect();
    Graph::new(n, edges)?.with_labels(labels)
}

fn petersen() -> Result<Graph, GraphError> {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, edges)
}

/// Cartesian product of complete graphs: two vertices are adjacent iff their
/// coordinate vectors differ in exactly one position.
fn complete_grid(sides: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = sides.iter().product();
    let coords = |mut v: Vertex| {
        let mut c = vec![0; sides.len()];
        for (slot, &side) in c.iter_mut().zip(sides).rev() {
            *slot = v % side;
            v /= side;
        }
        c
    };
    let mut edges = Vec::new();
    for v in 0..n {
        let cv = coords(v);
        // Moving along axis k changes v by a multiple of the stride of k.
        let mut stride = 1;
        for k in (0..sides.len()).rev() {
            for value in cv[k] + 1..sides[k] {
                edges.push((v, v + (value - cv[k]) * stride));
            }
            stride *= sides[k];
        }
    }
    let labels = (0..n)
        .map(|v| {
            let parts: Vec<String> = coords(v).iter().map(ToString::to_string).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Graph::new(n, edges)?.with_labels(labels)
}
