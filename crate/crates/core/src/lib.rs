//! Path-pairable graphs: construction, edge-disjoint routing and checks.
//!
//! A graph on `2k` vertices is path-pairable when every perfect pairing of
//! its vertices can be joined by pairwise edge-disjoint paths. This crate
//! builds the blown-up even cycles (a path-pairable family whose diameter
//! grows like the square root of the vertex count), routes arbitrary
//! pairings through them, certifies the resulting plans, and decides or
//! screens path-pairability of other graphs.

pub mod blown_cycle;
pub mod cli;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod pairability;
pub mod pairing;
pub mod parallel;
pub mod plan;
pub mod router;
pub mod verifier;

pub use blown_cycle::{build, BlownCycle, BlownCycleError, ShiftSystem};
pub use generators::{generate, FamilySpec};
pub use graph::{make_graph, Graph, GraphError, Vertex};
pub use metrics::{bfs_layers, diameter, edge_cut_size, LayerProfile};
pub use pairing::{Pairing, PairingError};
pub use parallel::Execution;
pub use plan::{Route, RoutePlan};
pub use router::{route, RouteError};
pub use verifier::{verify_plan, VerificationReport};
