//! Two-phase edge-disjoint linking on a blown cycle.
//!
//! Phase one moves one terminal of every pair into its partner's class along
//! reserved shift matchings: a pair at forward class distance `d` takes shift
//! `j` on its `j`-th step. Walks that start in the same class stay
//! vertex-disjoint because each step is a perfect matching shared by all of
//! them, and walks from different classes use different matchings at every
//! boundary, so phase one never reuses an edge.
//!
//! Phase two closes each pair still open inside its class `S_i` through a
//! common neighbor `z` in `S_{i+1}` over two free edges. A vertex of `S_i`
//! is the terminal of one pair and the phase-one endpoint of at most `m`
//! walks (one per start class), so at most `2m` of the `>= 2m + 3`
//! candidates of a task can be blocked by edges already taken.

use serde::Serialize;
use thiserror::Error;

use crate::blown_cycle::BlownCycle;
use crate::graph::Vertex;
use crate::pairing::{Pairing, PairingError};
use crate::plan::{Route, RoutePlan};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RouteError {
    #[error(transparent)]
    Pairing(#[from] PairingError),
    /// Every common free neighbor was already taken. The construction rules
    /// this out, so this indicates a defect rather than bad input.
    #[error("no free candidate to close pair ({target}, {end}) in class {class}")]
    NoFreeCandidate {
        class: usize,
        target: Vertex,
        end: Vertex,
    },
}

/// A pair oriented so that its forward class distance is at most `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrientedPair {
    /// Position in the pairing.
    pub index: usize,
    pub x: Vertex,
    pub y: Vertex,
    /// Forward class distance from `x` to `y`, in `0..=m`.
    pub distance: usize,
    /// True when `(x, y)` is the reverse of the input pair.
    pub swapped: bool,
}

/// What is left of a pair after phase one: join `end` to `target`, both in `class`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Task {
    pub class: usize,
    pub target: Vertex,
    pub end: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseOneEntry {
    pub pair: OrientedPair,
    /// `x, p_1(x), ..., p_d(x)`; just `[x]` when `d = 0`.
    pub walk: Vec<Vertex>,
    /// `None` once the walk already ends at `y`.
    pub task: Option<Task>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseOneResult {
    pub entries: Vec<PhaseOneEntry>,
}

impl PhaseOneResult {
    pub fn tasks(&self) -> impl Iterator<Item = (usize, Task)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.task.map(|t| (i, t)))
    }
}

/// Orients each pair so that `y` is at most `m` classes ahead of `x`. Pairs
/// at distance exactly `0` or `m` keep their input orientation.
pub fn canonical_labeling(b: &BlownCycle, p: &Pairing) -> Result<Vec<OrientedPair>, RouteError> {
    p.check_range(b.graph().vertex_count())?;
    Ok(p.pairs()
        .iter()
        .enumerate()
        .map(|(index, &(x, y))| {
            let forward = b.forward_distance(b.class_of(x), b.class_of(y));
            if forward <= b.m() {
                OrientedPair {
                    index,
                    x,
                    y,
                    distance: forward,
                    swapped: false,
                }
            } else {
                OrientedPair {
                    index,
                    x: y,
                    y: x,
                    distance: b.class_count() - forward,
                    swapped: true,
                }
            }
        })
        .collect())
}

pub fn phase_one(b: &BlownCycle, oriented: &[OrientedPair]) -> PhaseOneResult {
    let entries = oriented
        .iter()
        .map(|&pair| {
            let start = b.class_of(pair.x);
            let mut walk = Vec::with_capacity(pair.distance + 1);
            walk.push(pair.x);
            let mut at = pair.x;
            for step in 1..=pair.distance {
                let boundary = (start + step - 1) % b.class_count();
                at = b
                    .matching_step(boundary, step, at)
                    .expect("step shifts stay within the reserved range");
                walk.push(at);
            }
            let task = (at != pair.y).then(|| Task {
                class: b.class_of(pair.y),
                target: pair.y,
                end: at,
            });
            PhaseOneEntry { pair, walk, task }
        })
        .collect();
    PhaseOneResult { entries }
}

/// Closes every open task and assembles the plan, one route per pair in
/// pairing order, each walking from the pair's first vertex to its second.
///
/// Tasks are handled by class, then by target index; each takes the common
/// free neighbor of smallest index whose two edges are still unused.
pub fn phase_two(b: &BlownCycle, result: &PhaseOneResult) -> Result<RoutePlan, RouteError> {
    let q = b.q();
    let mut order: Vec<(usize, Task)> = result.tasks().collect();
    order.sort_by_key(|(_, t)| (t.class, b.index_of(t.target)));

    // taken[v * q + t]: the free edge from v to index t of the next class is in use.
    let mut taken = vec![false; b.graph().vertex_count() * q];
    let mut closers: Vec<Option<Vertex>> = vec![None; result.entries.len()];
    for (entry, task) in order {
        let candidates = b
            .free_common_neighbors(task.end, task.target)
            .expect("task endpoints are distinct vertices of one class");
        let z = candidates
            .into_iter()
            .find(|&z| {
                !taken[task.end * q + b.index_of(z)] && !taken[task.target * q + b.index_of(z)]
            })
            .ok_or(RouteError::NoFreeCandidate {
                class: task.class,
                target: task.target,
                end: task.end,
            })?;
        taken[task.end * q + b.index_of(z)] = true;
        taken[task.target * q + b.index_of(z)] = true;
        closers[entry] = Some(z);
    }

    let mut routes: Vec<Option<Route>> = vec![None; result.entries.len()];
    for (entry, closer) in result.entries.iter().zip(closers) {
        let mut path = entry.walk.clone();
        if let Some(z) = closer {
            path.push(z);
            path.push(entry.pair.y);
        }
        let (x, y) = if entry.pair.swapped {
            path.reverse();
            (entry.pair.y, entry.pair.x)
        } else {
            (entry.pair.x, entry.pair.y)
        };
        routes[entry.pair.index] = Some(Route { x, y, path });
    }
    Ok(RoutePlan::new(
        routes
            .into_iter()
            .map(|r| r.expect("one entry per pair"))
            .collect(),
    ))
}

/// Routes every pair of `p` along edge-disjoint walks of length at most `m + 2`.
pub fn route(b: &BlownCycle, p: &Pairing) -> Result<RoutePlan, RouteError> {
    let oriented = canonical_labeling(b, p)?;
    let first = phase_one(b, &oriented);
    phase_two(b, &first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blown_cycle::build;

    #[test]
    fn labeling_examples() {
        let b = build(3).unwrap();
        let v = |i, a| b.vertex(i, a);
        let p = Pairing::new([(v(4, 0), v(1, 0))]).unwrap();
        let o = canonical_labeling(&b, &p).unwrap()[0];
        assert_eq!(
            (o.x, o.y, o.distance, o.swapped),
            (v(4, 0), v(1, 0), 3, false)
        );

        let p = Pairing::new([(v(1, 0), v(5, 0))]).unwrap();
        let o = canonical_labeling(&b, &p).unwrap()[0];
        assert_eq!(
            (o.x, o.y, o.distance, o.swapped),
            (v(5, 0), v(1, 0), 2, true)
        );

        // Both orientations at distance m: input order wins.
        let p = Pairing::new([(v(1, 0), v(4, 2))]).unwrap();
        let o = canonical_labeling(&b, &p).unwrap()[0];
        assert_eq!((o.x, o.distance, o.swapped), (v(1, 0), 3, false));

        let b2 = build(2).unwrap();
        let p = Pairing::new([(b2.vertex(2, 0), b2.vertex(2, 5))]).unwrap();
        assert_eq!(canonical_labeling(&b2, &p).unwrap()[0].distance, 0);
    }

    #[test]
    fn labeling_rejects_out_of_range() {
        let b = build(2).unwrap();
        let p = Pairing::new([(0, 44)]).unwrap();
        assert!(matches!(
            canonical_labeling(&b, &p),
            Err(RouteError::Pairing(_))
        ));
    }

    #[test]
    fn phase_one_examples() {
        let b = build(2).unwrap();
        let v = |i, a| b.vertex(i, a);
        let p = Pairing::new([(v(0, 0), v(2, 0)), (v(1, 4), v(1, 9)), (v(3, 0), v(1, 3))]).unwrap();
        let r = phase_one(&b, &canonical_labeling(&b, &p).unwrap());
        assert_eq!(r.entries[0].walk, vec![v(0, 0), v(1, 1), v(2, 3)]);
        assert_eq!(
            r.entries[0].task,
            Some(Task {
                class: 2,
                target: v(2, 0),
                end: v(2, 3)
            })
        );
        // Pairs are ordered by smaller endpoint: ids 0, 14, 15.
        // (3,0) -> (0,1) -> (1,3) lands on its partner.
        assert_eq!(r.entries[1].walk, vec![v(3, 0), v(0, 1), v(1, 3)]);
        assert_eq!(r.entries[1].task, None);
        assert_eq!(r.entries[2].walk, vec![v(1, 4)]);
        assert_eq!(
            r.entries[2].task,
            Some(Task {
                class: 1,
                target: v(1, 9),
                end: v(1, 4)
            })
        );
    }

    #[test]
    fn phase_one_complete_when_walk_hits_partner() {
        let b = build(2).unwrap();
        let p = Pairing::new([(b.vertex(0, 0), b.vertex(2, 3))]).unwrap();
        let r = phase_one(&b, &canonical_labeling(&b, &p).unwrap());
        assert_eq!(r.entries[0].task, None);
        assert_eq!(r.tasks().count(), 0);
    }

    #[test]
    fn phase_two_single_task() {
        let b = build(2).unwrap();
        let v = |i, a| b.vertex(i, a);
        let p = Pairing::new([(v(0, 0), v(2, 0))]).unwrap();
        let plan = route(&b, &p).unwrap();
        assert_eq!(
            plan.routes()[0].path,
            vec![v(0, 0), v(1, 1), v(2, 3), v(3, 0), v(2, 0)]
        );
    }

    #[test]
    fn phase_two_without_tasks() {
        let b = build(2).unwrap();
        let p = Pairing::new([(b.vertex(0, 0), b.vertex(2, 3))]).unwrap();
        let plan = phase_two(&b, &phase_one(&b, &canonical_labeling(&b, &p).unwrap())).unwrap();
        assert_eq!(plan.routes()[0].path.len(), 3);
    }

    #[test]
    fn swapped_pairs_route_from_first_vertex() {
        let b = build(3).unwrap();
        let (x, y) = (b.vertex(1, 0), b.vertex(5, 0));
        let plan = route(&b, &Pairing::new([(x, y)]).unwrap()).unwrap();
        let r = &plan.routes()[0];
        assert_eq!((r.x, r.y, r.path[0], *r.path.last().unwrap()), (x, y, x, y));
    }

    #[test]
    fn single_pair_at_distance_m() {
        for m in 2..=6 {
            let b = build(m).unwrap();
            let plan = route(
                &b,
                &Pairing::new([(b.vertex(0, 0), b.vertex(m, 0))]).unwrap(),
            )
            .unwrap();
            let len = plan.routes()[0].len();
            assert!(len == m || len == m + 2, "m={m} len={len}");
        }
    }
}
