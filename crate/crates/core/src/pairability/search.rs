//! Exact search for edge-disjoint paths joining a set of terminal pairs.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};
use crate::metrics::bfs_distances;
use crate::pairing::{Pairing, PairingError};
use crate::plan::{Route, RoutePlan};
use crate::verifier::verify_plan;

/// Default cap on expanded search nodes per instance.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    /// Edge-disjoint paths exist; the plan has been verified.
    Feasible(RoutePlan),
    /// The search space was exhausted without a solution.
    Infeasible,
    /// The node budget ran out first.
    CapHit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub result: SearchResult,
    /// Partial-path extensions tried.
    pub nodes: u64,
}

struct CapReached;

struct Search<'a> {
    g: &'a Graph,
    /// Terminal pairs in processing order.
    pairs: Vec<(Vertex, Vertex)>,
    used: Vec<bool>,
    used_count: usize,
    paths: Vec<Vec<Vertex>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// BFS distances to `target` over unused edges.
    fn residual_distances(&self, target: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.g.vertex_count()];
        let mut queue = VecDeque::new();
        dist[target] = Some(0);
        queue.push_back(target);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &w in self.g.neighbors(u) {
                if dist[w].is_none() && !self.used[self.edge(u, w)] {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn edge(&self, u: Vertex, v: Vertex) -> usize {
        self.g
            .edge_index(u, v)
            .expect("neighbors are joined by an edge")
    }

    /// Routes pairs `k..` on the residual graph.
    fn solve(&mut self, k: usize) -> Result<bool, CapReached> {
        if k == self.pairs.len() {
            return Ok(true);
        }
        let (x, y) = self.pairs[k];
        let to_target = self.residual_distances(y);
        let Some(own) = to_target[x] else {
            return Ok(false);
        };
        let mut rest = 0;
        for &(a, b) in &self.pairs[k + 1..] {
            match self.residual_distances(b)[a] {
                Some(d) => rest += d,
                None => return Ok(false),
            }
        }
        if self.used_count + own + rest > self.g.edge_count() {
            return Ok(false);
        }
        // Every further edge of this path must still fit under |E|.
        let slack = self.g.edge_count() - self.used_count - rest;
        let mut on_path = vec![false; self.g.vertex_count()];
        on_path[x] = true;
        self.paths[k].push(x);
        let found = self.extend(k, x, y, &to_target, slack, &mut on_path)?;
        if !found {
            self.paths[k].pop();
        }
        Ok(found)
    }

    /// Extends the partial path of pair `k`, currently ending at `at`. On
    /// success the completed paths are left in place.
    fn extend(
        &mut self,
        k: usize,
        at: Vertex,
        target: Vertex,
        to_target: &[Option<usize>],
        slack: usize,
        on_path: &mut [bool],
    ) -> Result<bool, CapReached> {
        if at == target {
            return self.solve(k + 1);
        }
        let length = self.paths[k].len() - 1;
        let mut next: Vec<(usize, Vertex)> = self
            .g
            .neighbors(at)
            .iter()
            .filter(|&&w| !on_path[w] && !self.used[self.edge(at, w)])
            .filter_map(|&w| to_target[w].map(|d| (d, w)))
            .filter(|&(d, _)| length + 1 + d <= slack)
            .collect();
        next.sort_unstable();
        for (_, w) in next {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(CapReached);
            }
            let e = self.edge(at, w);
            self.used[e] = true;
            self.used_count += 1;
            on_path[w] = true;
            self.paths[k].push(w);
            if self.extend(k, w, target, to_target, slack, on_path)? {
                return Ok(true);
            }
            self.paths[k].pop();
            on_path[w] = false;
            self.used_count -= 1;
            self.used[e] = false;
        }
        Ok(false)
    }
}

/// Backtracking search for edge-disjoint paths joining every pair of `p`.
///
/// Pairs are routed in order of decreasing distance, each over all simple
/// paths in the residual graph. A branch is cut when some unrouted pair is
/// disconnected, or when the edges used so far plus the residual distances
/// of the unrouted pairs exceed `|E|`.
pub fn find_disjoint_paths(
    g: &Graph,
    p: &Pairing,
    budget: u64,
) -> Result<SearchOutcome, PairingError> {
    p.check_range(g.vertex_count())?;
    let distance = |&(x, y): &(Vertex, Vertex)| bfs_distances(g, x)[y];
    let mut order: Vec<usize> = (0..p.len()).collect();
    if p.pairs().iter().any(|pair| distance(pair).is_none()) {
        return Ok(SearchOutcome {
            result: SearchResult::Infeasible,
            nodes: 0,
        });
    }
    order.sort_by_key(|&i| std::cmp::Reverse(distance(&p.pairs()[i])));

    let mut search = Search {
        g,
        pairs: order.iter().map(|&i| p.pairs()[i]).collect(),
        used: vec![false; g.edge_count()],
        used_count: 0,
        paths: vec![Vec::new(); p.len()],
        nodes: 0,
        budget,
    };
    let result = match search.solve(0) {
        Err(CapReached) => SearchResult::CapHit,
        Ok(false) => SearchResult::Infeasible,
        Ok(true) => {
            let mut routes = vec![None; p.len()];
            for (slot, &i) in order.iter().enumerate() {
                let (x, y) = p.pairs()[i];
                routes[i] = Some(Route {
                    x,
                    y,
                    path: std::mem::take(&mut search.paths[slot]),
                });
            }
            let plan = RoutePlan::new(routes.into_iter().map(Option::unwrap).collect());
            let report = verify_plan(g, p, &plan);
            assert!(
                report.ok,
                "search produced an invalid plan: {:?}",
                report.violations
            );
            SearchResult::Feasible(plan)
        }
    };
    Ok(SearchOutcome {
        result,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};

    fn antipodal(dim: usize) -> Pairing {
        let n = 1usize << dim;
        Pairing::new((0..n / 2).map(|v| (v, v ^ (n - 1)))).unwrap()
    }

    #[test]
    fn c4_antipodal_is_infeasible() {
        let g = generate(FamilySpec::Cycle { n: 4 }).unwrap();
        let p = Pairing::new([(0, 2), (1, 3)]).unwrap();
        assert_eq!(
            find_disjoint_paths(&g, &p, DEFAULT_BUDGET).unwrap().result,
            SearchResult::Infeasible
        );
    }

    #[test]
    fn q3_antipodal_is_feasible() {
        let g = generate(FamilySpec::Hypercube { dim: 3 }).unwrap();
        let p = antipodal(3);
        match find_disjoint_paths(&g, &p, DEFAULT_BUDGET).unwrap().result {
            SearchResult::Feasible(plan) => assert!(verify_plan(&g, &p, &plan).ok),
            other => panic!("expected a plan, got {other:?}"),
        }
    }

    #[test]
    fn q4_antipodal_is_infeasible() {
        let g = generate(FamilySpec::Hypercube { dim: 4 }).unwrap();
        let outcome = find_disjoint_paths(&g, &antipodal(4), DEFAULT_BUDGET).unwrap();
        assert_eq!(outcome.result, SearchResult::Infeasible);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = generate(FamilySpec::Hypercube { dim: 4 }).unwrap();
        let outcome = find_disjoint_paths(&g, &antipodal(4), 10).unwrap();
        assert_eq!(outcome.result, SearchResult::CapHit);
        assert_eq!(outcome.nodes, 11);
    }

    #[test]
    fn disconnected_pair_is_infeasible() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let p = Pairing::new([(0, 2)]).unwrap();
        assert_eq!(
            find_disjoint_paths(&g, &p, 100).unwrap().result,
            SearchResult::Infeasible
        );
    }

    #[test]
    fn rejects_out_of_range_pairs() {
        let g = generate(FamilySpec::Cycle { n: 4 }).unwrap();
        assert!(find_disjoint_paths(&g, &Pairing::new([(0, 9)]).unwrap(), 100).is_err());
    }
}
