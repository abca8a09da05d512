//! Certification of routing plans against a plain graph.
//!
//! Checks only what the plan claims, using the graph's adjacency; it knows
//! nothing about how the plan was produced.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::pairing::Pairing;
use crate::plan::RoutePlan;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Consecutive vertices of a route are not adjacent (or not vertices).
    NotAWalk { pair: usize, edge: [Vertex; 2] },
    /// The route does not start and end at its pair, or is missing.
    WrongEndpoints {
        pair: usize,
        expected: [Vertex; 2],
        found: Option<[Vertex; 2]>,
    },
    /// An edge is walked more than once; `pairs` names both users.
    EdgeReused {
        pairs: [usize; 2],
        edge: [Vertex; 2],
    },
    /// A route is declared for a vertex that is not part of its pair.
    EndpointNotInPairing { pair: usize, vertex: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Warning {
    RepeatedVertex { pair: usize, vertex: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

/// Checks that route `i` of `plan` is a walk in `g` joining pair `i` of `p`,
/// and that no edge is used twice across the whole plan.
pub fn verify_plan(g: &Graph, p: &Pairing, plan: &RoutePlan) -> VerificationReport {
    let mut violations = Vec::new();
    let mut warnings = Vec::new();
    let mut owner: BTreeMap<(Vertex, Vertex), usize> = BTreeMap::new();

    for (i, route) in plan.routes().iter().enumerate() {
        let Some(&(px, py)) = p.pairs().get(i) else {
            violations.push(Violation::EndpointNotInPairing {
                pair: i,
                vertex: route.x,
            });
            continue;
        };
        for v in [route.x, route.y] {
            if v != px && v != py {
                violations.push(Violation::EndpointNotInPairing { pair: i, vertex: v });
            }
        }
        let expected = [px, py];
        match (route.path.first(), route.path.last()) {
            (Some(&a), Some(&b)) if (a, b) == (px, py) || (a, b) == (py, px) => {}
            (Some(&a), Some(&b)) => violations.push(Violation::WrongEndpoints {
                pair: i,
                expected,
                found: Some([a, b]),
            }),
            _ => violations.push(Violation::WrongEndpoints {
                pair: i,
                expected,
                found: None,
            }),
        }

        let mut visited = HashSet::new();
        for &v in &route.path {
            if !visited.insert(v) {
                warnings.push(Warning::RepeatedVertex { pair: i, vertex: v });
            }
        }
        for w in route.path.windows(2) {
            let (a, b) = (w[0], w[1]);
            if !g.has_edge(a, b) {
                violations.push(Violation::NotAWalk {
                    pair: i,
                    edge: [a, b],
                });
                continue;
            }
            let key = (a.min(b), a.max(b));
            if let Some(&first) = owner.get(&key) {
                violations.push(Violation::EdgeReused {
                    pairs: [first, i],
                    edge: [key.0, key.1],
                });
            } else {
                owner.insert(key, i);
            }
        }
    }
    for (i, &(x, y)) in p.pairs().iter().enumerate().skip(plan.routes().len()) {
        violations.push(Violation::WrongEndpoints {
            pair: i,
            expected: [x, y],
            found: None,
        });
    }

    VerificationReport {
        ok: violations.is_empty(),
        violations,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, FamilySpec};
    use crate::plan::Route;

    fn c6() -> Graph {
        generate(FamilySpec::Cycle { n: 6 }).unwrap()
    }

    #[test]
    fn accepts_disjoint_walks() {
        let p = Pairing::new([(0, 2), (3, 5)]).unwrap();
        let plan = RoutePlan::new(vec![
            Route {
                x: 0,
                y: 2,
                path: vec![0, 1, 2],
            },
            Route {
                x: 3,
                y: 5,
                path: vec![3, 4, 5],
            },
        ]);
        let report = verify_plan(&c6(), &p, &plan);
        assert!(report.ok, "{report:?}");
    }

    #[test]
    fn reused_edge_names_both_pairs() {
        let p = Pairing::new([(0, 2), (1, 3)]).unwrap();
        let plan = RoutePlan::new(vec![
            Route {
                x: 0,
                y: 2,
                path: vec![0, 1, 2],
            },
            Route {
                x: 1,
                y: 3,
                path: vec![1, 2, 3],
            },
        ]);
        let report = verify_plan(&c6(), &p, &plan);
        assert!(!report.ok);
        assert_eq!(
            report.violations,
            vec![Violation::EdgeReused {
                pairs: [0, 1],
                edge: [1, 2]
            }]
        );
    }

    #[test]
    fn detects_non_adjacent_step() {
        let p = Pairing::new([(0, 2)]).unwrap();
        let plan = RoutePlan::new(vec![Route {
            x: 0,
            y: 2,
            path: vec![0, 2],
        }]);
        let report = verify_plan(&c6(), &p, &plan);
        assert_eq!(
            report.violations,
            vec![Violation::NotAWalk {
                pair: 0,
                edge: [0, 2]
            }]
        );
    }

    #[test]
    fn endpoint_checks() {
        let p = Pairing::new([(0, 2), (3, 4)]).unwrap();
        let plan = RoutePlan::new(vec![Route {
            x: 0,
            y: 1,
            path: vec![0, 1],
        }]);
        let report = verify_plan(&c6(), &p, &plan);
        assert_eq!(
            report.violations,
            vec![
                Violation::EndpointNotInPairing { pair: 0, vertex: 1 },
                Violation::WrongEndpoints {
                    pair: 0,
                    expected: [0, 2],
                    found: Some([0, 1])
                },
                Violation::WrongEndpoints {
                    pair: 1,
                    expected: [3, 4],
                    found: None
                },
            ]
        );
    }

    #[test]
    fn repeated_vertex_is_only_a_warning() {
        let g = generate(FamilySpec::Complete { n: 5 }).unwrap();
        let p = Pairing::new([(0, 1)]).unwrap();
        let plan = RoutePlan::new(vec![Route {
            x: 0,
            y: 1,
            path: vec![0, 2, 3, 4, 2, 1],
        }]);
        let report = verify_plan(&g, &p, &plan);
        assert!(report.ok);
        assert_eq!(
            report.warnings,
            vec![Warning::RepeatedVertex { pair: 0, vertex: 2 }]
        );
    }

    #[test]
    fn report_json_is_stable() {
        let p = Pairing::new([(0, 2)]).unwrap();
        let plan = RoutePlan::new(vec![Route {
            x: 0,
            y: 2,
            path: vec![0, 2],
        }]);
        let text = serde_json::to_string(&verify_plan(&c6(), &p, &plan)).unwrap();
        assert_eq!(
            text,
            r#"{"ok":false,"violations":[{"kind":"not-a-walk","pair":0,"edge":[0,2]}],"warnings":[]}"#
        );
    }
}
