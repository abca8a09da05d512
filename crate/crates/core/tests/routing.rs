use std::collections::HashMap;

use pathpair::router::{canonical_labeling, phase_one, phase_two};
use pathpair::{build, route, verify_plan, BlownCycle, Pairing};
use proptest::prelude::*;

fn check_phase_structure(b: &BlownCycle, p: &Pairing) {
    let first = phase_one(b, &canonical_labeling(b, p).unwrap());
    let shifts = b.shifts();

    // Walks from the same class never share a vertex.
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    let mut endpoint_load: HashMap<usize, usize> = HashMap::new();
    for (i, entry) in first.entries.iter().enumerate() {
        let start = b.class_of(entry.pair.x);
        for &v in &entry.walk[1..] {
            if let Some(other) = owner.insert((start, v), i) {
                panic!("walks {other} and {i} from class {start} meet at {v}");
            }
        }
        for w in entry.walk.windows(2) {
            assert!(shifts.is_reserved(b.shift_between(w[0], w[1]).unwrap()));
        }
        assert_eq!(entry.walk.len() - 1, entry.pair.distance);
        if let Some(task) = entry.task {
            *endpoint_load.entry(task.end).or_default() += 1;
            *endpoint_load.entry(task.target).or_default() += 1;
        }
    }
    // Every vertex closes at most m + 1 open pairs.
    assert!(endpoint_load.values().all(|&c| c <= b.m() + 1));

    let plan = phase_two(b, &first).unwrap();
    for (route, entry) in plan.routes().iter().zip(&first.entries) {
        if entry.task.is_some() {
            // The two closing edges hang off the class after the task's class.
            let path = if entry.pair.swapped {
                route.path.iter().rev().copied().collect::<Vec<_>>()
            } else {
                route.path.clone()
            };
            let k = path.len();
            let (end, z, y) = (path[k - 3], path[k - 2], path[k - 1]);
            assert!(shifts.is_free(b.shift_between(end, z).unwrap()));
            assert!(shifts.is_free(b.shift_between(y, z).unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_pairings_route_disjointly(m in 2usize..=6, seed in any::<u64>()) {
        let b = build(m).unwrap();
        let p = Pairing::random_perfect(b.graph().vertex_count(), seed).unwrap();
        let plan = route(&b, &p).unwrap();
        let report = verify_plan(b.graph(), &p, &plan);
        prop_assert!(report.ok, "{:?}", report.violations);
        prop_assert!(plan.max_route_len() <= m + 2);
        check_phase_structure(&b, &p);
    }

    #[test]
    fn partial_pairings_route(m in 2usize..=4, seed in any::<u64>(), keep in 1usize..20) {
        let b = build(m).unwrap();
        let full = Pairing::random_perfect(b.graph().vertex_count(), seed).unwrap();
        let p = Pairing::new(full.pairs().iter().copied().take(keep)).unwrap();
        let plan = route(&b, &p).unwrap();
        prop_assert!(verify_plan(b.graph(), &p, &plan).ok);
    }
}

#[test]
fn antipodal_classes_m2() {
    let b = build(2).unwrap();
    let p = Pairing::new(
        (0..2)
            .flat_map(|i| (0..b.q()).map(move |a| (i, a)))
            .map(|(i, a)| (b.vertex(i, a), b.vertex(i + 2, a))),
    )
    .unwrap();
    assert_eq!(p.len(), 22);
    let plan = route(&b, &p).unwrap();
    assert!(verify_plan(b.graph(), &p, &plan).ok);
    assert!(plan.max_route_len() <= 4);
}

#[test]
fn same_class_pairs_use_two_edges() {
    let b = build(3).unwrap();
    let p = Pairing::new(
        (0..b.class_count())
            .flat_map(|i| (0..b.q() - 1).step_by(2).map(move |a| (i, a)))
            .map(|(i, a)| (b.vertex(i, a), b.vertex(i, a + 1))),
    )
    .unwrap();
    let plan = route(&b, &p).unwrap();
    assert!(verify_plan(b.graph(), &p, &plan).ok);
    assert!(plan.routes().iter().all(|r| r.len() == 2));
}

#[test]
fn routing_is_deterministic() {
    let b = build(4).unwrap();
    let p = Pairing::random_perfect(b.graph().vertex_count(), 99).unwrap();
    assert_eq!(route(&b, &p).unwrap(), route(&b, &p).unwrap());
}
