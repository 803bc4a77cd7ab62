//! Property tests for the library invariants.

use proptest::prelude::*;

use rdigraph::checks::{
    check_feasible_nondecreasing, check_feasible_nonincreasing, positional_bounds,
    square_inequality,
};
use rdigraph::fileio::{parse_graph, serialize_graph};
use rdigraph::moves::{apply_move, find_moves, Direction, ALL_KINDS};
use rdigraph::realize::{min_arc_lower_bound, realize};
use rdigraph::{RGraph, SortOrder};

/// Builds a graph from arc attempts, skipping any that would break the cap.
fn build_graph(n: usize, r: u32, attempts: &[(usize, usize, u32)]) -> RGraph {
    let mut g = RGraph::new(n, r).unwrap();
    for &(u, v, m) in attempts {
        let u = u % n;
        let v = v % n;
        if u == v {
            continue;
        }
        let room = r - g.pair_load(u, v);
        let m = m % (r + 1);
        if m >= 1 && m <= room {
            g.add_arcs(u, v, m).unwrap();
        }
    }
    g
}

fn arb_graph() -> impl Strategy<Value = RGraph> {
    (1usize..8, 1u32..5).prop_flat_map(|(n, r)| {
        proptest::collection::vec((0usize..8, 0usize..8, 1u32..5), 0..20)
            .prop_map(move |attempts| build_graph(n, r, &attempts))
    })
}

proptest! {
    #[test]
    fn imbalances_sum_to_zero_and_stay_in_range(g in arb_graph()) {
        let v = g.imbalance_vector();
        prop_assert_eq!(v.iter().sum::<i64>(), 0);
        let lim = i64::from(g.capacity()) * (g.vertex_count() as i64 - 1);
        prop_assert!(v.iter().all(|&b| -lim <= b && b <= lim));
    }

    #[test]
    fn converse_negates_and_reverses(g in arb_graph()) {
        let c = g.converse();
        prop_assert_eq!(c.converse(), g.clone());
        let b: Vec<i64> = g.imbalance_sequence(SortOrder::NonDecreasing).values().to_vec();
        let mut negated: Vec<i64> = b.iter().map(|&x| -x).collect();
        negated.reverse();
        let of_converse = c.imbalance_sequence(SortOrder::NonDecreasing).values().to_vec();
        prop_assert_eq!(of_converse, negated);
    }

    #[test]
    fn sequences_are_invariant_under_relabeling(g in arb_graph(), seed in 0u64..1000) {
        let n = g.vertex_count();
        // cheap deterministic permutation from the seed
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let mut relabeled = RGraph::new(n, g.capacity()).unwrap();
        for (u, v, m) in g.arcs() {
            relabeled.add_arcs(perm[u], perm[v], m).unwrap();
        }
        prop_assert_eq!(
            g.imbalance_sequence(SortOrder::NonDecreasing),
            relabeled.imbalance_sequence(SortOrder::NonDecreasing)
        );
    }

    #[test]
    fn serialization_round_trips_canonically(g in arb_graph()) {
        let text = serialize_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(serialize_graph(&parsed), text);
    }

    #[test]
    fn check_orderings_agree(values in proptest::collection::vec(-10i64..=10, 1..9), r in 1u32..4) {
        let mut asc = values.clone();
        asc.sort_unstable();
        let mut desc = asc.clone();
        desc.reverse();
        let up = check_feasible_nondecreasing(&asc, r).unwrap();
        let down = check_feasible_nonincreasing(&desc, r).unwrap();
        prop_assert_eq!(up.ok(), down.ok());
    }

    #[test]
    fn feasibility_is_monotone_in_r(values in proptest::collection::vec(-10i64..=10, 1..9), r in 1u32..4) {
        let mut asc = values.clone();
        asc.sort_unstable();
        if check_feasible_nondecreasing(&asc, r).unwrap().ok() {
            prop_assert!(check_feasible_nondecreasing(&asc, r + 1).unwrap().ok());
            prop_assert!(check_feasible_nondecreasing(&asc, r + 7).unwrap().ok());
        }
    }

    /// Any graph's own sequence passes every check, realizes back with no
    /// more arcs than the graph spends, and the realization is transitive.
    #[test]
    fn own_sequences_are_feasible_and_realize_minimally(g in arb_graph()) {
        let r = g.capacity();
        let asc: Vec<i64> = g.imbalance_sequence(SortOrder::NonDecreasing).values().to_vec();
        let mut desc = asc.clone();
        desc.reverse();

        prop_assert!(check_feasible_nondecreasing(&asc, r).unwrap().ok());
        prop_assert!(positional_bounds(&asc, r).unwrap().ok());
        prop_assert!(square_inequality(&desc, r).unwrap().ok());

        let re = realize(&asc, r).unwrap();
        let back = re.graph.imbalance_sequence(SortOrder::NonDecreasing).values().to_vec();
        prop_assert_eq!(back, asc.clone());
        prop_assert!(re.arc_count <= g.arc_count());
        prop_assert!(re.arc_count >= min_arc_lower_bound(&asc).unwrap());
        prop_assert!(re.graph.is_transitive());
        for u in 0..re.graph.vertex_count() {
            for v in (u + 1)..re.graph.vertex_count() {
                prop_assert!(re.graph.pair_load(u, v) <= r);
                prop_assert!(re.graph.multiplicity(u, v) == 0 || re.graph.multiplicity(v, u) == 0);
            }
        }
    }

    /// Moves preserve every vertex's imbalance and undo exactly.
    #[test]
    fn moves_are_sound_and_invertible(g in arb_graph()) {
        let vector = g.imbalance_vector();
        for direction in [Direction::Forward, Direction::Inverse] {
            for m in find_moves(&g, &ALL_KINDS, direction) {
                let h = apply_move(&g, &m).unwrap();
                prop_assert_eq!(h.imbalance_vector(), vector.clone());
                let expected = g.arc_count() as i64 + m.arc_delta();
                prop_assert_eq!(h.arc_count() as i64, expected);
                let back = apply_move(&h, &m.flipped()).unwrap();
                prop_assert_eq!(back, g.clone());
            }
        }
    }
}
