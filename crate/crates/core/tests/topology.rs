use std::collections::HashSet;

use ltq::topology::{
    cross_neighbor, edges, is_adjacent, neighbors, neighbors_recursive, successive_bits_property,
    LtqGraph, NodeLabel,
};
use proptest::prelude::*;

fn sorted(mut v: Vec<NodeLabel>) -> Vec<NodeLabel> {
    v.sort();
    v
}

#[test]
fn regular_without_self_loops() {
    for dim in 2..=14 {
        for x in LtqGraph::new(dim).unwrap().nodes() {
            let n = neighbors(x);
            assert_eq!(n.len(), dim as usize);
            assert!(!n.contains(&x));
            assert_eq!(n.iter().collect::<HashSet<_>>().len(), dim as usize);
        }
    }
}

#[test]
fn closed_form_matches_recursive_definition() {
    for dim in 2..=10 {
        for x in LtqGraph::new(dim).unwrap().nodes() {
            assert_eq!(sorted(neighbors(x)), neighbors_recursive(x), "node {x}");
        }
    }
}

#[test]
fn adjacency_is_symmetric() {
    for dim in 2..=10 {
        let g = LtqGraph::new(dim).unwrap();
        for x in g.nodes() {
            for y in neighbors(x) {
                assert!(neighbors(y).contains(&x));
                assert!(is_adjacent(y, x).unwrap());
            }
        }
    }
}

#[test]
fn adjacency_agrees_with_neighbor_lists() {
    for dim in 2..=8 {
        let g = LtqGraph::new(dim).unwrap();
        for x in g.nodes() {
            let n: HashSet<_> = neighbors(x).into_iter().collect();
            for y in g.nodes() {
                assert_eq!(is_adjacent(x, y).unwrap(), n.contains(&y));
            }
        }
    }
}

#[test]
fn cross_neighbor_is_an_involution() {
    for dim in 3..=14 {
        for x in LtqGraph::new(dim).unwrap().nodes() {
            assert_eq!(cross_neighbor(cross_neighbor(x).unwrap()).unwrap(), x);
        }
    }
}

#[test]
fn edge_counts_and_successive_bits() {
    for dim in 2..=14 {
        let all = edges(dim).unwrap();
        assert_eq!(all.len(), dim as usize * (1 << (dim - 1)));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        if dim <= 10 {
            for e in &all {
                assert!(successive_bits_property(e.a(), e.b()).unwrap());
            }
        }
    }
}

// Two distinct nodes share at most two neighbours, which is why swapping two
// non-consecutive nodes of a Hamiltonian cycle always breaks an adjacency.
#[test]
fn at_most_two_common_neighbours() {
    for dim in 3..=9 {
        let g = LtqGraph::new(dim).unwrap();
        let sets: Vec<HashSet<NodeLabel>> = g
            .nodes()
            .map(|x| neighbors(x).into_iter().collect())
            .collect();
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                assert!(a.intersection(b).count() <= 2);
            }
        }
    }
}

proptest! {
    #[test]
    fn labels_round_trip_through_bits(dim in 2u32..=30, raw in any::<u32>()) {
        let value = raw & ((1u64 << dim) - 1) as u32;
        let x = NodeLabel::new(dim, value).unwrap();
        let text = x.to_string();
        prop_assert_eq!(text.len(), dim as usize);
        prop_assert_eq!(NodeLabel::from_bits(dim, &text).unwrap(), x);
    }

    #[test]
    fn high_dimension_neighbors_are_symmetric(dim in 11u32..=30, raw in any::<u32>()) {
        let x = NodeLabel::new(dim, raw & ((1u64 << dim) - 1) as u32).unwrap();
        for y in neighbors(x) {
            prop_assert!(neighbors(y).contains(&x));
            prop_assert!(successive_bits_property(x, y).unwrap());
        }
        prop_assert_eq!(cross_neighbor(cross_neighbor(x).unwrap()).unwrap(), x);
    }

    #[test]
    fn high_dimension_recursive_oracle(dim in 11u32..=24, raw in any::<u32>()) {
        let x = NodeLabel::new(dim, raw & ((1u64 << dim) - 1) as u32).unwrap();
        prop_assert_eq!(sorted(neighbors(x)), neighbors_recursive(x));
    }
}
