//! Property tests: the module invariants, cross-checked against the
//! independent oracles in `common`.

mod common;

use common::{graph_from_mask, mis_cutmim_oracle, naive_contains_induced};
use mimkit::bits::Bits;
use mimkit::classifier::classify_pair;
use mimkit::decomposition::{cutmim, linear_decomposition, mimw_of_decomposition};
use mimkit::enumerate::enumerate_graphs;
use mimkit::formats::{
    bdecomp_from_str, bdecomp_to_string, edgelist_to_string, graph6_to_string,
    graph_from_edgelist, graph_from_graph6,
};
use mimkit::iso::contains_induced;
use mimkit::oracle::exact_mimw_value;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = mimkit::Graph> {
    (1..=max_n, any::<u128>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn cutmim_symmetry_and_oracle(g in arb_graph(12), side_mask in any::<u16>()) {
        let side = Bits::from_mask(g.n(), side_mask as u64 & ((1u64 << g.n()) - 1));
        let a = cutmim(&g, &side);
        prop_assert_eq!(a, cutmim(&g, &side.complement()));
        prop_assert_eq!(a, mis_cutmim_oracle(&g, &side));
    }

    #[test]
    fn induced_search_matches_naive(host in arb_graph(6), pattern in arb_graph(4)) {
        let fast = contains_induced(&host, &pattern);
        prop_assert_eq!(fast.is_some(), naive_contains_induced(&host, &pattern));
        if let Some(map) = fast {
            for i in 0..pattern.n() {
                for j in i + 1..pattern.n() {
                    prop_assert_eq!(host.has_edge(map[i], map[j]), pattern.has_edge(i, j));
                }
            }
        }
    }

    #[test]
    fn any_decomposition_dominates_oracle(g in arb_graph(7), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let d = linear_decomposition(&g, &order).unwrap();
        if g.n() >= 3 {
            prop_assert!(mimw_of_decomposition(&g, &d).unwrap() >= exact_mimw_value(&g).unwrap());
        }
    }

    #[test]
    fn oracle_is_isomorphism_invariant(g in arb_graph(6), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(
            exact_mimw_value(&g).unwrap(),
            exact_mimw_value(&g.relabel(&perm)).unwrap()
        );
    }

    #[test]
    fn format_round_trips(g in arb_graph(16)) {
        prop_assert_eq!(graph_from_edgelist(&edgelist_to_string(&g)).unwrap(), g.clone());
        prop_assert_eq!(graph_from_graph6(&graph6_to_string(&g).unwrap()).unwrap(), g.clone());
        let order: Vec<usize> = (0..g.n()).collect();
        let d = linear_decomposition(&g, &order).unwrap();
        let text = bdecomp_to_string(&d);
        prop_assert_eq!(bdecomp_to_string(&bdecomp_from_str(&text).unwrap()), text);
    }

    #[test]
    fn split_predicate_matches_forbidden_subgraphs(g in arb_graph(7)) {
        let by_deg = mimkit::classes::is_split(&g);
        let by_forbidden = ["2P2", "C4", "C5"].iter().all(|name| {
            mimkit::iso::is_h_free(&g, &mimkit::named::graph_from_name(name).unwrap())
        });
        prop_assert_eq!(by_deg, by_forbidden);
    }

    #[test]
    fn realized_expressions_have_stable_canonical_forms(g in arb_graph(7), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(
            mimkit::iso::canonical_form(&g).unwrap(),
            mimkit::iso::canonical_form(&g.relabel(&perm)).unwrap()
        );
    }
}

/// Classifier symmetry over a seeded random sample of 1000 pairs built from
/// the enumeration pools (up to 6 + 6 vertices).
#[test]
fn classifier_symmetry_random_sample() {
    let mut pool = Vec::new();
    for n in 1..=6 {
        pool.extend(enumerate_graphs(n).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20260810);
    for _ in 0..1000 {
        let a = pool.choose(&mut rng).unwrap();
        let b = pool.choose(&mut rng).unwrap();
        let x = classify_pair(a, b);
        let y = classify_pair(b, a);
        match (x, y) {
            (Ok(x), Ok(y)) => assert_eq!(x, y, "pair {:?} / {:?}", a.edges(), b.edges()),
            (x, y) => panic!("classification failed: {x:?} {y:?}"),
        }
    }
}

/// The exact-oracle value for the small 3-partite gadget, frozen from an
/// oracle run.
#[test]
fn gdoubleprime_of_an_edge_oracle_value() {
    let gd = mimkit::generators::construct_gdoubleprime(
        &mimkit::named::graph_from_name("P2").unwrap(),
    );
    assert_eq!((gd.graph.n(), gd.graph.m()), (6, 8));
    assert_eq!(exact_mimw_value(&gd.graph).unwrap(), 1);
}
