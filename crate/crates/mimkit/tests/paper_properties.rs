//! Larger cross-cutting properties that tie several modules together.

use mimkit::generators::{net_wall, wall, WallSpec};
use mimkit::graph::Graph;
use mimkit::iso::{canonical_form, is_isomorphic};
use mimkit::oracle::exact_mimw_value;
use mimkit::transforms::clique_implant;
use std::collections::HashMap;

/// All cographs (= P4-free graphs) on exactly n vertices, one per
/// isomorphism class, generated by closing {K1} under disjoint union and
/// join.
fn cographs(n: usize) -> Vec<Graph> {
    let mut by_size: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::new(1)]];
    for size in 2..=n {
        let mut reps: HashMap<u64, Graph> = HashMap::new();
        for left in 1..size {
            let right = size - left;
            for a in by_size[left].clone() {
                for b in &by_size[right] {
                    let union = a.disjoint_union(b);
                    let mut join = union.clone();
                    for u in 0..left {
                        for v in 0..right {
                            join.add_edge(u, left + v);
                        }
                    }
                    for g in [union, join] {
                        let key = canonical_form(&g).unwrap().bits;
                        reps.entry(key).or_insert(g);
                    }
                }
            }
        }
        let mut level: Vec<(u64, Graph)> = reps.into_iter().collect();
        level.sort_by_key(|&(k, _)| k);
        by_size.push(level.into_iter().map(|(_, g)| g).collect());
    }
    by_size.swap_remove(n)
}

#[test]
fn p4_free_graphs_have_mimw_at_most_2() {
    // P4-free graphs have clique-width at most 2 and hence mim-width at
    // most 2; exhaustive over all cographs up to 8 vertices. The cograph
    // generator is validated against filtered enumeration up to n = 7.
    let p4 = mimkit::named::path_graph(4);
    for n in 1..=7usize {
        let by_filter = mimkit::enumerate::enumerate_graphs(n)
            .unwrap()
            .into_iter()
            .filter(|g| mimkit::iso::is_h_free(g, &p4))
            .count();
        assert_eq!(cographs(n).len(), by_filter, "cograph count at n={n}");
    }
    for n in 1..=8 {
        for g in cographs(n) {
            let w = exact_mimw_value(&g).unwrap();
            assert!(w <= 2, "cograph {:?} has mimw {w}", g.edges());
        }
    }
}

#[test]
fn net_wall_is_wall_with_implants() {
    // Implanting on every degree-3 vertex of the wall (descending id so the
    // relabeling never disturbs pending vertices) reproduces net_wall.
    let w = wall(WallSpec::elementary(3, 3)).unwrap();
    let mut g = w.graph.clone();
    let deg3: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    for &v in deg3.iter().rev() {
        g = clique_implant(&g, v).unwrap().0;
    }
    let nw = net_wall(WallSpec::elementary(3, 3)).unwrap();
    assert_eq!(g.n(), nw.graph.n());
    assert_eq!(g.m(), nw.graph.m());
    assert!(is_isomorphic(&g, &nw.graph));
}

#[test]
fn kmk5_linear_order_achieves_width_2() {
    // The interleaved matched-pair order on K5 ⊟ K5.
    let g = mimkit::named::km_k(5);
    let order = [0usize, 5, 1, 6, 2, 7, 3, 8, 4, 9];
    let d = mimkit::decomposition::linear_decomposition(&g, &order).unwrap();
    assert_eq!(mimkit::decomposition::mimw_of_decomposition(&g, &d).unwrap(), 2);
}
