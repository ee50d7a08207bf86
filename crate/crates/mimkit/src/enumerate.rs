//! Isomorph-free exhaustive enumeration of small graphs.
//!
//! Representatives at order n are built by extending every representative at
//! order n-1 with all 2^(n-1) neighborhoods of a new vertex, deduplicating by
//! canonical form. The canonical-form cost (permutations within degree
//! classes) caps this at n = 7.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::canonical_form;
use std::collections::HashMap;

pub const ENUMERATE_MAX_N: usize = 7;

/// One representative per isomorphism class of graphs on n vertices, in a
/// deterministic order (sorted by canonical key).
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ENUMERATE_MAX_N).contains(&n) {
        return Err(Error::SizeLimit(format!(
            "enumeration supports 1 <= n <= {ENUMERATE_MAX_N}, got {n}"
        )));
    }
    let mut level: Vec<Graph> = vec![Graph::new(1)];
    for k in 1..n {
        let mut next: HashMap<u64, Graph> = HashMap::new();
        for g in &level {
            for mask in 0..(1u64 << k) {
                let mut h = Graph::new(k + 1);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..k {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k);
                    }
                }
                let key = canonical_form(&h)?.bits;
                next.entry(key).or_insert(h);
            }
        }
        let mut pairs: Vec<(u64, Graph)> = next.into_iter().collect();
        pairs.sort_by_key(|&(k, _)| k);
        level = pairs.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

/// Known isomorphism-class counts for n = 1..=7.
pub const GRAPH_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    #[test]
    fn counts_match_oeis() {
        for n in 1..=7 {
            let reps = enumerate_graphs(n).unwrap();
            assert_eq!(reps.len(), GRAPH_COUNTS[n - 1], "n = {n}");
        }
    }

    #[test]
    fn counts_match_labeled_brute_force() {
        // Independent oracle: enumerate all labeled graphs and filter by
        // canonical form directly.
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            let mut keys = std::collections::HashSet::new();
            for mask in 0..(1u64 << pairs) {
                let mut g = Graph::new(n);
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask >> idx & 1 == 1 {
                            g.add_edge(u, v);
                        }
                        idx += 1;
                    }
                }
                keys.insert(canonical_form(&g).unwrap().bits);
            }
            assert_eq!(keys.len(), GRAPH_COUNTS[n - 1], "n = {n}");
        }
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let reps = enumerate_graphs(4).unwrap();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                assert!(!is_isomorphic(&reps[i], &reps[j]));
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(8).is_err());
    }
}
