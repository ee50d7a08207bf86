//! Shared independent oracles for the integration tests. These deliberately
//! avoid the library's own search strategies so the comparisons stay
//! two-route.

use mimkit::bits::Bits;
use mimkit::graph::Graph;

/// All-subsets, all-bijections induced-subgraph oracle.
pub fn naive_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if k > host.n() {
        return false;
    }
    let mut subset: Vec<usize> = Vec::new();
    fn subsets(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        found: &mut bool,
        check: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        if *found {
            return;
        }
        if cur.len() == k {
            if check(cur) {
                *found = true;
            }
            return;
        }
        for v in start..n {
            cur.push(v);
            subsets(v + 1, n, k, cur, found, check);
            cur.pop();
            if *found {
                return;
            }
        }
    }
    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, &x) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
        out
    }
    let mut found = false;
    subsets(0, host.n(), k, &mut subset, &mut found, &mut |sub| {
        permutations(sub).into_iter().any(|assign| {
            (0..k).all(|i| {
                (i + 1..k).all(|j| host.has_edge(assign[i], assign[j]) == pattern.has_edge(i, j))
            })
        })
    });
    found
}

/// Independent cutmim oracle: maximum independent set in the conflict graph
/// whose vertices are the cross edges of the cut, adjacent when they share
/// an endpoint or a cross edge joins them. Plain vertex-ordered
/// include/exclude recursion on an explicit Graph.
pub fn mis_cutmim_oracle(g: &Graph, side: &Bits) -> u32 {
    let mut cross: Vec<(usize, usize)> = Vec::new();
    for u in side.iter() {
        for v in g.neighbors(u).iter() {
            if !side.contains(v) {
                cross.push((u, v));
            }
        }
    }
    let k = cross.len();
    let mut conflict = Graph::new(k);
    for i in 0..k {
        for j in i + 1..k {
            let (xi, yi) = cross[i];
            let (xj, yj) = cross[j];
            if xi == xj || yi == yj || g.has_edge(xi, yj) || g.has_edge(xj, yi) {
                conflict.add_edge(i, j);
            }
        }
    }
    fn mis(g: &Graph, v: usize, chosen: &mut Vec<usize>) -> u32 {
        if v == g.n() {
            return chosen.len() as u32;
        }
        // Exclude v.
        let mut best = mis(g, v + 1, chosen);
        // Include v when compatible.
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
            best = best.max(mis(g, v + 1, chosen));
            chosen.pop();
        }
        best
    }
    mis(&conflict, 0, &mut Vec::new())
}

/// Graph from the low bits of a mask over the upper triangle.
pub fn graph_from_mask(n: usize, mask: u128) -> Graph {
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
    g
}
