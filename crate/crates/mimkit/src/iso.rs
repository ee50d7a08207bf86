//! Induced-subgraph isomorphism, isomorphism tests, and canonical forms for
//! small graphs.
//!
//! `contains_induced` is exact backtracking with degree and adjacency pruning.
//! Patterns are always small here (at most ~10 vertices); hosts range from
//! tiny catalog graphs to generated witnesses with a few hundred vertices, so
//! the search dispatches on pattern shape (disconnected, path, dominated)
//! before falling back to the generic backtracker.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;

/// Induced-subgraph test: returns a mapping `pattern vertex -> host vertex`
/// such that the image induces a copy of `pattern`, or None.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    if pattern.n() == 0 {
        return Some(Vec::new());
    }
    let comps = pattern.connected_components();
    if comps.len() > 1 {
        return embed_disconnected(host, pattern, comps);
    }
    if let Some(path) = as_path_order(pattern) {
        let found = find_induced_path(host, pattern.n())?;
        let mut map = vec![0; pattern.n()];
        for (i, &pv) in path.iter().enumerate() {
            map[pv] = found[i];
        }
        return Some(map);
    }
    if let Some(dom) = dominating_vertex(pattern) {
        return embed_dominated(host, pattern, dom);
    }
    embed_generic(host, pattern)
}

pub fn is_h_free(host: &Graph, pattern: &Graph) -> bool {
    contains_induced(host, pattern).is_none()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    contains_induced(a, b).is_some()
}

/// If the graph is a path, returns its vertices in path order.
fn as_path_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 1 {
        return Some(vec![0]);
    }
    if g.m() != n - 1 || g.max_degree() > 2 || !g.is_connected() {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    for _ in 1..n {
        let next = g.neighbors(cur).iter().find(|&w| w != prev)?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

fn dominating_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) == g.n() - 1)
}

fn embed_dominated(host: &Graph, pattern: &Graph, dom: usize) -> Option<Vec<usize>> {
    let keep = Bits::full(pattern.n());
    let mut rest_keep = keep;
    rest_keep.remove(dom);
    let (rest, rest_verts) = pattern.induced(&rest_keep);
    for d in 0..host.n() {
        if host.degree(d) < pattern.n() - 1 {
            continue;
        }
        let (nbhd, nbhd_verts) = host.induced(host.neighbors(d));
        if let Some(sub) = contains_induced(&nbhd, &rest) {
            let mut map = vec![0; pattern.n()];
            map[dom] = d;
            for (ri, &pv) in rest_verts.iter().enumerate() {
                map[pv] = nbhd_verts[sub[ri]];
            }
            return Some(map);
        }
    }
    None
}

fn embed_disconnected(host: &Graph, pattern: &Graph, mut comps: Vec<Bits>) -> Option<Vec<usize>> {
    comps.sort_by_key(|c| std::cmp::Reverse(c.count()));
    let (first, first_verts) = pattern.induced(&comps[0]);
    let mut rest_bits = Bits::new(pattern.n());
    for c in &comps[1..] {
        rest_bits.union_with(c);
    }
    let (rest, rest_verts) = pattern.induced(&rest_bits);

    let mut result: Option<Vec<usize>> = None;
    for_each_induced_set(host, &first, &mut |set, map| {
        // Remaining components must avoid the image and all its neighbors.
        let mut allowed = Bits::full(host.n());
        for v in set.iter() {
            allowed.remove(v);
            allowed.subtract(host.neighbors(v));
        }
        let (sub, sub_verts) = host.induced(&allowed);
        if rest.n() > sub.n() {
            return true;
        }
        if let Some(rmap) = contains_induced(&sub, &rest) {
            let mut full = vec![0; pattern.n()];
            for (fi, &pv) in first_verts.iter().enumerate() {
                full[pv] = map[fi];
            }
            for (ri, &pv) in rest_verts.iter().enumerate() {
                full[pv] = sub_verts[rmap[ri]];
            }
            result = Some(full);
            return false;
        }
        true
    });
    result
}

/// Visits every distinct vertex set inducing a copy of `pattern` (connected),
/// with one witness mapping each. Callback returns false to stop.
fn for_each_induced_set(
    host: &Graph,
    pattern: &Graph,
    f: &mut dyn FnMut(&Bits, &[usize]) -> bool,
) {
    if pattern.n() == 1 {
        for v in 0..host.n() {
            let set = Bits::from_iter(host.n(), [v]);
            if !f(&set, &[v]) {
                return;
            }
        }
        return;
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = Bits::new(host.n());
    backtrack_all(host, pattern, &order, 0, &mut map, &mut used, &mut seen, f);
}

#[allow(clippy::too_many_arguments)]
fn backtrack_all(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Bits,
    seen: &mut HashSet<Vec<usize>>,
    f: &mut dyn FnMut(&Bits, &[usize]) -> bool,
) -> bool {
    if depth == order.len() {
        let mut key: Vec<usize> = map.clone();
        key.sort_unstable();
        if seen.insert(key) {
            let set = Bits::from_iter(host.n(), map.iter().copied());
            return f(&set, map);
        }
        return true;
    }
    let pv = order[depth];
    for cand in candidates(host, pattern, order, depth, map) {
        map[pv] = cand;
        used.insert(cand);
        let go_on = backtrack_all(host, pattern, order, depth + 1, map, used, seen, f);
        used.remove(cand);
        map[pv] = usize::MAX;
        if !go_on {
            return false;
        }
    }
    true
}

/// Static search order: max degree first, then most-constrained-by-prefix.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = Bits::new(n);
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| {
                let conn = pattern.neighbors(v).intersection_count(&placed);
                (conn, pattern.degree(v))
            })
            .unwrap();
        order.push(pick);
        placed.insert(pick);
    }
    order
}

fn candidates(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &[usize],
) -> Vec<usize> {
    let pv = order[depth];
    // Prefer iterating over neighbors of an already-mapped pattern neighbor.
    let anchor = order[..depth]
        .iter()
        .find(|&&u| pattern.has_edge(u, pv))
        .copied();
    let pool: Vec<usize> = match anchor {
        Some(u) => host.neighbors(map[u]).to_vec(),
        None => (0..host.n()).collect(),
    };
    pool.into_iter()
        .filter(|&c| {
            if host.degree(c) < pattern.degree(pv) {
                return false;
            }
            for &u in &order[..depth] {
                if map[u] == c {
                    return false;
                }
                if host.has_edge(c, map[u]) != pattern.has_edge(pv, u) {
                    return false;
                }
            }
            true
        })
        .collect()
}

fn embed_generic(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let order = search_order(pattern);
    let mut map = vec![usize::MAX; pattern.n()];
    if backtrack_first(host, pattern, &order, 0, &mut map) {
        Some(map)
    } else {
        None
    }
}

fn backtrack_first(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    for cand in candidates(host, pattern, order, depth, map) {
        map[pv] = cand;
        if backtrack_first(host, pattern, order, depth + 1, map) {
            return true;
        }
        map[pv] = usize::MAX;
    }
    map[pv] = usize::MAX;
    false
}

/// Induced path on `k` vertices in path order, if one exists.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 0 || k > g.n() {
        return None;
    }
    if k == 1 {
        return if g.n() > 0 { Some(vec![0]) } else { None };
    }
    fn extend(g: &Graph, path: &mut Vec<usize>, in_path: &mut Bits, k: usize) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().unwrap();
        for w in g.neighbors(last).to_vec() {
            if in_path.contains(w) {
                continue;
            }
            // w must be non-adjacent to all path vertices except `last`.
            if g.neighbors(w).intersection_count(in_path) > 1 {
                continue;
            }
            path.push(w);
            in_path.insert(w);
            if extend(g, path, in_path, k) {
                return true;
            }
            in_path.remove(w);
            path.pop();
        }
        false
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut in_path = Bits::from_iter(g.n(), [s]);
        if extend(g, &mut path, &mut in_path, k) {
            return Some(path);
        }
    }
    None
}

/// Chordless cycle with `min_len <= length <= max_len`, as a vertex sequence.
pub fn find_chordless_cycle(g: &Graph, min_len: usize, max_len: usize) -> Option<Vec<usize>> {
    debug_assert!(min_len >= 3);
    fn extend(
        g: &Graph,
        s: usize,
        path: &mut Vec<usize>,
        min_len: usize,
        max_len: usize,
    ) -> bool {
        let last = *path.last().unwrap();
        for w in g.neighbors(last).to_vec() {
            if w <= s || path.contains(&w) {
                continue;
            }
            // Chordless: w may touch the path only at `last`, and at `s` when
            // closing the cycle.
            let inner = &path[1..path.len() - 1];
            if inner.iter().any(|&p| g.has_edge(w, p)) {
                continue;
            }
            let closes = g.has_edge(w, s);
            if closes {
                if path.len() + 1 >= min_len {
                    path.push(w);
                    return true;
                }
                continue; // adjacent to s but cycle too short: unusable inside
            }
            if path.len() + 1 >= max_len {
                continue;
            }
            path.push(w);
            if extend(g, s, path, min_len, max_len) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in 0..g.n() {
        for v in g.neighbors(s).to_vec() {
            if v <= s {
                continue;
            }
            let mut path = vec![s, v];
            if extend(g, s, &mut path, min_len, max_len) {
                return Some(path);
            }
        }
    }
    None
}

/// Independent set of size `k`, if one exists.
pub fn find_independent_set(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, cands: &Bits, picked: &mut Vec<usize>, k: usize) -> bool {
        if picked.len() == k {
            return true;
        }
        if picked.len() + cands.count() < k {
            return false;
        }
        let v = match cands.first() {
            Some(v) => v,
            None => return false,
        };
        // Include v.
        let mut with = cands.clone();
        with.remove(v);
        with.subtract(g.neighbors(v));
        picked.push(v);
        if go(g, &with, picked, k) {
            return true;
        }
        picked.pop();
        // Exclude v.
        let mut without = cands.clone();
        without.remove(v);
        go(g, &without, picked, k)
    }
    let mut picked = Vec::new();
    if go(g, &Bits::full(g.n()), &mut picked, k) {
        Some(picked)
    } else {
        None
    }
}

/// Canonical key on isomorphism classes of graphs with at most 8 vertices:
/// the lexicographically minimal upper-triangle adjacency bit string over all
/// degree-respecting relabelings.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u64,
}

pub const CANONICAL_MAX_N: usize = 8;

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::SizeLimit(format!(
            "canonical form supports n <= {CANONICAL_MAX_N}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(CanonicalForm { n: 0, bits: 0 });
    }
    // Sort vertices by degree so we only need degree-respecting relabelings.
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let mut inv = vec![0; n];
    for (newv, &oldv) in by_degree.iter().enumerate() {
        inv[oldv] = newv;
    }
    let sorted = g.relabel(&inv);

    // Degree class boundaries in the sorted graph.
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for v in 1..=n {
        if v == n || sorted.degree(v) != sorted.degree(start) {
            classes.push((start, v));
            start = v;
        }
    }

    let edges = sorted.edges();
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_classes(&classes, 0, &mut perm, &mut |p| {
        let mut bits = 0u64;
        for &(u, v) in &edges {
            let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
            bits |= 1 << pair_index(a, b);
        }
        if bits < best {
            best = bits;
        }
    });
    Ok(CanonicalForm { n, bits: best })
}

fn permute_classes(
    classes: &[(usize, usize)],
    idx: usize,
    perm: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if idx == classes.len() {
        f(perm);
        return;
    }
    let (lo, hi) = classes[idx];
    let labels: Vec<usize> = (lo..hi).collect();
    for assignment in all_orderings(&labels) {
        for (i, &label) in assignment.iter().enumerate() {
            perm[lo + i] = label;
        }
        permute_classes(classes, idx + 1, perm, f);
    }
}

fn all_orderings(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in all_orderings(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::catalog;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n - 1));
        Graph::from_edges(n, &e)
    }

    /// Naive all-subsets oracle: tries every |V(H)|-subset of the host and
    /// every bijection onto it. Independent of the search-based path.
    fn naive_contains(host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.n();
        if k > host.n() {
            return false;
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for v in start..n {
                    cur.push(v);
                    go(v + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            go(0, n, k, &mut cur, &mut out);
            out
        }
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, k - 1);
                    out.push(q);
                }
            }
            out
        }
        for sub in subsets(host.n(), k) {
            for p in perms(k) {
                let ok = (0..k).all(|i| {
                    (i + 1..k).all(|j| {
                        host.has_edge(sub[p[i]], sub[p[j]]) == pattern.has_edge(i, j)
                    })
                });
                if ok {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn p4_in_p5() {
        let w = contains_induced(&path(5), &path(4)).expect("P4 in P5");
        let set: std::collections::HashSet<_> = w.iter().collect();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn c5_has_no_induced_2p2() {
        let two_p2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(contains_induced(&cycle(5), &two_p2).is_none());
        assert!(!naive_contains(&cycle(5), &two_p2));
    }

    #[test]
    fn net_has_no_induced_claw() {
        let net = catalog("net").unwrap();
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(contains_induced(&net, &claw).is_none());
        assert!(!naive_contains(&net, &claw));
    }

    #[test]
    fn agrees_with_naive_oracle_on_small_graphs() {
        // Cross-check the dispatching search against the all-subsets oracle
        // over a spread of host/pattern pairs.
        let hosts = vec![
            cycle(5),
            cycle(6),
            path(6),
            catalog("net").unwrap(),
            catalog("bull").unwrap(),
            catalog("gem").unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]),
        ];
        let patterns = vec![
            path(2),
            path(3),
            path(4),
            cycle(3),
            cycle(4),
            Graph::from_edges(4, &[(0, 1), (2, 3)]),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]),
            Graph::from_edges(3, &[]),
            catalog("diamond").unwrap(),
            catalog("paw").unwrap(),
        ];
        for h in &hosts {
            for p in &patterns {
                let fast = contains_induced(h, p);
                assert_eq!(
                    fast.is_some(),
                    naive_contains(h, p),
                    "host {:?} pattern {:?}",
                    h.edges(),
                    p.edges()
                );
                if let Some(map) = fast {
                    // Witness really induces the pattern.
                    for i in 0..p.n() {
                        for j in i + 1..p.n() {
                            assert_eq!(h.has_edge(map[i], map[j]), p.has_edge(i, j));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn isomorphism_basic() {
        assert!(is_isomorphic(&cycle(5), &cycle(5).relabel(&[2, 0, 4, 1, 3])));
        assert!(!is_isomorphic(&cycle(6), &path(6)));
    }

    #[test]
    fn canonical_form_separates_and_identifies() {
        let a = canonical_form(&cycle(5)).unwrap();
        let b = canonical_form(&cycle(5).relabel(&[3, 1, 4, 0, 2])).unwrap();
        let c = canonical_form(&path(5)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn chordless_cycle_search() {
        assert!(find_chordless_cycle(&cycle(6), 6, 12).is_some());
        assert!(find_chordless_cycle(&cycle(5), 6, 12).is_none());
        // C6 plus a long chord has no chordless cycle of length >= 6.
        let mut g = cycle(6);
        g.add_edge(0, 3);
        assert!(find_chordless_cycle(&g, 6, 12).is_none());
        assert!(find_chordless_cycle(&g, 4, 12).is_some());
    }

    #[test]
    fn independent_sets() {
        assert!(find_independent_set(&cycle(5), 2).is_some());
        assert!(find_independent_set(&cycle(5), 3).is_none());
        let e = Graph::new(4);
        assert_eq!(find_independent_set(&e, 4).unwrap().len(), 4);
    }
}
