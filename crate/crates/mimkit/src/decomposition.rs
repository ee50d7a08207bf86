//! Branch decompositions and cut induced-matching values.
//!
//! A branch decomposition is a subcubic tree with the graph's vertices mapped
//! bijectively onto its leaves. Every tree edge induces a vertex bipartition
//! (a cut); the width of the decomposition is the largest induced matching in
//! any cut's bipartite cut graph, and mim-width is the minimum width over all
//! decompositions.
//!
//! Trees are kept normalized: internal nodes have degree exactly 3.
//! Degree-2 internal nodes are contracted on construction, so the cut set is
//! canonical. Graphs on one or two vertices use a degenerate single-node or
//! single-edge tree.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    leaf_of_vertex: Vec<usize>,
}

/// A vertex bipartition (X, V \ X) of a graph.
#[derive(Clone, Debug)]
pub struct Cut {
    pub side_a: Bits,
    pub side_b: Bits,
}

impl Cut {
    pub fn new(n: usize, side_a: Bits) -> Cut {
        let side_b = side_a.complement();
        debug_assert_eq!(side_a.len(), n);
        Cut { side_a, side_b }
    }
}

impl BranchDecomposition {
    /// Builds from a raw tree, contracting internal degree-2 nodes.
    pub fn from_tree(
        node_count: usize,
        edges: Vec<(usize, usize)>,
        leaf_of_vertex: Vec<usize>,
    ) -> Result<BranchDecomposition> {
        let n = leaf_of_vertex.len();
        if node_count == 0 {
            return Err(Error::BadDecomposition("empty tree".into()));
        }
        if edges.len() + 1 != node_count {
            return Err(Error::BadDecomposition(format!(
                "{} edges on {} nodes is not a tree",
                edges.len(),
                node_count
            )));
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); node_count];
        for &(a, b) in &edges {
            if a >= node_count || b >= node_count || a == b {
                return Err(Error::BadDecomposition("bad tree edge".into()));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut is_leaf_slot = vec![false; node_count];
        for &l in &leaf_of_vertex {
            if l >= node_count {
                return Err(Error::BadDecomposition("leaf map out of range".into()));
            }
            if is_leaf_slot[l] {
                return Err(Error::BadDecomposition("leaf map is not injective".into()));
            }
            is_leaf_slot[l] = true;
        }

        // Contract unmapped degree-2 nodes until none remain.
        let mut alive = vec![true; node_count];
        let mut adjacency = adj;
        loop {
            let mut contracted = false;
            for v in 0..node_count {
                if alive[v] && !is_leaf_slot[v] && adjacency[v].len() == 2 {
                    let (a, b) = (adjacency[v][0], adjacency[v][1]);
                    adjacency[a].retain(|&x| x != v);
                    adjacency[b].retain(|&x| x != v);
                    adjacency[a].push(b);
                    adjacency[b].push(a);
                    alive[v] = false;
                    contracted = true;
                }
            }
            if !contracted {
                break;
            }
        }

        // Renumber surviving nodes and validate shape.
        let mut newid = vec![usize::MAX; node_count];
        let mut count = 0;
        for v in 0..node_count {
            if alive[v] {
                newid[v] = count;
                count += 1;
            }
        }
        let mut new_edges = Vec::new();
        for v in 0..node_count {
            if !alive[v] {
                continue;
            }
            for &w in &adjacency[v] {
                if w > v {
                    new_edges.push((newid[v], newid[w]));
                }
            }
        }
        let new_map: Vec<usize> = leaf_of_vertex.iter().map(|&l| newid[l]).collect();
        let d = BranchDecomposition {
            node_count: count,
            edges: new_edges,
            leaf_of_vertex: new_map,
        };
        d.validate(n)?;
        Ok(d)
    }

    /// Single-node decomposition for a one-vertex graph.
    pub fn single() -> BranchDecomposition {
        BranchDecomposition {
            node_count: 1,
            edges: vec![],
            leaf_of_vertex: vec![0],
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn leaf_of_vertex(&self) -> &[usize] {
        &self.leaf_of_vertex
    }

    pub fn num_vertices(&self) -> usize {
        self.leaf_of_vertex.len()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.node_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Checks the structural invariants against a graph on `n` vertices.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.leaf_of_vertex.len() != n {
            return Err(Error::BadDecomposition(format!(
                "decomposition maps {} vertices, graph has {n}",
                self.leaf_of_vertex.len()
            )));
        }
        if self.edges.len() + 1 != self.node_count {
            return Err(Error::BadDecomposition("not a tree".into()));
        }
        // Connectivity.
        if self.node_count > 0 {
            let mut seen = vec![false; self.node_count];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.node_count];
            for &(a, b) in &self.edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if seen.iter().any(|&s| !s) {
                return Err(Error::BadDecomposition("tree is disconnected".into()));
            }
        }
        let deg = self.degrees();
        let mut mapped = vec![false; self.node_count];
        for &l in &self.leaf_of_vertex {
            if mapped[l] {
                return Err(Error::BadDecomposition("leaf map is not injective".into()));
            }
            mapped[l] = true;
            if deg[l] > 1 {
                return Err(Error::BadDecomposition(format!(
                    "vertex mapped to internal node {l}"
                )));
            }
        }
        for v in 0..self.node_count {
            if !mapped[v] {
                if deg[v] <= 1 && self.node_count > 1 {
                    return Err(Error::BadDecomposition(format!("unmapped leaf node {v}")));
                }
                if deg[v] != 3 && self.node_count > 1 {
                    return Err(Error::BadDecomposition(format!(
                        "internal node {v} has degree {}",
                        deg[v]
                    )));
                }
            }
        }
        Ok(())
    }

    /// The vertex bipartitions induced by each tree edge. For graphs with at
    /// most one vertex there are no cuts.
    pub fn cuts(&self, n: usize) -> Vec<Cut> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.node_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut vertex_of_leaf = vec![usize::MAX; self.node_count];
        for (v, &l) in self.leaf_of_vertex.iter().enumerate() {
            vertex_of_leaf[l] = v;
        }
        let mut cuts = Vec::with_capacity(self.edges.len());
        for &(a, b) in &self.edges {
            // Collect graph vertices on the `a` side of edge (a, b).
            let mut side = Bits::new(n);
            let mut seen = vec![false; self.node_count];
            seen[a] = true;
            seen[b] = true; // block traversal across the removed edge
            let mut stack = vec![a];
            if vertex_of_leaf[a] != usize::MAX {
                side.insert(vertex_of_leaf[a]);
            }
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if (x, y) == (a, b) || (y, x) == (a, b) || seen[y] {
                        continue;
                    }
                    seen[y] = true;
                    if vertex_of_leaf[y] != usize::MAX {
                        side.insert(vertex_of_leaf[y]);
                    }
                    stack.push(y);
                }
            }
            cuts.push(Cut::new(n, side));
        }
        cuts
    }
}

/// Caterpillar decomposition whose leaf order matches `order`.
pub fn linear_decomposition(g: &Graph, order: &[usize]) -> Result<BranchDecomposition> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::Precondition(format!(
            "order has {} entries, graph has {n} vertices",
            order.len()
        )));
    }
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::Precondition("order is not a permutation".into()));
        }
        seen[v] = true;
    }
    Ok(caterpillar(order))
}

/// Caterpillar over the given leaf order; the order must be a permutation.
pub(crate) fn caterpillar(order: &[usize]) -> BranchDecomposition {
    let n = order.len();
    match n {
        0 => BranchDecomposition {
            node_count: 1,
            edges: vec![],
            leaf_of_vertex: vec![],
        },
        1 => BranchDecomposition {
            node_count: 1,
            edges: vec![],
            leaf_of_vertex: vec![0],
        },
        2 => {
            let mut leaf = vec![0; 2];
            leaf[order[0]] = 0;
            leaf[order[1]] = 1;
            BranchDecomposition {
                node_count: 2,
                edges: vec![(0, 1)],
                leaf_of_vertex: leaf,
            }
        }
        _ => {
            // Internal spine 0..n-2, leaves n-2..2n-2.
            let spine = n - 2;
            let mut edges = Vec::with_capacity(2 * n - 3);
            for i in 0..spine - 1 {
                edges.push((i, i + 1));
            }
            let leaf_node = |i: usize| spine + i;
            edges.push((leaf_node(0), 0));
            for i in 1..n - 1 {
                edges.push((leaf_node(i), i - 1));
            }
            edges.push((leaf_node(n - 1), spine - 1));
            let mut leaf = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                leaf[v] = leaf_node(i);
            }
            BranchDecomposition {
                node_count: 2 * n - 2,
                edges,
                leaf_of_vertex: leaf,
            }
        }
    }
}

/// A valid decomposition with no optimality claim: the identity-order
/// caterpillar.
pub fn arbitrary_decomposition(g: &Graph) -> BranchDecomposition {
    let order: Vec<usize> = (0..g.n()).collect();
    caterpillar(&order)
}

/// Exact maximum induced matching size of the bipartite cut graph
/// G[X, V \ X]. Only edges crossing the cut exist in that graph, so a
/// matching is induced iff no *cross* edge joins endpoints of two of its
/// edges.
pub fn cutmim(g: &Graph, side: &Bits) -> u32 {
    cutmim_bounded(g, side, u32::MAX)
}

/// As `cutmim`, but stops early and returns `stop_at` once a matching of
/// that size is found (the true value is then >= stop_at).
pub fn cutmim_bounded(g: &Graph, side: &Bits, stop_at: u32) -> u32 {
    cutmim_pair(g, side, &side.complement(), stop_at)
}

/// Maximum induced matching in G[A, B] for disjoint vertex sets A, B
/// (vertices outside A and B are ignored entirely).
pub fn cutmim_pair(g: &Graph, side_a: &Bits, side_b: &Bits, stop_at: u32) -> u32 {
    let cross = cross_edges_between(g, side_a, side_b);
    if cross.is_empty() || stop_at == 0 {
        return 0;
    }
    let k = cross.len();
    // Conflict rows: edges that cannot coexist with edge i in an induced
    // matching of the cut graph.
    let mut conflict: Vec<Bits> = vec![Bits::new(k); k];
    for i in 0..k {
        let (xi, yi) = cross[i];
        for j in i + 1..k {
            let (xj, yj) = cross[j];
            let clash = xi == xj
                || yi == yj
                || g.has_edge(xi, yj)
                || g.has_edge(xj, yi);
            if clash {
                conflict[i].insert(j);
                conflict[j].insert(i);
            }
        }
    }
    // Branch and bound: include/exclude the most-conflicted candidate first.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(conflict[i].count()));

    struct Search<'a> {
        conflict: &'a [Bits],
        order: &'a [usize],
        best: u32,
        stop_at: u32,
    }
    fn go(s: &mut Search, cands: &Bits, picked: u32) {
        if picked > s.best {
            s.best = picked;
        }
        if s.best >= s.stop_at || picked + cands.count() as u32 <= s.best {
            return;
        }
        let e = match s.order.iter().copied().find(|&e| cands.contains(e)) {
            Some(e) => e,
            None => return,
        };
        let mut with = cands.clone();
        with.remove(e);
        with.subtract(&s.conflict[e]);
        go(s, &with, picked + 1);
        if s.best >= s.stop_at {
            return;
        }
        let mut without = cands.clone();
        without.remove(e);
        go(s, &without, picked);
    }

    let mut s = Search {
        conflict: &conflict,
        order: &order,
        best: 0,
        stop_at,
    };
    go(&mut s, &Bits::full(k), 0);
    s.best.min(stop_at)
}

pub fn cross_edges(g: &Graph, side: &Bits) -> Vec<(usize, usize)> {
    cross_edges_between(g, side, &side.complement())
}

pub fn cross_edges_between(g: &Graph, side_a: &Bits, side_b: &Bits) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in side_a.iter() {
        for v in g.neighbors(u).intersection(side_b).iter() {
            out.push((u, v));
        }
    }
    out
}

/// Width of a decomposition: max cutmim over the partitions induced by every
/// tree edge.
pub fn mimw_of_decomposition(g: &Graph, d: &BranchDecomposition) -> Result<u32> {
    d.validate(g.n())?;
    Ok(d.cuts(g.n())
        .iter()
        .map(|c| cutmim(g, &c.side_a))
        .max()
        .unwrap_or(0))
}

/// The paper's six-vertex running example together with its drawn branch
/// decomposition (leaf groups {v6,v3}, {v2,v1}, {v4,v5}); vertices 0..5
/// stand for v1..v6.
pub fn figure2_graph() -> Graph {
    Graph::from_edges(
        6,
        &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (0, 5), (1, 4)],
    )
}

pub fn figure2_decomposition() -> BranchDecomposition {
    // Internal nodes 0,1,2,3 (3 = center); leaves 4..9 for v1..v6.
    let edges = vec![
        (0, 3),
        (1, 3),
        (2, 3),
        (9, 0), // v6
        (6, 0), // v3
        (5, 1), // v2
        (4, 1), // v1
        (7, 2), // v4
        (8, 2), // v5
    ];
    BranchDecomposition::from_tree(10, edges, vec![4, 5, 6, 7, 8, 9]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete_graph, graph_from_name};

    #[test]
    fn cutmim_symmetry_and_trivial_sides() {
        let g = figure2_graph();
        for mask in 0..64u64 {
            let side = Bits::from_mask(6, mask);
            assert_eq!(cutmim(&g, &side), cutmim(&g, &side.complement()));
        }
        assert_eq!(cutmim(&g, &Bits::new(6)), 0);
        assert_eq!(cutmim(&g, &Bits::full(6)), 0);
    }

    #[test]
    fn figure2_cut_value() {
        // The drawn cut {v4, v5} witnesses value 2.
        let g = figure2_graph();
        let side = Bits::from_iter(6, [3, 4]);
        assert_eq!(cutmim(&g, &side), 2);
    }

    #[test]
    fn c4_half_cut() {
        let c4 = graph_from_name("C4").unwrap();
        // a-b-c-d-a with X = {a, b}: cross edges bc and ad are disjoint and
        // no cross edge joins them.
        let side = Bits::from_iter(4, [0, 1]);
        assert_eq!(cutmim(&c4, &side), 2);
    }

    #[test]
    fn figure2_decomposition_width_is_2() {
        let g = figure2_graph();
        let d = figure2_decomposition();
        assert_eq!(mimw_of_decomposition(&g, &d).unwrap(), 2);
    }

    #[test]
    fn figure2_swapped_decomposition_width_is_1() {
        // Swapping v2 <-> v5 and v3 <-> v4 in the figure's decomposition
        // drops the width to 1, certifying mimw(G) = 1.
        let g = figure2_graph();
        let edges = figure2_decomposition().edges().to_vec();
        let mut leaf = figure2_decomposition().leaf_of_vertex().to_vec();
        leaf.swap(1, 4); // v2 <-> v5
        leaf.swap(2, 3); // v3 <-> v4
        let d = BranchDecomposition::from_tree(10, edges, leaf).unwrap();
        assert_eq!(mimw_of_decomposition(&g, &d).unwrap(), 1);
    }

    #[test]
    fn complete_graph_width_one() {
        // Every cut of a complete graph is complete bipartite.
        for n in 2..=8 {
            let g = complete_graph(n);
            let d = arbitrary_decomposition(&g);
            assert_eq!(mimw_of_decomposition(&g, &d).unwrap(), 1);
        }
    }

    #[test]
    fn caterpillar_shapes() {
        let g = Graph::new(6);
        let d = arbitrary_decomposition(&g);
        d.validate(6).unwrap();
        assert_eq!(d.node_count(), 10);
        // P4 in path order has width 1.
        let p4 = graph_from_name("P4").unwrap();
        let d = linear_decomposition(&p4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(mimw_of_decomposition(&p4, &d).unwrap(), 1);
    }

    #[test]
    fn degenerate_sizes() {
        let g1 = Graph::new(1);
        let d1 = arbitrary_decomposition(&g1);
        assert_eq!(mimw_of_decomposition(&g1, &d1).unwrap(), 0);
        let g2 = graph_from_name("P2").unwrap();
        let d2 = arbitrary_decomposition(&g2);
        assert_eq!(d2.node_count(), 2);
        assert_eq!(mimw_of_decomposition(&g2, &d2).unwrap(), 1);
    }

    #[test]
    fn degree2_nodes_are_contracted() {
        // A path-shaped raw tree around a 3-leaf star.
        let edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)];
        let d = BranchDecomposition::from_tree(6, edges, vec![0, 4, 5]).unwrap();
        assert_eq!(d.node_count(), 4);
        d.validate(3).unwrap();
    }

    #[test]
    fn invalid_decompositions_rejected() {
        // Not injective.
        assert!(BranchDecomposition::from_tree(2, vec![(0, 1)], vec![0, 0]).is_err());
        // Not a tree.
        assert!(BranchDecomposition::from_tree(3, vec![(0, 1)], vec![0, 1, 2]).is_err());
        let d = arbitrary_decomposition(&Graph::new(4));
        assert!(d.validate(5).is_err());
    }

    #[test]
    fn linear_decomposition_rejects_non_permutation() {
        let g = Graph::new(3);
        assert!(linear_decomposition(&g, &[0, 1, 1]).is_err());
        assert!(linear_decomposition(&g, &[0, 1]).is_err());
    }
}
