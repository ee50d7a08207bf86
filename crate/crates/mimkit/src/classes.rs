//! Hereditary graph class predicates used by the classifier and the witness
//! generators.

use crate::graph::Graph;
use crate::iso::find_chordless_cycle;

/// Class S: every connected component is a path or a subdivided claw.
pub fn in_class_s(g: &Graph) -> bool {
    g.connected_components().iter().all(|comp| {
        let (sub, _) = g.induced(comp);
        is_path_graph(&sub) || subdivided_claw_legs(&sub).is_some()
    })
}

/// Class N: some connected component contains a cycle of length at least 4,
/// or at least two (not necessarily vertex-disjoint) triangles.
///
/// Block structure decides this: a 2-connected block on >= 4 vertices always
/// contains a cycle of length >= 4; otherwise all cycles are triangle blocks,
/// which share at most a cut vertex.
pub fn in_class_n(g: &Graph) -> bool {
    let comps = g.connected_components();
    let mut comp_of = vec![usize::MAX; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for v in c.iter() {
            comp_of[v] = i;
        }
    }
    let mut triangle_blocks = vec![0usize; comps.len()];
    for b in g.blocks() {
        let count = b.count();
        let rep = b.first().unwrap();
        if count >= 4 {
            return true;
        }
        if count == 3 {
            triangle_blocks[comp_of[rep]] += 1;
            if triangle_blocks[comp_of[rep]] >= 2 {
                return true;
            }
        }
    }
    false
}

pub fn is_cobipartite(g: &Graph) -> bool {
    g.complement().is_bipartite()
}

/// Split graphs via the Hammer-Simeone degree condition.
pub fn is_split(g: &Graph) -> bool {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let m = (0..n).take_while(|&i| deg[i] >= i).count();
    let lhs: usize = deg[..m].iter().sum();
    let rhs: usize = m * (m - 1) + deg[m..].iter().sum::<usize>();
    lhs == rhs
}

/// A split partition (clique, independent set), when the graph is split.
pub fn split_partition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if !is_split(g) {
        return None;
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // Greedy: the m highest-degree vertices form a clique in a split graph.
    let m = (0..g.n())
        .take_while(|&i| g.degree(order[i]) >= i)
        .count();
    let clique: Vec<usize> = order[..m].to_vec();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            if !g.has_edge(u, v) {
                return None;
            }
        }
    }
    let indep: Vec<usize> = order[m..].to_vec();
    for (i, &u) in indep.iter().enumerate() {
        for &v in &indep[i + 1..] {
            if g.has_edge(u, v) {
                return None;
            }
        }
    }
    Some((clique, indep))
}

/// Chordal bipartite: bipartite and every induced cycle has four vertices.
/// Enumerates chordless cycles; intended for desk-scale graphs.
pub fn is_chordal_bipartite(g: &Graph) -> bool {
    g.is_bipartite() && find_chordless_cycle(g, 6, g.n().max(6)).is_none()
}

pub fn is_linear_forest(g: &Graph) -> bool {
    g.is_forest() && g.max_degree() <= 2
}

pub fn is_path_graph(g: &Graph) -> bool {
    g.is_connected() && is_linear_forest(g)
}

/// Leg lengths (h <= i <= j) when the graph is a subdivided claw.
pub fn subdivided_claw_legs(g: &Graph) -> Option<(usize, usize, usize)> {
    if !g.is_connected() || !g.is_forest() || g.max_degree() != 3 {
        return None;
    }
    let centers: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 3).collect();
    if centers.len() != 1 {
        return None;
    }
    let center = centers[0];
    let mut legs = Vec::new();
    for mut cur in g.neighbors(center).to_vec() {
        let mut prev = center;
        let mut len = 1;
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).iter().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            len += 1;
        }
        if g.degree(cur) != 1 {
            return None;
        }
        legs.push(len);
    }
    legs.sort_unstable();
    Some((legs[0], legs[1], legs[2]))
}

/// (s, t) when the graph is a complete bipartite graph K_{s,t}, s <= t.
pub fn complete_bipartite_shape(g: &Graph) -> Option<(usize, usize)> {
    if !g.is_connected() || g.n() < 2 {
        return None;
    }
    let side = g.bipartition()?;
    let a = side.count();
    let b = g.n() - a;
    if g.m() != a * b {
        return None;
    }
    Some((a.min(b), a.max(b)))
}
