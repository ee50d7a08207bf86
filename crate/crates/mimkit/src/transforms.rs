//! Mim-width-(quasi-)preserving graph rewrites.
//!
//! Each transform returns the rewritten graph together with a [`WidthEffect`]
//! recording the bracket on the mim-width change. The brackets are metadata,
//! never enforcement: transforms stay O(n + m) and composable, and the lab
//! suites check the brackets against the exact oracle.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bound on one side of the mim-width change under a rewrite, relating
/// new = mimw(G') to old = mimw(G).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// new >= old + k (lower) or new <= old + k (upper).
    Add(i32),
    /// new >= old / k (only used as a lower bound).
    DivideBy(u32),
}

/// Bracket on the width change: `lower <= mimw(G') - mimw(G)` in the additive
/// case, with the multiplicative variant for partition cliquification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WidthEffect {
    pub lower: Bound,
    pub upper: Bound,
}

/// Vertex deletion: mimw(G) - 1 <= mimw(G - v) <= mimw(G).
pub fn delete_vertex(g: &Graph, v: usize) -> Result<(Graph, WidthEffect)> {
    let out = g.delete_vertex(v)?;
    Ok((
        out,
        WidthEffect {
            lower: Bound::Add(-1),
            upper: Bound::Add(0),
        },
    ))
}

/// k-subdivision of an edge: the edge is replaced by a path of length k + 1.
/// For k = 1, mimw(G) <= mimw(G') <= mimw(G) + 1.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize, k: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::Domain(format!("edge ({u}, {v}) not in graph")));
    }
    if k < 1 {
        return Err(Error::Domain("subdivision count must be >= 1".into()));
    }
    let n = g.n();
    let mut out = Graph::new(n + k);
    for (a, b) in g.edges() {
        if (a, b) != (u.min(v), u.max(v)) {
            out.add_edge(a, b);
        }
    }
    let mut prev = u;
    for i in 0..k {
        out.add_edge(prev, n + i);
        prev = n + i;
    }
    out.add_edge(prev, v);
    Ok(out)
}

pub fn subdivide_all_edges(g: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::Domain("subdivision count must be >= 1".into()));
    }
    let edges = g.edges();
    let mut out = Graph::new(g.n() + k * edges.len());
    let mut next = g.n();
    for (u, v) in edges {
        let mut prev = u;
        for _ in 0..k {
            out.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        out.add_edge(prev, v);
    }
    Ok(out)
}

/// Clique implant on v: delete v, add a clique v_1..v_d, and a pendant edge
/// v_i u_i to each former neighbor (ascending neighbor order). The new
/// vertices take v's slot and the tail of the index range, so the mapping is
/// deterministic. mimw(G) <= mimw(G') <= mimw(G) + d(v).
#[allow(clippy::needless_range_loop)] // clique slots are tail indices
pub fn clique_implant(g: &Graph, v: usize) -> Result<(Graph, WidthEffect)> {
    if v >= g.n() {
        return Err(Error::Domain(format!("vertex {v} not in graph")));
    }
    let nbrs = g.neighbors(v).to_vec();
    let d = nbrs.len();
    let n = g.n();
    // Vertices keep their ids except v; clique vertices are v, n-1+1..n-1+d-1
    // after deleting v: simplest is to re-map explicitly.
    // Old vertex w (w != v) -> w if w < v else w - 1; clique vertex i -> n - 1 + i.
    let old_id = |w: usize| if w < v { w } else { w - 1 };
    let mut out = Graph::new(n - 1 + d);
    for (a, b) in g.edges() {
        if a != v && b != v {
            out.add_edge(old_id(a), old_id(b));
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            out.add_edge(n - 1 + i, n - 1 + j);
        }
        out.add_edge(n - 1 + i, old_id(nbrs[i]));
    }
    Ok((
        out,
        WidthEffect {
            lower: Bound::Add(0),
            upper: Bound::Add(d as i32),
        },
    ))
}

/// Adds all edges inside S: mimw(G') <= mimw(G) + 1.
pub fn make_clique(g: &Graph, s: &Bits) -> (Graph, WidthEffect) {
    let mut out = g.clone();
    let verts = s.to_vec();
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !out.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    (
        out,
        WidthEffect {
            lower: Bound::Add(i32::MIN), // the lemma gives no lower bound
            upper: Bound::Add(1),
        },
    )
}

/// Turns each class of a partition of V(G) into a clique. When the classes
/// are independent sets (G is k-partite with these classes), the source width
/// obeys mimw(G') >= mimw(G) / k.
pub fn cliqueify_partition(g: &Graph, classes: &[Bits]) -> Result<(Graph, WidthEffect)> {
    let mut seen = Bits::new(g.n());
    let mut total = 0;
    for c in classes {
        if !seen.is_disjoint(c) {
            return Err(Error::Precondition("classes overlap".into()));
        }
        seen.union_with(c);
        total += c.count();
    }
    if total != g.n() {
        return Err(Error::Precondition("classes do not cover V".into()));
    }
    let mut out = g.clone();
    for c in classes {
        out = make_clique(&out, c).0;
    }
    Ok((
        out,
        WidthEffect {
            lower: Bound::DivideBy(classes.len() as u32),
            upper: Bound::Add(i32::MAX),
        },
    ))
}
