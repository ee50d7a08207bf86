//! The constructive decomposition algorithm for (2P2, K_{1,3})-free graphs.
//!
//! Per connected component: if the component has no induced net
//! (= K_3 ⊟ 3P_1) then any decomposition has width below max{6,3} = 6, so
//! the identity caterpillar is certified with bound 5. Otherwise a maximal
//! K_r ⊟ rP_1 is grown greedily from the net, the vertex set splits as
//! (A, B, B_0, B_1..B_r), and the caterpillar-of-caterpillars tree yields
//! width exactly 1.

use super::{spine_join, CertifiedDecomposition, ClaimedBound, Partial};
use crate::bits::Bits;
use crate::decomposition::arbitrary_decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::contains_induced;
use crate::named::{catalog, graph_from_name};

pub fn decompose_2p2_k13(g: &Graph) -> Result<CertifiedDecomposition> {
    let two_p2 = graph_from_name("2P2").expect("catalog");
    let claw = graph_from_name("K1,3").expect("catalog");
    if let Some(w) = contains_induced(g, &two_p2) {
        return Err(Error::ClassViolation {
            forbidden: "2P2".into(),
            witness: w,
        });
    }
    if let Some(w) = contains_induced(g, &claw) {
        return Err(Error::ClassViolation {
            forbidden: "K1,3".into(),
            witness: w,
        });
    }

    let net = catalog("net").unwrap();
    let mut fragments = Vec::new();
    let mut claimed = 0u32;
    for comp in g.connected_components() {
        let (sub, verts) = g.induced(&comp);
        let (partial, comp_bound) = match contains_induced(&sub, &net) {
            None => {
                // Net-free class member: every cut is below max{6,3} = 6.
                let d = arbitrary_decomposition(&sub);
                (
                    Partial::from_decomposition(&d, &verts),
                    ClaimedBound::MaxSixR { r: 3 }.numeric(),
                )
            }
            Some(map) => {
                let d = net_component_decomposition(&sub, &map)?;
                (Partial::from_decomposition(&d, &verts), 1)
            }
        };
        claimed = claimed.max(if sub.n() == 1 { 0 } else { comp_bound });
        fragments.push(partial);
    }
    let d = spine_join(fragments).finalize(g.n())?;
    CertifiedDecomposition::new(g, d, ClaimedBound::Width(claimed), "thm-2p2-k13")
}

/// Steps 2-4 for a connected component with an induced net: grow the net to
/// a maximal K_r ⊟ rP_1, partition, and build the width-1 tree.
fn net_component_decomposition(
    g: &Graph,
    net_map: &[usize],
) -> Result<crate::decomposition::BranchDecomposition> {
    // The catalog net has triangle 0,1,2 and pendants 3,4,5 with 3-0, 4-1,
    // 5-2, so the witness map splits directly into (A, B) with a_i b_i edges.
    let mut a: Vec<usize> = net_map[..3].to_vec();
    let mut b: Vec<usize> = net_map[3..].to_vec();

    // Greedy growth over the edges outside G[S], ascending order.
    let in_x = |a: &[usize], b: &[usize], v: usize| a.contains(&v) || b.contains(&v);
    for (u, v) in g.edges() {
        if in_x(&a, &b, u) && in_x(&a, &b, v) {
            continue;
        }
        for (cand_a, cand_b) in [(u, v), (v, u)] {
            let a_ok = a.iter().all(|&x| g.has_edge(cand_a, x))
                && b.iter().all(|&x| !g.has_edge(cand_a, x));
            let b_ok = a.iter().all(|&x| !g.has_edge(cand_b, x))
                && b.iter().all(|&x| !g.has_edge(cand_b, x));
            if a_ok && b_ok {
                a.push(cand_a);
                b.push(cand_b);
                break;
            }
        }
    }

    let r = a.len();
    let x_set = Bits::from_iter(g.n(), a.iter().chain(b.iter()).copied());
    // Partition the rest: every outside vertex sees exactly A, or A plus one
    // pendant (Lemma: N(v) ∩ X = A or A ∪ {b_i}).
    let mut b_classes: Vec<Vec<usize>> = vec![Vec::new(); r];
    let mut b0: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        if x_set.contains(v) {
            continue;
        }
        if !a.iter().all(|&x| g.has_edge(v, x)) {
            return Err(Error::Inconsistent(format!(
                "outside vertex {v} is not complete to the clique side"
            )));
        }
        let pendants: Vec<usize> = (0..r).filter(|&i| g.has_edge(v, b[i])).collect();
        match pendants.as_slice() {
            [] => b0.push(v),
            [i] => b_classes[*i].push(v),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "outside vertex {v} sees two pendants"
                )))
            }
        }
    }

    // The tree: spine p_1..p_r (plus p_{r+1} when B_0 is nonempty), with the
    // (|B_i|+2)-caterpillar for {a_i, b_i} u B_i hanging from p_i. Degree-2
    // nodes (spine ends, p_1) are contracted by the constructor.
    let mut tb = TreeBuilder::new(g.n());
    let spine: Vec<usize> = (0..r).map(|_| tb.node()).collect();
    for i in 0..r - 1 {
        tb.edge(spine[i], spine[i + 1]);
    }
    for i in 0..r {
        let mut occupants = vec![a[i], b[i]];
        occupants.extend(&b_classes[i]);
        let attach = tb.raw_caterpillar(&occupants);
        tb.edge(spine[i], attach);
    }
    if !b0.is_empty() {
        let p_extra = tb.node();
        tb.edge(spine[r - 1], p_extra);
        let attach = tb.raw_caterpillar(&b0);
        tb.edge(p_extra, attach);
    }
    tb.build()
}

/// Accumulates a raw decomposition tree; leaves carry graph vertices.
pub(crate) struct TreeBuilder {
    nodes: usize,
    edges: Vec<(usize, usize)>,
    leaf_of_vertex: Vec<usize>,
}

impl TreeBuilder {
    pub fn new(n: usize) -> TreeBuilder {
        TreeBuilder {
            nodes: 0,
            edges: Vec::new(),
            leaf_of_vertex: vec![usize::MAX; n],
        }
    }

    pub fn node(&mut self) -> usize {
        self.nodes += 1;
        self.nodes - 1
    }

    pub fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Raw l-caterpillar (2l nodes) whose leaves carry `occupants` in order;
    /// returns the spine end s_1 for attachment.
    pub fn raw_caterpillar(&mut self, occupants: &[usize]) -> usize {
        let l = occupants.len();
        debug_assert!(l >= 1);
        let spine: Vec<usize> = (0..l).map(|_| self.node()).collect();
        for i in 0..l - 1 {
            self.edge(spine[i], spine[i + 1]);
        }
        for (i, &v) in occupants.iter().enumerate() {
            let t = self.node();
            self.edge(spine[i], t);
            self.leaf_of_vertex[v] = t;
        }
        spine[0]
    }

    pub fn build(self) -> Result<crate::decomposition::BranchDecomposition> {
        crate::decomposition::BranchDecomposition::from_tree(
            self.nodes,
            self.edges,
            self.leaf_of_vertex,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::graph_from_name;
    use crate::oracle::exact_mimw_value;

    #[test]
    fn net_itself_gets_width_1() {
        let net = catalog("net").unwrap();
        let cert = decompose_2p2_k13(&net).unwrap();
        assert_eq!(cert.width, 1);
        assert_eq!(cert.claimed_bound.numeric(), 1);
    }

    #[test]
    fn c5_is_net_free_member() {
        let c5 = graph_from_name("C5").unwrap();
        let cert = decompose_2p2_k13(&c5).unwrap();
        assert!(cert.width <= 5);
        assert!(cert.width >= exact_mimw_value(&c5).unwrap());
    }

    #[test]
    fn paper_twelve_vertex_example() {
        // K_6 ⊟ 6P_1 (clique 0..5, pendants 6..11) plus x3 (12) adjacent to
        // the pendant 8 and complete to the clique, x4 (13) adjacent to the
        // pendant 9 and complete to the clique, and the edge x3 x4.
        let mut g = graph_from_name("KmI(6)").unwrap();
        let mut edges = g.edges();
        let x3 = 12;
        let x4 = 13;
        let mut h = Graph::new(14);
        edges.push((x3, x4));
        for u in 0..6 {
            edges.push((u, x3));
            edges.push((u, x4));
        }
        edges.push((8, x3));
        edges.push((9, x4));
        for (u, v) in edges {
            h.add_edge(u, v);
        }
        g = h;
        let cert = decompose_2p2_k13(&g).unwrap();
        assert_eq!(cert.width, 1);
    }

    #[test]
    fn class_violation_detected() {
        assert!(matches!(
            decompose_2p2_k13(&graph_from_name("2P2").unwrap()),
            Err(Error::ClassViolation { .. })
        ));
        assert!(matches!(
            decompose_2p2_k13(&graph_from_name("K1,3").unwrap()),
            Err(Error::ClassViolation { .. })
        ));
    }

    #[test]
    fn net_plus_isolated_vertices() {
        let g = graph_from_name("net+2P1").unwrap();
        let cert = decompose_2p2_k13(&g).unwrap();
        assert_eq!(cert.width, 1);
    }
}
