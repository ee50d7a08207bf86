//! The constructive decomposition algorithm for (2P1+P2, bowtie)-free
//! graphs.
//!
//! Per connected component: without an induced K_5 ⊟ K_5, any decomposition
//! has width below R(R(5,3),3) = R(14,3), so the identity caterpillar is
//! certified against that bound. Otherwise a maximal K_r ⊟ K_r is grown,
//! everything else splits into A' (complete to A) and B' (complete to B),
//! and the linear order (A', a_1, b_1, ..., a_r, b_r, B') gives width
//! exactly 2.

use super::{spine_join, CertifiedDecomposition, ClaimedBound, Partial};
use crate::bits::Bits;
use crate::decomposition::{arbitrary_decomposition, linear_decomposition, BranchDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::contains_induced;
use crate::named::{catalog, graph_from_name};

pub fn decompose_2p1p2_bowtie(g: &Graph) -> Result<CertifiedDecomposition> {
    let pattern = graph_from_name("2P1+P2").expect("catalog");
    let bowtie = catalog("bowtie").unwrap();
    if let Some(w) = contains_induced(g, &pattern) {
        return Err(Error::ClassViolation {
            forbidden: "2P1+P2".into(),
            witness: w,
        });
    }
    if let Some(w) = contains_induced(g, &bowtie) {
        return Err(Error::ClassViolation {
            forbidden: "bowtie".into(),
            witness: w,
        });
    }

    let k5k5 = graph_from_name("KmK(5)").expect("catalog");
    let mut fragments = Vec::new();
    let mut claimed = 0u32;
    for comp in g.connected_components() {
        let (sub, verts) = g.induced(&comp);
        let (d, comp_bound) = match contains_induced(&sub, &k5k5) {
            None => (
                arbitrary_decomposition(&sub),
                ClaimedBound::RamseyRs { r: 5, s: 2 }.numeric(),
            ),
            Some(map) => (kmk_component_decomposition(&sub, &map)?, 2),
        };
        claimed = claimed.max(if sub.n() == 1 { 0 } else { comp_bound });
        fragments.push(Partial::from_decomposition(&d, &verts));
    }
    let d = spine_join(fragments).finalize(g.n())?;
    CertifiedDecomposition::new(g, d, ClaimedBound::Width(claimed), "thm-2p1p2-bowtie")
}

fn kmk_component_decomposition(g: &Graph, map: &[usize]) -> Result<BranchDecomposition> {
    // KmK(5) is laid out as clique 0..4, clique 5..9, matching i ~ 5+i.
    let mut a: Vec<usize> = map[..5].to_vec();
    let mut b: Vec<usize> = map[5..].to_vec();

    let in_x = |a: &[usize], b: &[usize], v: usize| a.contains(&v) || b.contains(&v);
    for (u, v) in g.edges() {
        if in_x(&a, &b, u) && in_x(&a, &b, v) {
            continue;
        }
        for (ca, cb) in [(u, v), (v, u)] {
            let a_ok = a.iter().all(|&x| g.has_edge(ca, x))
                && b.iter().all(|&x| !g.has_edge(ca, x));
            let b_ok = b.iter().all(|&x| g.has_edge(cb, x))
                && a.iter().all(|&x| !g.has_edge(cb, x));
            if a_ok && b_ok {
                a.push(ca);
                b.push(cb);
                break;
            }
        }
    }

    let r = a.len();
    let x_set = Bits::from_iter(g.n(), a.iter().chain(b.iter()).copied());
    let mut a_prime = Vec::new();
    let mut b_prime = Vec::new();
    for v in 0..g.n() {
        if x_set.contains(v) {
            continue;
        }
        let complete_a = a.iter().all(|&x| g.has_edge(v, x));
        let complete_b = b.iter().all(|&x| g.has_edge(v, x));
        let anti_a = a.iter().all(|&x| !g.has_edge(v, x));
        let anti_b = b.iter().all(|&x| !g.has_edge(v, x));
        match (complete_a && anti_b, complete_b && anti_a) {
            (true, false) => a_prime.push(v),
            (false, true) => b_prime.push(v),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "outside vertex {v} fits neither A' nor B'"
                )))
            }
        }
    }

    // Linear order (a'_1, ..., a_1, b_1, a_2, b_2, ..., a_r, b_r, b'_1, ...).
    let mut order = a_prime;
    for i in 0..r {
        order.push(a[i]);
        order.push(b[i]);
    }
    order.extend(b_prime);
    linear_decomposition(g, &order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::mimw_of_decomposition;
    use crate::named::graph_from_name;
    use crate::oracle::exact_mimw_value;

    #[test]
    fn kmk_widths_are_exactly_2() {
        for r in [5usize, 6, 7] {
            let g = graph_from_name(&format!("KmK({r})")).unwrap();
            let cert = decompose_2p1p2_bowtie(&g).unwrap();
            assert_eq!(cert.width, 2, "r = {r}");
            assert_eq!(
                mimw_of_decomposition(&g, &cert.decomposition).unwrap(),
                2
            );
        }
    }

    #[test]
    fn p4_member_small_width() {
        let p4 = graph_from_name("P4").unwrap();
        let cert = decompose_2p1p2_bowtie(&p4).unwrap();
        assert!(cert.width <= 2);
        assert!(cert.width >= exact_mimw_value(&p4).unwrap());
    }

    #[test]
    fn class_violations() {
        assert!(matches!(
            decompose_2p1p2_bowtie(&graph_from_name("2P1+P2").unwrap()),
            Err(Error::ClassViolation { .. })
        ));
        assert!(matches!(
            decompose_2p1p2_bowtie(&catalog("bowtie").unwrap()),
            Err(Error::ClassViolation { .. })
        ));
    }

    #[test]
    fn grown_kmk_with_attachments() {
        // K_6 ⊟ K_6 contains K_5 ⊟ K_5; the growth step must recover the
        // full matching and still achieve width 2.
        let g = graph_from_name("KmK(6)").unwrap();
        let cert = decompose_2p1p2_bowtie(&g).unwrap();
        assert_eq!(cert.width, 2);
    }
}
