//! Multi-join composition: a partition whose parts pairwise cross with
//! induced-matching value at most c yields a decomposition of width at most
//! max{ c * floor((p/2)^2), max part width + c(p-1) }.

use super::{spine_join, CertifiedDecomposition, ClaimedBound, Partial};
use crate::bits::Bits;
use crate::decomposition::{cutmim_pair, mimw_of_decomposition, BranchDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `parts` must partition V(G) with p >= 2 nonempty classes; `part_decomps`
/// are decompositions of the induced part subgraphs (local vertex order =
/// ascending global ids). The pairwise premise cutmim(X_i, X_j) <= c is
/// verified, not assumed.
pub fn decompose_multijoin(
    g: &Graph,
    parts: &[Bits],
    part_decomps: &[BranchDecomposition],
    c: u32,
) -> Result<CertifiedDecomposition> {
    let p = parts.len();
    if p < 2 {
        return Err(Error::Precondition("multi-join needs p >= 2 parts".into()));
    }
    if part_decomps.len() != p {
        return Err(Error::Precondition(
            "one decomposition per part is required".into(),
        ));
    }
    let mut seen = Bits::new(g.n());
    for part in parts {
        if part.is_empty() {
            return Err(Error::Precondition("empty part".into()));
        }
        if !seen.is_disjoint(part) {
            return Err(Error::Precondition("parts overlap".into()));
        }
        seen.union_with(part);
    }
    if seen.count() != g.n() {
        return Err(Error::Precondition("parts do not cover V".into()));
    }
    for i in 0..p {
        for j in i + 1..p {
            let v = cutmim_pair(g, &parts[i], &parts[j], c + 1);
            if v > c {
                return Err(Error::Precondition(format!(
                    "cutmim between parts {i} and {j} is >= {v}, above c = {c}"
                )));
            }
        }
    }

    let mut fragments = Vec::with_capacity(p);
    let mut max_part = 0u32;
    for (part, d) in parts.iter().zip(part_decomps) {
        let (sub, verts) = g.induced(part);
        d.validate(sub.n())?;
        max_part = max_part.max(mimw_of_decomposition(&sub, d)?);
        fragments.push(Partial::from_decomposition(d, &verts));
    }
    let d = spine_join(fragments).finalize(g.n())?;
    CertifiedDecomposition::new(
        g,
        d,
        ClaimedBound::Multijoin {
            c,
            p: p as u32,
            max_part,
        },
        "lemma-multijoin",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::arbitrary_decomposition;
    use crate::named::graph_from_name;

    fn split_parts(g: &Graph, cutpoint: usize) -> (Vec<Bits>, Vec<BranchDecomposition>) {
        let a = Bits::from_iter(g.n(), 0..cutpoint);
        let b = a.complement();
        let decs = [&a, &b]
            .iter()
            .map(|s| {
                let (sub, _) = g.induced(s);
                arbitrary_decomposition(&sub)
            })
            .collect();
        (vec![a, b], decs)
    }

    #[test]
    fn two_edges_plus_cross_edge() {
        // G = 2P2 plus one cross edge; parts = the two edges, c = 1.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2)]);
        let (parts, decs) = split_parts(&g, 2);
        let cert = decompose_multijoin(&g, &parts, &decs, 1).unwrap();
        // bound = max{1 * 1, max_part + 1} = 2 (parts have width <= 1).
        assert!(cert.claimed_bound.numeric() <= 2);
        assert!(cert.width <= 2);
    }

    #[test]
    fn disconnected_parts_cost_nothing() {
        let g = graph_from_name("K3+K3").unwrap();
        let (parts, decs) = split_parts(&g, 3);
        let cert = decompose_multijoin(&g, &parts, &decs, 0).unwrap();
        assert_eq!(cert.width, 1);
        assert_eq!(cert.claimed_bound.numeric(), 1); // max part width + 0
    }

    #[test]
    fn premise_violation_reports_pair() {
        // C4 = 0-1-2-3-0 split into adjacent pairs {0,1} and {2,3}: the two
        // cross edges 1-2 and 0-3 form an induced matching of size 2.
        let g = graph_from_name("C4").unwrap();
        let parts = vec![Bits::from_iter(4, [0, 1]), Bits::from_iter(4, [2, 3])];
        let decs: Vec<_> = parts
            .iter()
            .map(|s| arbitrary_decomposition(&g.induced(s).0))
            .collect();
        match decompose_multijoin(&g, &parts, &decs, 1) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("parts 0 and 1")),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn bad_partitions_rejected() {
        let g = graph_from_name("P4").unwrap();
        let a = Bits::from_iter(4, [0, 1]);
        let decs = vec![
            arbitrary_decomposition(&g.induced(&a).0),
            arbitrary_decomposition(&g.induced(&a).0),
        ];
        assert!(decompose_multijoin(&g, &[a.clone(), a.clone()], &decs, 3).is_err());
    }
}
