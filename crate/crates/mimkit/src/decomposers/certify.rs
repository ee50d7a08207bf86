//! Exhaustive verification of the Ramsey cut-bound theorems: for a verified
//! class member, every subset X of V has cutmim(X, V \ X) strictly below the
//! theorem's bound.

use super::ramsey::ramsey_upper;
use crate::bits::Bits;
use crate::decomposition::cutmim_bounded;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::contains_induced;
use crate::named::{graph_from_name, km_i, km_k, km_p};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug)]
pub enum CutBoundSpec {
    /// (K_r ⊟ rP_1, 2P_2)-free, r >= 3: cutmim < max{6, r}.
    Thm41 { r: u32 },
    /// (K_r ⊟ P_1, tP_2)-free: cutmim < R(r, R(r, t)).
    Thm42 { r: u32, t: u32 },
    /// (K_r ⊟ K_r, sP_1 + P_2)-free: cutmim < R(R(r, s+1), s+1).
    Thm43 { r: u32, s: u32 },
}

impl CutBoundSpec {
    /// The strict bound: all cut values must be < this.
    pub fn bound(&self) -> u32 {
        match *self {
            CutBoundSpec::Thm41 { r } => r.max(6),
            CutBoundSpec::Thm42 { r, t } => ramsey_upper(r, ramsey_upper(r, t)),
            CutBoundSpec::Thm43 { r, s } => ramsey_upper(ramsey_upper(r, s + 1), s + 1),
        }
    }

    fn forbidden(&self) -> Result<Vec<(String, Graph)>> {
        Ok(match *self {
            CutBoundSpec::Thm41 { r } => {
                if r < 3 {
                    return Err(Error::Domain("Thm41 needs r >= 3".into()));
                }
                vec![
                    (format!("K{r}-m-{r}P1"), km_i(r as usize)),
                    ("2P2".into(), graph_from_name("2P2")?),
                ]
            }
            CutBoundSpec::Thm42 { r, t } => vec![
                (format!("K{r}-m-P1"), km_p(r as usize)),
                (format!("{t}P2"), graph_from_name(&format!("{t}P2"))?),
            ],
            CutBoundSpec::Thm43 { r, s } => vec![
                (format!("K{r}-m-K{r}"), km_k(r as usize)),
                (
                    format!("{s}P1+P2"),
                    if s == 0 {
                        graph_from_name("P2")?
                    } else {
                        graph_from_name(&format!("{s}P1+P2"))?
                    },
                ),
            ],
        })
    }
}

#[derive(Clone, Debug)]
pub struct CutBoundReport {
    /// Strict bound that every cut value must stay below.
    pub bound: u32,
    pub max_cutmim: u32,
    pub subsets_checked: u64,
    /// Subsets reaching the bound (implementation bugs, never accepted
    /// silently).
    pub violations: Vec<Vec<usize>>,
}

pub const CERTIFY_MAX_N: usize = 16;

/// Checks cutmim(G, X) < bound for every X ⊆ V by enumerating all 2^n
/// subsets (up to complement symmetry). The graph's membership in the
/// theorem's class is verified first.
pub fn certify_cut_bound(g: &Graph, spec: CutBoundSpec) -> Result<CutBoundReport> {
    let n = g.n();
    if n > CERTIFY_MAX_N {
        return Err(Error::SizeLimit(format!(
            "cut-bound certification enumerates 2^n subsets; n <= {CERTIFY_MAX_N}, got {n}"
        )));
    }
    for (name, h) in spec.forbidden()? {
        if let Some(w) = contains_induced(g, &h) {
            return Err(Error::ClassViolation {
                forbidden: name,
                witness: w,
            });
        }
    }
    let bound = spec.bound();
    // Vertex n-1 stays on the complement side: each unordered cut once.
    let total: u64 = if n == 0 { 1 } else { 1u64 << (n - 1) };
    let results: Vec<(u32, Option<Vec<usize>>)> = (0..total)
        .into_par_iter()
        .map(|mask| {
            let side = Bits::from_mask(n, mask);
            let v = cutmim_bounded(g, &side, bound);
            if v >= bound {
                (v, Some(side.to_vec()))
            } else {
                (v, None)
            }
        })
        .collect();
    let mut max_cutmim = 0;
    let mut violations = Vec::new();
    for (v, viol) in results {
        max_cutmim = max_cutmim.max(v);
        if let Some(x) = viol {
            violations.push(x);
        }
    }
    Ok(CutBoundReport {
        bound,
        max_cutmim,
        subsets_checked: total,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete_graph, graph_from_name};

    #[test]
    fn thm41_on_class_members() {
        // Complete graphs and stars are (net, 2P2)-free.
        for g in [
            complete_graph(8),
            graph_from_name("K1,5").unwrap(),
            graph_from_name("C5").unwrap(),
        ] {
            let rep = certify_cut_bound(&g, CutBoundSpec::Thm41 { r: 3 }).unwrap();
            assert!(rep.violations.is_empty());
            assert!(rep.max_cutmim <= 5);
        }
    }

    #[test]
    fn thm42_tiny_class() {
        // (K2 ⊟ P1, 2P2)-free = (P3, 2P2)-free: disjoint cliques with at
        // most one nontrivial clique. Bound R(2, R(2,2)) = 2, so every cut
        // value is at most 1.
        let g = graph_from_name("K4+3P1").unwrap();
        let rep = certify_cut_bound(&g, CutBoundSpec::Thm42 { r: 2, t: 2 }).unwrap();
        assert_eq!(rep.bound, 2);
        assert!(rep.violations.is_empty());
        assert!(rep.max_cutmim < 2);
    }

    #[test]
    fn empty_cut_is_zero() {
        let g = complete_graph(4);
        let rep = certify_cut_bound(&g, CutBoundSpec::Thm41 { r: 3 }).unwrap();
        assert!(rep.max_cutmim >= 1);
        assert_eq!(rep.subsets_checked, 8);
    }

    #[test]
    fn class_membership_enforced() {
        // C4 contains no net but K_... C4 is 2P2-free; use a graph with 2P2.
        let g = graph_from_name("2P2").unwrap();
        assert!(matches!(
            certify_cut_bound(&g, CutBoundSpec::Thm41 { r: 3 }),
            Err(Error::ClassViolation { .. })
        ));
    }

    #[test]
    fn size_cap() {
        let g = crate::graph::Graph::new(17);
        assert!(matches!(
            certify_cut_bound(&g, CutBoundSpec::Thm41 { r: 3 }),
            Err(Error::SizeLimit(_))
        ));
    }
}
