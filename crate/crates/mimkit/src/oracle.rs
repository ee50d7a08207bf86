//! Exact mim-width oracle for small graphs.
//!
//! Enumerates branch-decomposition shapes by incremental leaf insertion
//! (vertex k+1 goes into any of the 2k-3 tree edges), with branch and bound:
//! cut values only grow as later vertices land on one side or the other, so a
//! partial tree is pruned as soon as any already-present cut reaches the best
//! width found. Cut values are memoized per (number of placed vertices, side
//! mask).
//!
//! The shape count is (2n-5)!!, which is why the oracle refuses graphs with
//! more than [`ORACLE_HARD_CAP`] vertices. `MIMKIT_ORACLE_CAP` can lower
//! (never raise) that limit.
//!
//! Graphs on at most two vertices have mim-width 0 by convention: their
//! degenerate trees are not considered to carry a nontrivial cut. Note that
//! `mimw_of_decomposition` on the two-leaf tree of K2 still reports the cut
//! value 1.

use crate::bits::Bits;
use crate::decomposition::{arbitrary_decomposition, cutmim_pair, mimw_of_decomposition, BranchDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

pub const ORACLE_HARD_CAP: usize = 11;

/// Effective oracle size limit: `min(11, $MIMKIT_ORACLE_CAP)`.
pub fn oracle_cap() -> usize {
    match std::env::var("MIMKIT_ORACLE_CAP") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) => v.min(ORACLE_HARD_CAP),
            Err(_) => ORACLE_HARD_CAP,
        },
        Err(_) => ORACLE_HARD_CAP,
    }
}

#[derive(Clone, Debug)]
pub enum MimwOutcome {
    Exact {
        value: u32,
        witness: BranchDecomposition,
    },
    /// The search was capped: mim-width is at least this value.
    AtLeast(u32),
}

impl MimwOutcome {
    pub fn value(&self) -> u32 {
        match self {
            MimwOutcome::Exact { value, .. } => *value,
            MimwOutcome::AtLeast(v) => *v,
        }
    }
}

/// Exact mim-width (with an optimal witness decomposition), computed by
/// exhaustive branch-and-bound over all decomposition shapes.
pub fn exact_mimw(g: &Graph, cap: Option<u32>) -> Result<MimwOutcome> {
    let n = g.n();
    let limit = oracle_cap();
    if n > limit {
        return Err(Error::SizeLimit(format!(
            "exact mim-width oracle supports n <= {limit}, got {n} \
             ((2n-5)!! decomposition shapes)"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("empty graph".into()));
    }
    if n <= 2 {
        return Ok(MimwOutcome::Exact {
            value: 0,
            witness: arbitrary_decomposition(g),
        });
    }

    let start = arbitrary_decomposition(g);
    let start_width = mimw_of_decomposition(g, &start).expect("caterpillar is valid");
    let hard_stop = cap.unwrap_or(u32::MAX);
    let (mut best, mut witness) = if start_width < hard_stop {
        (start_width, Some(start))
    } else {
        (hard_stop, None)
    };
    if best == 0 {
        // Only possible with cap 0 or an edgeless graph.
        return Ok(match witness {
            Some(w) => MimwOutcome::Exact {
                value: 0,
                witness: w,
            },
            None => MimwOutcome::AtLeast(0),
        });
    }

    let mut search = Search {
        g,
        n,
        best,
        best_arena: None,
        memo: vec![HashMap::new(); n + 1],
        nodes: Vec::with_capacity(2 * n),
        vertex_leaf: vec![usize::MAX; n],
    };
    // Initial tree on vertices 0,1,2: root leaf (v0) - center - leaves v1,v2.
    search.nodes.push(Node {
        parent: usize::MAX,
        mask: 0,
    });
    search.nodes.push(Node { parent: 0, mask: 0b110 });
    search.nodes.push(Node { parent: 1, mask: 0b010 });
    search.nodes.push(Node { parent: 1, mask: 0b100 });
    search.vertex_leaf[0] = 0;
    search.vertex_leaf[1] = 2;
    search.vertex_leaf[2] = 3;

    if search.all_cuts_below_best(3) {
        search.insert_next(3);
    }
    best = search.best;
    if let Some((nodes, vertex_leaf)) = search.best_arena {
        let edges: Vec<(usize, usize)> = nodes
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, nd)| (i, nd.parent))
            .collect();
        witness = Some(BranchDecomposition::from_tree(nodes.len(), edges, vertex_leaf)?);
    }

    if best >= hard_stop {
        return Ok(MimwOutcome::AtLeast(hard_stop));
    }
    match witness {
        Some(w) => Ok(MimwOutcome::Exact {
            value: best,
            witness: w,
        }),
        None => Err(Error::Inconsistent(
            "oracle finished below cap without a witness".into(),
        )),
    }
}

/// Convenience wrapper returning just the value (no cap).
pub fn exact_mimw_value(g: &Graph) -> Result<u32> {
    match exact_mimw(g, None)? {
        MimwOutcome::Exact { value, .. } => Ok(value),
        MimwOutcome::AtLeast(_) => unreachable!("no cap was given"),
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    parent: usize,
    mask: u16,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: u32,
    best_arena: Option<(Vec<Node>, Vec<usize>)>,
    memo: Vec<HashMap<u16, u32>>,
    nodes: Vec<Node>,
    vertex_leaf: Vec<usize>,
}

impl Search<'_> {
    /// Cut value of `mask` against the other placed vertices, memoized.
    fn cut_value(&mut self, placed: usize, mask: u16) -> u32 {
        if let Some(&v) = self.memo[placed].get(&mask) {
            return v;
        }
        let placed_mask = if placed == 16 { u16::MAX } else { (1u16 << placed) - 1 };
        let side_a = Bits::from_mask(self.n, mask as u64);
        let side_b = Bits::from_mask(self.n, (placed_mask & !mask) as u64);
        let v = cutmim_pair(self.g, &side_a, &side_b, u32::MAX);
        self.memo[placed].insert(mask, v);
        v
    }

    fn all_cuts_below_best(&mut self, placed: usize) -> bool {
        for i in 1..self.nodes.len() {
            let mask = self.nodes[i].mask;
            if self.cut_value(placed, mask) >= self.best {
                return false;
            }
        }
        true
    }

    fn insert_next(&mut self, v: usize) {
        if v == self.n {
            let mut width = 0;
            for i in 1..self.nodes.len() {
                let mask = self.nodes[i].mask;
                width = width.max(self.cut_value(self.n, mask));
            }
            if width < self.best {
                self.best = width;
                self.best_arena = Some((self.nodes.clone(), self.vertex_leaf.clone()));
            }
            return;
        }
        let bit = 1u16 << v;
        let edge_count = self.nodes.len();
        for x in 1..edge_count {
            // Insert v's leaf into the edge between x and its parent.
            let old_parent = self.nodes[x].parent;
            let m = self.nodes.len();
            self.nodes.push(Node {
                parent: old_parent,
                mask: self.nodes[x].mask | bit,
            });
            self.nodes[x].parent = m;
            let leaf = self.nodes.len();
            self.nodes.push(Node {
                parent: m,
                mask: bit,
            });
            self.vertex_leaf[v] = leaf;
            // v joins the subtree masks of every ancestor of m.
            let mut a = old_parent;
            while a != usize::MAX {
                self.nodes[a].mask |= bit;
                a = self.nodes[a].parent;
            }

            if self.all_cuts_below_best(v + 1) {
                self.insert_next(v + 1);
            }

            // Undo.
            let mut a = old_parent;
            while a != usize::MAX {
                self.nodes[a].mask &= !bit;
                a = self.nodes[a].parent;
            }
            self.vertex_leaf[v] = usize::MAX;
            self.nodes.truncate(m);
            self.nodes[x].parent = old_parent;
        }
    }
}
