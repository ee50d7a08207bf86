//! Constructive, certified branch-decomposition algorithms.
//!
//! Every emitted [`CertifiedDecomposition`] is checked on construction: its
//! actual width (via `mimw_of_decomposition`) must not exceed the numeric
//! value of the claimed bound.

pub mod alg_2p1p2_bowtie;
pub mod alg_2p2_k13;
pub mod blocks;
pub mod certify;
pub mod multijoin;
pub mod ramsey;

pub use alg_2p1p2_bowtie::decompose_2p1p2_bowtie;
pub use alg_2p2_k13::decompose_2p2_k13;
pub use blocks::decompose_blocks;
pub use certify::{certify_cut_bound, CutBoundReport, CutBoundSpec};
pub use multijoin::decompose_multijoin;
pub use ramsey::ramsey_upper;

use crate::decomposition::{mimw_of_decomposition, BranchDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashMap;

/// Symbolic width bound attached to a certified decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimedBound {
    /// Plain numeric bound (inclusive).
    Width(u32),
    /// Strict bound max{6, r} from the (K_r ⊟ rP_1, 2P_2)-free cut theorem.
    MaxSixR { r: u32 },
    /// Strict bound R(r, R(r, t)) from the (K_r ⊟ P_1, tP_2)-free theorem.
    RamseyRt { r: u32, t: u32 },
    /// Strict bound R(R(r, s+1), s+1) from the (K_r ⊟ K_r, sP_1+P_2)-free
    /// theorem.
    RamseyRs { r: u32, s: u32 },
    /// Multi-join composition bound.
    Multijoin { c: u32, p: u32, max_part: u32 },
}

impl ClaimedBound {
    /// Inclusive numeric bound (strict theorem bounds become value - 1).
    pub fn numeric(&self) -> u32 {
        match *self {
            ClaimedBound::Width(w) => w,
            ClaimedBound::MaxSixR { r } => r.max(6) - 1,
            ClaimedBound::RamseyRt { r, t } => ramsey_upper(r, ramsey_upper(r, t)) - 1,
            ClaimedBound::RamseyRs { r, s } => {
                ramsey_upper(ramsey_upper(r, s + 1), s + 1) - 1
            }
            ClaimedBound::Multijoin { c, p, max_part } => {
                (c * (p * p / 4)).max(max_part + c * (p - 1))
            }
        }
    }
}

impl std::fmt::Display for ClaimedBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            ClaimedBound::Width(w) => write!(f, "{w}"),
            ClaimedBound::MaxSixR { r } => write!(f, "max{{6,{r}}}-1"),
            ClaimedBound::RamseyRt { r, t } => {
                write!(f, "R({r},R({r},{t}))-1=R({r},{})-1", ramsey_upper(r, t))
            }
            ClaimedBound::RamseyRs { r, s } => {
                write!(
                    f,
                    "R(R({r},{}),{})-1=R({},{})-1",
                    s + 1,
                    s + 1,
                    ramsey_upper(r, s + 1),
                    s + 1
                )
            }
            ClaimedBound::Multijoin { c, p, max_part } => {
                write!(f, "max{{{c}*floor(({p}/2)^2),{max_part}+{c}*({p}-1)}}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CertifiedDecomposition {
    pub decomposition: BranchDecomposition,
    pub claimed_bound: ClaimedBound,
    pub provenance: String,
    /// Actual width of `decomposition`, computed on emission.
    pub width: u32,
}

impl CertifiedDecomposition {
    pub fn new(
        g: &Graph,
        decomposition: BranchDecomposition,
        claimed_bound: ClaimedBound,
        provenance: impl Into<String>,
    ) -> Result<CertifiedDecomposition> {
        let width = mimw_of_decomposition(g, &decomposition)?;
        if width > claimed_bound.numeric() {
            return Err(Error::Inconsistent(format!(
                "decomposition has width {width}, above the claimed bound {claimed_bound} = {}",
                claimed_bound.numeric()
            )));
        }
        Ok(CertifiedDecomposition {
            decomposition,
            claimed_bound,
            provenance: provenance.into(),
            width,
        })
    }
}

/// Decomposition fragment over a subset of the graph's vertices, used while
/// composing block/part/component trees.
#[derive(Clone, Debug, Default)]
pub(crate) struct Partial {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
    pub leaf_of: HashMap<usize, usize>,
}

impl Partial {
    /// Lifts a decomposition of an induced subgraph to global vertex ids.
    pub fn from_decomposition(d: &BranchDecomposition, verts: &[usize]) -> Partial {
        let mut leaf_of = HashMap::new();
        for (local, &node) in d.leaf_of_vertex().iter().enumerate() {
            leaf_of.insert(verts[local], node);
        }
        Partial {
            nodes: d.node_count(),
            edges: d.edges().to_vec(),
            leaf_of,
        }
    }

    /// The Lemma 3.5 join: identify the two leaves mapped to the shared cut
    /// vertex `v`, then hang a fresh leaf for `v` off the identified node.
    pub fn leaf_merge_join(&mut self, other: &Partial, v: usize) {
        let j = self.leaf_of[&v];
        let ov = other.leaf_of[&v];
        let offset = self.nodes;
        // `other`'s node x becomes x + offset, except ov which merges into j.
        let remap = |x: usize| if x == ov { j } else { x + offset };
        for &(a, b) in &other.edges {
            self.edges.push((remap(a), remap(b)));
        }
        for (&w, &node) in &other.leaf_of {
            if w != v {
                self.leaf_of.insert(w, remap(node));
            }
        }
        self.nodes += other.nodes; // ov's slot is reused as the new leaf t
        let t = offset + ov;
        self.edges.push((j, t));
        self.leaf_of.insert(v, t);
    }

    pub fn finalize(self, n: usize) -> Result<BranchDecomposition> {
        let mut leaf_of_vertex = vec![usize::MAX; n];
        for (v, node) in self.leaf_of {
            if v >= n {
                return Err(Error::Inconsistent("partial maps unknown vertex".into()));
            }
            leaf_of_vertex[v] = node;
        }
        if leaf_of_vertex.contains(&usize::MAX) {
            return Err(Error::Inconsistent("partial does not cover V".into()));
        }
        BranchDecomposition::from_tree(self.nodes, self.edges, leaf_of_vertex)
    }
}

/// Joins fragments along a central spine; cuts between fragments cost
/// whatever crosses between their vertex sets (0 for distinct components).
pub(crate) fn spine_join(parts: Vec<Partial>) -> Partial {
    let mut parts = parts;
    if parts.len() == 1 {
        return parts.pop().unwrap();
    }
    let mut nodes = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut leaf_of: HashMap<usize, usize> = HashMap::new();
    let mut attach: Vec<usize> = Vec::new();
    for p in &parts {
        let offset = nodes;
        for &(a, b) in &p.edges {
            edges.push((a + offset, b + offset));
        }
        for (&v, &node) in &p.leaf_of {
            leaf_of.insert(v, node + offset);
        }
        nodes += p.nodes;
        if p.edges.is_empty() {
            // Single-node fragment: attach its node directly.
            attach.push(offset);
        } else {
            // Subdivide the fragment's first edge with a fresh node.
            let (a, b) = (p.edges[0].0 + offset, p.edges[0].1 + offset);
            let m = nodes;
            nodes += 1;
            let pos = edges.iter().position(|&e| e == (a, b)).unwrap();
            edges.swap_remove(pos);
            edges.push((a, m));
            edges.push((m, b));
            attach.push(m);
        }
    }
    // Spine nodes, one per fragment.
    let spine_base = nodes;
    nodes += parts.len();
    for (i, &a) in attach.iter().enumerate() {
        edges.push((spine_base + i, a));
        if i + 1 < parts.len() {
            edges.push((spine_base + i, spine_base + i + 1));
        }
    }
    Partial {
        nodes,
        edges,
        leaf_of,
    }
}
