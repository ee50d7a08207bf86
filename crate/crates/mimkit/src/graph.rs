//! Simple undirected graphs on vertex set `0..n`, adjacency stored as bit rows.

use crate::bits::Bits;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bits::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|b| b.count()).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        assert!(u < self.n && v < self.n, "endpoint out of range");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &Bits {
        &self.adj[v]
    }

    /// Edges as sorted (u, v) pairs with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self) -> Bits {
        Bits::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph G[S]; second component maps new indices to old vertices.
    pub fn induced(&self, s: &Bits) -> (Graph, Vec<usize>) {
        let verts = s.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(verts.len());
        for (i, &v) in verts.iter().enumerate() {
            for w in self.adj[v].intersection(s).iter() {
                if pos[w] > i {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        (g, verts)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::Domain(format!("vertex {v} not in graph")));
        }
        let mut keep = Bits::full(self.n);
        keep.remove(v);
        Ok(self.induced(&keep).0)
    }

    /// Applies a permutation: vertex v of self becomes perm[v] in the result.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn connected_components(&self) -> Vec<Bits> {
        let mut seen = Bits::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = Bits::new(self.n);
            let mut stack = vec![s];
            comp.insert(s);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Blocks: maximal 2-connected subgraphs and bridge edges, plus singleton
    /// blocks for isolated vertices so that every vertex lies in some block.
    pub fn blocks(&self) -> Vec<Bits> {
        struct State<'a> {
            g: &'a Graph,
            num: Vec<usize>,
            low: Vec<usize>,
            counter: usize,
            edge_stack: Vec<(usize, usize)>,
            blocks: Vec<Bits>,
        }
        fn dfs(st: &mut State, v: usize, parent: usize) {
            st.num[v] = st.counter;
            st.low[v] = st.counter;
            st.counter += 1;
            for w in st.g.adj[v].to_vec() {
                if w == parent {
                    continue;
                }
                if st.num[w] == usize::MAX {
                    st.edge_stack.push((v, w));
                    dfs(st, w, v);
                    st.low[v] = st.low[v].min(st.low[w]);
                    if st.low[w] >= st.num[v] {
                        let mut blk = Bits::new(st.g.n);
                        while let Some((a, b)) = st.edge_stack.pop() {
                            blk.insert(a);
                            blk.insert(b);
                            if (a, b) == (v, w) {
                                break;
                            }
                        }
                        st.blocks.push(blk);
                    }
                } else if st.num[w] < st.num[v] {
                    st.edge_stack.push((v, w));
                    st.low[v] = st.low[v].min(st.num[w]);
                }
            }
        }

        let mut st = State {
            g: self,
            num: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            counter: 0,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        for root in 0..self.n {
            if st.num[root] != usize::MAX {
                continue;
            }
            if self.degree(root) == 0 {
                st.num[root] = st.counter;
                st.counter += 1;
                st.blocks.push(Bits::from_iter(self.n, [root]));
                continue;
            }
            dfs(&mut st, root, usize::MAX);
        }
        st.blocks
    }

    /// 2-coloring when bipartite: side bitset, or None.
    pub fn bipartition(&self) -> Option<Bits> {
        let mut color = vec![u8::MAX; self.n];
        let mut side = Bits::new(self.n);
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            side.insert(s);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].iter() {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        if color[w] == 0 {
                            side.insert(w);
                        }
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.connected_components().len() == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn complement_involution() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let (h, verts) = g.induced(&Bits::from_iter(5, [0, 1, 3]));
        assert_eq!(verts, vec![0, 1, 3]);
        assert_eq!(h.m(), 1);
        assert!(h.has_edge(0, 1));
    }

    #[test]
    fn blocks_of_paw() {
        // Triangle 0-1-2 plus pendant 3 on 0.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        let mut blocks: Vec<Vec<usize>> = g.blocks().iter().map(|b| b.to_vec()).collect();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1, 2], vec![0, 3]]);
    }

    #[test]
    fn blocks_of_p3_and_c4() {
        let mut blocks: Vec<Vec<usize>> = path(3).blocks().iter().map(|b| b.to_vec()).collect();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1], vec![1, 2]]);

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let blocks = c4.blocks();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].count(), 4);
    }

    #[test]
    fn blocks_cover_edges_and_overlap_in_one_vertex() {
        // Two triangles sharing vertex 2, plus a bridge to 5 and an isolate 6.
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)],
        );
        let blocks = g.blocks();
        let mut covered = 0;
        for b in &blocks {
            let (sub, _) = g.induced(b);
            covered += sub.m();
        }
        assert_eq!(covered, g.m());
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                assert!(blocks[i].intersection_count(&blocks[j]) <= 1);
            }
        }
        assert!(blocks.iter().any(|b| b.count() == 1 && b.contains(6)));
    }

    #[test]
    fn bipartition_detects_odd_cycle() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert!(!c5.is_bipartite());
        assert!(path(6).is_bipartite());
    }
}
