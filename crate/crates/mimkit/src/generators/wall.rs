//! Grids and elementary walls, with coordinate metadata and optional uniform
//! edge subdivision.
//!
//! The (h x r)-wall starts from the grid of height h and width 2r. In column
//! j (1-indexed) the vertical edges e_1..e_{h-1} (top to bottom) are kept at
//! odd positions when j is odd and at even positions when j is even; then all
//! degree-1 vertices are removed. Subdividing every edge k times yields the
//! subdivided (h x r)-wall; walls are bipartite and subcubic.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WallSpec {
    pub h: usize,
    pub r: usize,
    /// Uniform per-edge subdivision count; 0 is the elementary wall.
    pub subdivisions: usize,
}

impl WallSpec {
    pub fn elementary(h: usize, r: usize) -> WallSpec {
        WallSpec {
            h,
            r,
            subdivisions: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Wall {
    pub graph: Graph,
    pub spec: WallSpec,
    /// (row, col) of each original vertex; None for subdivision vertices.
    pub coord: Vec<Option<(usize, usize)>>,
    /// One record per original wall edge (u, v): the inner subdivision chain
    /// ordered from u to v (empty when elementary).
    pub chains: Vec<(usize, usize, Vec<usize>)>,
}

impl Wall {
    pub fn is_original(&self, v: usize) -> bool {
        self.coord[v].is_some()
    }
}

pub fn grid(h: usize, w: usize) -> Result<Graph> {
    if h < 1 || w < 1 {
        return Err(Error::Domain("grid needs h, w >= 1".into()));
    }
    let mut g = Graph::new(h * w);
    let id = |r: usize, c: usize| r * w + c;
    for r in 0..h {
        for c in 0..w {
            if c + 1 < w {
                g.add_edge(id(r, c), id(r, c + 1));
            }
            if r + 1 < h {
                g.add_edge(id(r, c), id(r + 1, c));
            }
        }
    }
    Ok(g)
}

pub fn wall(spec: WallSpec) -> Result<Wall> {
    let (h, r) = (spec.h, spec.r);
    if h < 2 || r < 2 {
        return Err(Error::Domain("wall needs h, r >= 2".into()));
    }
    let w = 2 * r;
    let id = |row: usize, col: usize| row * w + col;
    let mut g = Graph::new(h * w);
    for row in 0..h {
        for col in 0..w {
            if col + 1 < w {
                g.add_edge(id(row, col), id(row, col + 1));
            }
            // Vertical edge below (row, col) survives iff row ≡ col (mod 2)
            // (this is the odd/even deletion rule in 0-indexed form).
            if row + 1 < h && row % 2 == col % 2 {
                g.add_edge(id(row, col), id(row + 1, col));
            }
        }
    }
    // Remove degree-1 vertices (one pass suffices for elementary walls).
    let mut keep = g.vertex_set();
    for v in 0..g.n() {
        if g.degree(v) == 1 {
            keep.remove(v);
        }
    }
    let (core, old_ids) = g.induced(&keep);
    debug_assert!((0..core.n()).all(|v| core.degree(v) >= 2));

    let mut coord: Vec<Option<(usize, usize)>> = old_ids
        .iter()
        .map(|&ov| Some((ov / w, ov % w)))
        .collect();

    // Uniform subdivision, recording each chain.
    let k = spec.subdivisions;
    let edges = core.edges();
    let mut chains = Vec::with_capacity(edges.len());
    let graph = if k == 0 {
        for (u, v) in edges {
            chains.push((u, v, Vec::new()));
        }
        core
    } else {
        let mut out = Graph::new(core.n() + k * edges.len());
        let mut next = core.n();
        for (u, v) in edges {
            let mut inner = Vec::with_capacity(k);
            let mut prev = u;
            for _ in 0..k {
                out.add_edge(prev, next);
                inner.push(next);
                coord.push(None);
                prev = next;
                next += 1;
            }
            out.add_edge(prev, v);
            chains.push((u, v, inner));
        }
        out
    };

    Ok(Wall {
        graph,
        spec,
        coord,
        chains,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_vertex_count_formula() {
        // An (n x n)-wall has 2n^2 - 2 vertices.
        for n in 2..=8 {
            let w = wall(WallSpec::elementary(n, n)).unwrap();
            assert_eq!(w.graph.n(), 2 * n * n - 2, "n = {n}");
            assert!(w.graph.max_degree() <= 3);
            assert!(w.graph.is_bipartite());
            assert!(w.graph.is_connected());
        }
    }

    #[test]
    fn wall_4x4_shape() {
        let w = wall(WallSpec::elementary(4, 4)).unwrap();
        assert_eq!(w.graph.n(), 30);
        assert_eq!(w.graph.max_degree(), 3);
        // Degree-3 and degree-2 counts pin the boundary structure.
        let deg3 = (0..30).filter(|&v| w.graph.degree(v) == 3).count();
        assert_eq!(deg3, 16);
        assert_eq!(w.graph.m(), 38);
    }

    #[test]
    fn smallest_wall_is_c6() {
        let w = wall(WallSpec::elementary(2, 2)).unwrap();
        assert_eq!((w.graph.n(), w.graph.m()), (6, 6));
        assert!(w.graph.is_connected());
        assert!((0..6).all(|v| w.graph.degree(v) == 2));
    }

    #[test]
    fn subdivided_wall_chains() {
        let w = wall(WallSpec {
            h: 2,
            r: 2,
            subdivisions: 3,
        })
        .unwrap();
        assert_eq!(w.graph.n(), 6 + 3 * 6);
        assert_eq!(w.chains.len(), 6);
        for &(u, v, ref inner) in &w.chains {
            assert!(w.is_original(u) && w.is_original(v));
            assert_eq!(inner.len(), 3);
            // Chain really is a path from u to v.
            assert!(w.graph.has_edge(u, inner[0]));
            assert!(w.graph.has_edge(inner[2], v));
            assert!(w.graph.has_edge(inner[0], inner[1]));
        }
        assert!(w.graph.is_bipartite());
    }

    #[test]
    fn grid_and_domain_errors() {
        let g = grid(3, 4).unwrap();
        assert_eq!((g.n(), g.m()), (12, 17));
        assert!(wall(WallSpec::elementary(1, 4)).is_err());
        assert!(grid(0, 3).is_err());
    }
}
