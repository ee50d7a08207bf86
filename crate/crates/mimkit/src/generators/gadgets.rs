//! The chordal-bipartite gadget G' and its 3-partite variant G''.
//!
//! From a graph G on vertex set V, take copies X = {x_v} and Y = {y_v} and a
//! complete bipartite graph between them. For G', each edge uv adds two
//! paths x_u q_e t_e y_v and x_v q'_e t'_e y_u; for G'', each edge adds the
//! shorter paths x_u z_e y_v and x_v z'_e y_u.

use crate::graph::Graph;

#[derive(Clone, Debug)]
pub struct Gprime {
    pub graph: Graph,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub q: Vec<usize>,
    pub t: Vec<usize>,
}

pub fn construct_gprime(g: &Graph) -> Gprime {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let mut out = Graph::new(2 * n + 4 * m);
    let x: Vec<usize> = (0..n).collect();
    let y: Vec<usize> = (n..2 * n).collect();
    for &xu in &x {
        for &yv in &y {
            out.add_edge(xu, yv);
        }
    }
    let mut q = Vec::with_capacity(2 * m);
    let mut t = Vec::with_capacity(2 * m);
    for (k, &(u, v)) in edges.iter().enumerate() {
        let base = 2 * n + 4 * k;
        let (q_e, t_e, q2_e, t2_e) = (base, base + 1, base + 2, base + 3);
        out.add_edge(x[u], q_e);
        out.add_edge(q_e, t_e);
        out.add_edge(t_e, y[v]);
        out.add_edge(x[v], q2_e);
        out.add_edge(q2_e, t2_e);
        out.add_edge(t2_e, y[u]);
        q.push(q_e);
        q.push(q2_e);
        t.push(t_e);
        t.push(t2_e);
    }
    Gprime {
        graph: out,
        x,
        y,
        q,
        t,
    }
}

#[derive(Clone, Debug)]
pub struct Gdoubleprime {
    pub graph: Graph,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
}

pub fn construct_gdoubleprime(g: &Graph) -> Gdoubleprime {
    let n = g.n();
    let edges = g.edges();
    let m = edges.len();
    let mut out = Graph::new(2 * n + 2 * m);
    let x: Vec<usize> = (0..n).collect();
    let y: Vec<usize> = (n..2 * n).collect();
    for &xu in &x {
        for &yv in &y {
            out.add_edge(xu, yv);
        }
    }
    let mut z = Vec::with_capacity(2 * m);
    for (k, &(u, v)) in edges.iter().enumerate() {
        let z_e = 2 * n + 2 * k;
        let z2_e = z_e + 1;
        out.add_edge(x[u], z_e);
        out.add_edge(z_e, y[v]);
        out.add_edge(x[v], z2_e);
        out.add_edge(z2_e, y[u]);
        z.push(z_e);
        z.push(z2_e);
    }
    Gdoubleprime {
        graph: out,
        x,
        y,
        z,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::is_chordal_bipartite;
    use crate::named::graph_from_name;

    #[test]
    fn gprime_counts_for_single_edge() {
        let gp = construct_gprime(&graph_from_name("P2").unwrap());
        assert_eq!(gp.graph.n(), 8);
        assert_eq!(gp.graph.m(), 10); // 4 X-Y edges + 6 path edges
    }

    #[test]
    fn gprime_closed_form_counts() {
        for name in ["P3", "C4", "K3", "2P2", "C5"] {
            let g = graph_from_name(name).unwrap();
            let gp = construct_gprime(&g);
            assert_eq!(gp.graph.n(), 2 * g.n() + 4 * g.m(), "{name}");
            assert_eq!(gp.graph.m(), g.n() * g.n() + 6 * g.m(), "{name}");
        }
    }

    #[test]
    fn gprime_is_chordal_bipartite() {
        for name in ["P2", "P4", "C5", "K4", "2P2+P1"] {
            let gp = construct_gprime(&graph_from_name(name).unwrap());
            assert!(is_chordal_bipartite(&gp.graph), "{name}");
        }
    }

    #[test]
    fn gdoubleprime_counts_for_single_edge() {
        let gd = construct_gdoubleprime(&graph_from_name("P2").unwrap());
        assert_eq!(gd.graph.n(), 6);
        assert_eq!(gd.graph.m(), 8); // 4 X-Y edges + 4 path edges
    }

    #[test]
    fn gdoubleprime_is_3_partite() {
        let g = graph_from_name("C4").unwrap();
        let gd = construct_gdoubleprime(&g);
        for part in [&gd.x, &gd.y, &gd.z] {
            for (i, &u) in part.iter().enumerate() {
                for &v in &part[i + 1..] {
                    assert!(!gd.graph.has_edge(u, v));
                }
            }
        }
    }
}
