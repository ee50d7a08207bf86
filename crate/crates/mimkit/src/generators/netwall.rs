//! Net-walls: a clique implant on every degree-3 vertex of a wall. Each
//! implanted triangle keeps track of which wall edge every corner faces,
//! which the colorings rely on.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::wall::{wall, Wall, WallSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NetVertex {
    /// Wall vertex of degree at most 2, kept as a single vertex.
    Plain { wall_vertex: usize },
    /// Corner of the triangle implanted on `wall_vertex`, facing the wall
    /// neighbor `toward`.
    Port { wall_vertex: usize, toward: usize },
}

#[derive(Clone, Debug)]
pub struct NetWall {
    pub graph: Graph,
    pub wall: Wall,
    pub provenance: Vec<NetVertex>,
    /// Net-wall vertex representing wall vertex `w` seen from neighbor `x`:
    /// `port_toward[w]` maps each wall neighbor to the port id (plain
    /// vertices map every neighbor to the same id).
    port: Vec<Vec<(usize, usize)>>,
}

impl NetWall {
    /// The net-wall vertex that wall vertex `w` presents to its wall
    /// neighbor `x`.
    pub fn port_toward(&self, w: usize, x: usize) -> usize {
        self.port[w]
            .iter()
            .find(|&&(t, _)| t == x)
            .map(|&(_, p)| p)
            .expect("x is a wall neighbor of w")
    }

    /// Triangle corners for a degree-3 wall vertex.
    pub fn triangle(&self, w: usize) -> Vec<usize> {
        self.port[w].iter().map(|&(_, p)| p).collect()
    }
}

pub fn net_wall(spec: WallSpec) -> Result<NetWall> {
    net_wall_of(wall(spec)?)
}

#[allow(clippy::needless_range_loop)] // wall-vertex ids are the indices
pub fn net_wall_of(wall: Wall) -> Result<NetWall> {
    let wg = &wall.graph;
    let mut provenance = Vec::new();
    let mut port: Vec<Vec<(usize, usize)>> = vec![Vec::new(); wg.n()];
    for w in 0..wg.n() {
        let nbrs = wg.neighbors(w).to_vec();
        if nbrs.len() == 3 {
            for &x in &nbrs {
                let id = provenance.len();
                provenance.push(NetVertex::Port {
                    wall_vertex: w,
                    toward: x,
                });
                port[w].push((x, id));
            }
        } else if nbrs.len() > 3 {
            return Err(Error::Precondition("wall is not subcubic".into()));
        } else {
            let id = provenance.len();
            provenance.push(NetVertex::Plain { wall_vertex: w });
            for &x in &nbrs {
                port[w].push((x, id));
            }
        }
    }
    let mut g = Graph::new(provenance.len());
    // Triangles.
    for w in 0..wg.n() {
        if port[w].len() == 3 {
            let t: Vec<usize> = port[w].iter().map(|&(_, p)| p).collect();
            g.add_edge(t[0], t[1]);
            g.add_edge(t[0], t[2]);
            g.add_edge(t[1], t[2]);
        }
    }
    // One edge per wall edge, between the facing ports.
    for (u, v) in wg.edges() {
        let pu = port[u].iter().find(|&&(t, _)| t == v).unwrap().1;
        let pv = port[v].iter().find(|&&(t, _)| t == u).unwrap().1;
        g.add_edge(pu, pv);
    }
    Ok(NetWall {
        graph: g,
        wall,
        provenance,
        port,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::contains_induced;
    use crate::named::graph_from_name;

    #[test]
    fn net_wall_4x4_structure() {
        let nw = net_wall(WallSpec::elementary(4, 4)).unwrap();
        // Vertex count: 3 per degree-3 wall vertex plus the plain vertices.
        let deg3 = (0..nw.wall.graph.n())
            .filter(|&v| nw.wall.graph.degree(v) == 3)
            .count();
        let plain = nw.wall.graph.n() - deg3;
        assert_eq!(nw.graph.n(), 3 * deg3 + plain);
        assert_eq!(nw.graph.n(), 3 * 16 + 14);
        // Subcubic: clique implant on a degree-3 vertex yields degree-3.
        assert!(nw.graph.max_degree() <= 3);
        assert!(nw.graph.is_connected());
    }

    #[test]
    fn net_wall_has_no_induced_c4() {
        let nw = net_wall(WallSpec::elementary(4, 4)).unwrap();
        let c4 = graph_from_name("C4").unwrap();
        assert!(contains_induced(&nw.graph, &c4).is_none());
    }

    #[test]
    fn every_triangle_vertex_in_exactly_one_triangle() {
        let nw = net_wall(WallSpec::elementary(3, 3)).unwrap();
        // Triangles in a net-wall are exactly the implants: count via edges.
        let g = &nw.graph;
        let mut triangle_count = vec![0usize; g.n()];
        for (u, v) in g.edges() {
            for w in g.neighbors(u).intersection(g.neighbors(v)).iter() {
                if w > v {
                    triangle_count[u] += 1;
                    triangle_count[v] += 1;
                    triangle_count[w] += 1;
                }
            }
        }
        for (v, &count) in triangle_count.iter().enumerate() {
            match nw.provenance[v] {
                NetVertex::Port { .. } => assert_eq!(count, 1),
                NetVertex::Plain { .. } => assert_eq!(count, 0),
            }
        }
    }

    #[test]
    fn subdivided_net_wall() {
        let nw = net_wall(WallSpec {
            h: 3,
            r: 3,
            subdivisions: 4,
        })
        .unwrap();
        assert!(nw.graph.max_degree() <= 3);
        assert!(nw.graph.is_connected());
    }
}
