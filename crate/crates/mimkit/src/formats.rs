//! Text formats: EDGELIST v1, graph6, BDECOMP v1, and the key-value sidecar
//! metadata format.

use crate::decomposition::BranchDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// EDGELIST v1: line 1 is "n m", then m lines "u v" with 0-indexed
/// endpoints; output has u < v sorted lexicographically.
pub fn edgelist_to_string(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing EDGELIST header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(0, "bad vertex count"))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(0, "bad edge count"))?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno, "bad edge endpoint"))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(lineno, "bad edge endpoint"))?;
        if u == v {
            return Err(parse_err(lineno, "loop edge"));
        }
        if u >= n || v >= n {
            return Err(parse_err(lineno, "endpoint out of range"));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(lineno, "duplicate edge"));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(parse_err(0, format!("header says {m} edges, found {count}")));
    }
    Ok(g)
}

/// graph6, bit-exact per the published format specification. Supports
/// n <= 258047 (the one-byte and four-byte size encodings).
pub fn graph6_to_string(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258047 {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    } else {
        return Err(Error::SizeLimit(format!("graph6 writer supports n <= 258047, got {n}")));
    }
    // Upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                bytes.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        bytes.push(63 + acc);
    }
    Ok(String::from_utf8(bytes).expect("graph6 is ascii"))
}

pub fn graph_from_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty graph6 string"));
    }
    let (n, mut idx) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::SizeLimit("graph6 reader supports n <= 258047".into()));
        }
        if bytes.len() < 4 {
            return Err(parse_err(0, "truncated graph6 size"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(parse_err(0, "bad graph6 size byte"));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if !(63..=125).contains(&bytes[0]) {
            return Err(parse_err(0, "bad graph6 size byte"));
        }
        ((bytes[0] - 63) as usize, 1)
    };
    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() - idx != need {
        return Err(parse_err(
            idx,
            format!("graph6 body has {} bytes, expected {need}", bytes.len() - idx),
        ));
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    let mut cur = 0u8;
    let mut left = 0u8;
    for v in 1..n {
        for u in 0..v {
            if left == 0 {
                let b = bytes[idx];
                idx += 1;
                if !(63..=126).contains(&b) {
                    return Err(parse_err(idx - 1, "bad graph6 data byte"));
                }
                cur = b - 63;
                left = 6;
            }
            if cur >> (left - 1) & 1 == 1 {
                g.add_edge(u, v);
            }
            left -= 1;
            bit += 1;
        }
    }
    let _ = bit;
    Ok(g)
}

/// BDECOMP v1: line 1 is the tree node count t; then t-1 lines "a b" (tree
/// edges, a < b, sorted); then one line per graph vertex "map v node".
pub fn bdecomp_to_string(d: &BranchDecomposition) -> String {
    let mut out = format!("{}\n", d.node_count());
    let mut edges: Vec<(usize, usize)> = d
        .edges()
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort();
    for (a, b) in edges {
        out.push_str(&format!("{a} {b}\n"));
    }
    for (v, &node) in d.leaf_of_vertex().iter().enumerate() {
        out.push_str(&format!("map {v} {node}\n"));
    }
    out
}

pub fn bdecomp_from_str(text: &str) -> Result<BranchDecomposition> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing BDECOMP header"))?;
    let t: usize = header
        .trim()
        .parse()
        .map_err(|_| parse_err(0, "bad tree node count"))?;
    let mut edges = Vec::new();
    let mut map: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [a, b] => {
                let a: usize = a.parse().map_err(|_| parse_err(lineno, "bad tree edge"))?;
                let b: usize = b.parse().map_err(|_| parse_err(lineno, "bad tree edge"))?;
                edges.push((a, b));
            }
            ["map", v, node] => {
                let v: usize = v.parse().map_err(|_| parse_err(lineno, "bad map line"))?;
                let node: usize = node.parse().map_err(|_| parse_err(lineno, "bad map line"))?;
                map.push((v, node));
            }
            _ => return Err(parse_err(lineno, "unrecognized BDECOMP line")),
        }
    }
    if edges.len() + 1 != t {
        return Err(parse_err(0, "edge count does not match node count"));
    }
    map.sort();
    for (i, &(v, _)) in map.iter().enumerate() {
        if v != i {
            return Err(parse_err(0, "map lines must cover vertices 0..n"));
        }
    }
    let leaf_of_vertex: Vec<usize> = map.into_iter().map(|(_, node)| node).collect();
    BranchDecomposition::from_tree(t, edges, leaf_of_vertex)
}

/// Sidecar metadata: ordered key-value records, one per line, written as
/// "<key> <value>". Values may contain spaces; keys may repeat.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meta {
    pub records: Vec<(String, String)>,
}

impl Meta {
    pub fn push(&mut self, key: &str, value: impl std::fmt::Display) {
        self.records.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.records
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.records
            .iter()
            .filter(move |(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Per-vertex class indices from "class <v> <c>" records.
    pub fn class_map(&self, n: usize) -> Option<Vec<usize>> {
        let mut out = vec![usize::MAX; n];
        for v in self.all("class") {
            let mut it = v.split_whitespace();
            let vertex: usize = it.next()?.parse().ok()?;
            let class: usize = it.next()?.parse().ok()?;
            if vertex >= n {
                return None;
            }
            out[vertex] = class;
        }
        if out.contains(&usize::MAX) {
            return None;
        }
        Some(out)
    }

    pub fn to_string_form(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.records {
            out.push_str(&format!("{k} {v}\n"));
        }
        out
    }

    pub fn from_str_form(text: &str) -> Meta {
        let mut m = Meta::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line.split_once(' ') {
                Some((k, v)) => m.records.push((k.to_string(), v.trim().to_string())),
                None => m.records.push((line.to_string(), String::new())),
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::arbitrary_decomposition;

    #[test]
    fn edgelist_round_trip() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        let s = edgelist_to_string(&g);
        assert_eq!(s, "5 4\n0 2\n0 4\n1 3\n3 4\n");
        assert_eq!(graph_from_edgelist(&s).unwrap(), g);
    }

    #[test]
    fn edgelist_rejects_malformed() {
        assert!(graph_from_edgelist("2 1\n0 0\n").is_err());
        assert!(graph_from_edgelist("2 1\n0 5\n").is_err());
        assert!(graph_from_edgelist("2 2\n0 1\n").is_err());
        assert!(graph_from_edgelist("").is_err());
    }

    #[test]
    fn graph6_known_vector() {
        // 5 vertices, edges {0-2, 0-4, 1-3, 3-4} encodes as "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(graph6_to_string(&g).unwrap(), "DQc");
        assert_eq!(graph_from_graph6("DQc").unwrap(), g);
        assert_eq!(graph_from_graph6(">>graph6<<DQc").unwrap(), g);
    }

    #[test]
    fn graph6_small_cases() {
        let k1 = Graph::new(1);
        assert_eq!(graph6_to_string(&k1).unwrap(), "@");
        assert_eq!(graph_from_graph6("@").unwrap(), k1);
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let s = graph6_to_string(&k3).unwrap();
        assert_eq!(graph_from_graph6(&s).unwrap(), k3);
    }

    #[test]
    fn graph6_large_n_form() {
        let mut g = Graph::new(100);
        for i in 0..99 {
            g.add_edge(i, i + 1);
        }
        let s = graph6_to_string(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(graph_from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn bdecomp_round_trip() {
        let d = arbitrary_decomposition(&Graph::new(6));
        let s = bdecomp_to_string(&d);
        let d2 = bdecomp_from_str(&s).unwrap();
        assert_eq!(bdecomp_to_string(&d2), s);
    }

    #[test]
    fn meta_round_trip() {
        let mut m = Meta::default();
        m.push("generator", "wall");
        m.push("class", "0 1");
        m.push("class", "1 2");
        let s = m.to_string_form();
        let m2 = Meta::from_str_form(&s);
        assert_eq!(m, m2);
        assert_eq!(m2.class_map(2), Some(vec![1, 2]));
    }
}
