//! The named-graph catalog and its expression grammar.
//!
//! Grammar (case-insensitive, whitespace ignored):
//!
//! ```text
//! expr := term ("+" term)*
//! term := [integer] atom
//! atom := "P"int | "C"int | "K"int | "K"int","int | "S"int","int","int
//!       | "sun("int")" | "KmK("int")" | "KmI("int")" | "KmP("int")"
//!       | "co(" expr ")" | name
//! name ∈ { diamond, paw, bull, gem, hammer, bowtie, net }
//! ```
//!
//! `KmK(r)` is two r-cliques joined by a perfect matching, `KmI(r)` the same
//! with one clique's internal edges removed, and `KmP(r)` an r-clique with a
//! single pendant vertex.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CatalogGraph {
    Diamond,
    Paw,
    Bull,
    Gem,
    Hammer,
    Bowtie,
    Net,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NamedGraphExpr {
    Path(u32),
    Cycle(u32),
    Complete(u32),
    CompleteBipartite(u32, u32),
    Star(u32),
    SubdividedClaw(u32, u32, u32),
    Sun(u32),
    KmK(u32),
    KmI(u32),
    KmP(u32),
    Const(CatalogGraph),
    Sum(Box<NamedGraphExpr>, Box<NamedGraphExpr>),
    Mult(u32, Box<NamedGraphExpr>),
    Co(Box<NamedGraphExpr>),
}

impl std::fmt::Display for NamedGraphExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use NamedGraphExpr::*;
        match self {
            Path(k) => write!(f, "P{k}"),
            Cycle(k) => write!(f, "C{k}"),
            Complete(k) => write!(f, "K{k}"),
            CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Star(s) => write!(f, "K1,{s}"),
            SubdividedClaw(h, i, j) => write!(f, "S{h},{i},{j}"),
            Sun(t) => write!(f, "sun({t})"),
            KmK(r) => write!(f, "KmK({r})"),
            KmI(r) => write!(f, "KmI({r})"),
            KmP(r) => write!(f, "KmP({r})"),
            Const(c) => write!(
                f,
                "{}",
                match c {
                    CatalogGraph::Diamond => "diamond",
                    CatalogGraph::Paw => "paw",
                    CatalogGraph::Bull => "bull",
                    CatalogGraph::Gem => "gem",
                    CatalogGraph::Hammer => "hammer",
                    CatalogGraph::Bowtie => "bowtie",
                    CatalogGraph::Net => "net",
                }
            ),
            Sum(a, b) => write!(f, "{a}+{b}"),
            Mult(k, a) => write!(f, "{k}{a}"),
            Co(a) => write!(f, "co({a})"),
        }
    }
}

pub fn catalog(name: &str) -> Option<Graph> {
    let g = match name.to_ascii_lowercase().as_str() {
        "diamond" => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        "paw" => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]),
        "bull" => Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
        "gem" => Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        ),
        "hammer" => Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]),
        "bowtie" => Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
        "net" => Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
        _ => return None,
    };
    Some(g)
}

fn catalog_expr(name: &str) -> Option<CatalogGraph> {
    Some(match name {
        "diamond" => CatalogGraph::Diamond,
        "paw" => CatalogGraph::Paw,
        "bull" => CatalogGraph::Bull,
        "gem" => CatalogGraph::Gem,
        "hammer" => CatalogGraph::Hammer,
        "bowtie" => CatalogGraph::Bowtie,
        "net" => CatalogGraph::Net,
        _ => return None,
    })
}

pub fn path_graph(k: usize) -> Graph {
    let edges: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(k, &edges)
}

pub fn cycle_graph(k: usize) -> Graph {
    let mut edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, k - 1));
    Graph::from_edges(k, &edges)
}

pub fn complete_graph(k: usize) -> Graph {
    let mut g = Graph::new(k);
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

pub fn subdivided_claw(h: usize, i: usize, j: usize) -> Graph {
    let mut g = Graph::new(1 + h + i + j);
    let mut next = 1;
    for len in [h, i, j] {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    g
}

pub fn sun_graph(t: usize) -> Graph {
    let mut g = Graph::new(2 * t);
    for u in 0..t {
        for v in u + 1..t {
            g.add_edge(u, v);
        }
    }
    for i in 0..t {
        g.add_edge(t + i, i);
        g.add_edge(t + i, (i + 1) % t);
    }
    g
}

/// Two r-cliques joined by a perfect matching (vertex i matched to r+i).
pub fn km_k(r: usize) -> Graph {
    let mut g = Graph::new(2 * r);
    for u in 0..r {
        for v in u + 1..r {
            g.add_edge(u, v);
            g.add_edge(r + u, r + v);
        }
    }
    for i in 0..r {
        g.add_edge(i, r + i);
    }
    g
}

/// r-clique with a pendant vertex on each clique vertex.
pub fn km_i(r: usize) -> Graph {
    let mut g = Graph::new(2 * r);
    for u in 0..r {
        for v in u + 1..r {
            g.add_edge(u, v);
        }
    }
    for i in 0..r {
        g.add_edge(i, r + i);
    }
    g
}

/// r-clique with one pendant vertex.
pub fn km_p(r: usize) -> Graph {
    let mut g = Graph::new(r + 1);
    for u in 0..r {
        for v in u + 1..r {
            g.add_edge(u, v);
        }
    }
    g.add_edge(0, r);
    g
}

pub fn realize(expr: &NamedGraphExpr) -> Result<Graph> {
    use NamedGraphExpr::*;
    let dom = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(msg.to_string()))
        }
    };
    Ok(match expr {
        Path(k) => {
            dom(*k >= 1, "path needs k >= 1")?;
            path_graph(*k as usize)
        }
        Cycle(k) => {
            dom(*k >= 3, "cycle needs k >= 3")?;
            cycle_graph(*k as usize)
        }
        Complete(k) => {
            dom(*k >= 1, "complete graph needs k >= 1")?;
            complete_graph(*k as usize)
        }
        CompleteBipartite(a, b) => {
            dom(*a >= 1 && *b >= 1, "K_{a,b} needs a,b >= 1")?;
            complete_bipartite(*a as usize, *b as usize)
        }
        Star(s) => {
            dom(*s >= 1, "star needs s >= 1")?;
            complete_bipartite(1, *s as usize)
        }
        SubdividedClaw(h, i, j) => {
            dom(
                *h >= 1 && h <= i && i <= j,
                "subdivided claw needs 1 <= h <= i <= j",
            )?;
            subdivided_claw(*h as usize, *i as usize, *j as usize)
        }
        Sun(t) => {
            dom(*t >= 3, "sun(t) needs t >= 3")?;
            sun_graph(*t as usize)
        }
        KmK(r) => {
            dom(*r >= 1, "KmK(r) needs r >= 1")?;
            km_k(*r as usize)
        }
        KmI(r) => {
            dom(*r >= 1, "KmI(r) needs r >= 1")?;
            km_i(*r as usize)
        }
        KmP(r) => {
            dom(*r >= 1, "KmP(r) needs r >= 1")?;
            km_p(*r as usize)
        }
        Const(c) => catalog(match c {
            CatalogGraph::Diamond => "diamond",
            CatalogGraph::Paw => "paw",
            CatalogGraph::Bull => "bull",
            CatalogGraph::Gem => "gem",
            CatalogGraph::Hammer => "hammer",
            CatalogGraph::Bowtie => "bowtie",
            CatalogGraph::Net => "net",
        })
        .unwrap(),
        Sum(a, b) => realize(a)?.disjoint_union(&realize(b)?),
        Mult(k, a) => {
            dom(*k >= 1, "multiplicity needs k >= 1")?;
            let base = realize(a)?;
            let mut g = base.clone();
            for _ in 1..*k {
                g = g.disjoint_union(&base);
            }
            g
        }
        Co(a) => realize(a)?.complement(),
    })
}

struct Parser {
    // (lowercased char, original byte position)
    chars: Vec<(char, usize)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (c.to_ascii_lowercase(), i))
            .collect();
        Parser { chars, pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        let pos = self
            .chars
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or_else(|| self.chars.last().map(|&(_, p)| p + 1).unwrap_or(0));
        Error::Parse {
            pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(c, _)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn starts_with(&self, kw: &str) -> bool {
        kw.chars()
            .enumerate()
            .all(|(i, c)| self.chars.get(self.pos + i).map(|&(x, _)| x) == Some(c))
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.starts_with(kw) {
            self.pos += kw.chars().count();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(c, _)| c).collect();
        s.parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn expr(&mut self) -> Result<NamedGraphExpr> {
        let mut acc = self.term()?;
        while self.eat('+') {
            let rhs = self.term()?;
            acc = NamedGraphExpr::Sum(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NamedGraphExpr> {
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let k = self.integer()?;
            if k == 0 {
                return Err(self.err("multiplicity must be >= 1"));
            }
            let atom = self.atom()?;
            return Ok(if k == 1 {
                atom
            } else {
                NamedGraphExpr::Mult(k, Box::new(atom))
            });
        }
        self.atom()
    }

    fn paren_int(&mut self) -> Result<u32> {
        let k = self.integer()?;
        self.expect(')')?;
        Ok(k)
    }

    fn atom(&mut self) -> Result<NamedGraphExpr> {
        use NamedGraphExpr::*;
        for name in ["diamond", "paw", "bull", "gem", "hammer", "bowtie", "net"] {
            if self.eat_keyword(name) {
                return Ok(Const(catalog_expr(name).unwrap()));
            }
        }
        if self.eat_keyword("sun(") {
            return Ok(Sun(self.paren_int()?));
        }
        if self.eat_keyword("kmk(") {
            return Ok(KmK(self.paren_int()?));
        }
        if self.eat_keyword("kmi(") {
            return Ok(KmI(self.paren_int()?));
        }
        if self.eat_keyword("kmp(") {
            return Ok(KmP(self.paren_int()?));
        }
        if self.eat_keyword("co(") {
            let inner = self.expr()?;
            self.expect(')')?;
            return Ok(Co(Box::new(inner)));
        }
        match self.peek() {
            Some('p') => {
                self.pos += 1;
                Ok(Path(self.integer()?))
            }
            Some('c') => {
                self.pos += 1;
                Ok(Cycle(self.integer()?))
            }
            Some('k') => {
                self.pos += 1;
                let a = self.integer()?;
                if self.eat(',') {
                    let b = self.integer()?;
                    Ok(CompleteBipartite(a, b))
                } else {
                    Ok(Complete(a))
                }
            }
            Some('s') => {
                self.pos += 1;
                let h = self.integer()?;
                self.expect(',')?;
                let i = self.integer()?;
                self.expect(',')?;
                let j = self.integer()?;
                Ok(SubdividedClaw(h, i, j))
            }
            _ => Err(self.err("expected an atom")),
        }
    }
}

pub fn parse_name(text: &str) -> Result<NamedGraphExpr> {
    let mut p = Parser::new(text);
    if p.chars.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty expression".to_string(),
        });
    }
    let e = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    // Validate parameter domains eagerly so errors surface at parse time.
    realize(&e)?;
    Ok(e)
}

/// Parses and realizes in one step.
pub fn graph_from_name(text: &str) -> Result<Graph> {
    realize(&parse_name(text)?)
}
