//! Finite simple graphs on at most 64 vertices.
//!
//! Vertex subsets are `u64` bit masks; vertex `v` is bit `1 << v`. Every
//! constructor fixes a canonical numbering so that complexes derived from
//! the same expression are identical across runs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Maximum number of vertices a graph (or complex) may carry.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, one bit per vertex index.
pub type VertexSet = u64;

/// Iterate the vertex indices of a mask in increasing order.
pub fn vertices_of(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Mask containing the vertices `0..n`.
pub fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Degree bound for forest complexes: a finite `d` or unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegreeBound {
    Finite(u32),
    Infinite,
}

impl DegreeBound {
    pub fn admits(self, degree: u32) -> bool {
        match self {
            DegreeBound::Finite(d) => degree <= d,
            DegreeBound::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            DegreeBound::Finite(d) => Some(d),
            DegreeBound::Infinite => None,
        }
    }
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeBound::Finite(d) => write!(f, "{d}"),
            DegreeBound::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for DegreeBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "inf" | "infinity" | "∞" => Ok(DegreeBound::Infinite),
            _ => s
                .parse::<u32>()
                .map(DegreeBound::Finite)
                .map_err(|_| Error::Parse(format!("invalid degree bound `{s}`"))),
        }
    }
}

impl Serialize for DegreeBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DegreeBound::Finite(d) => serializer.serialize_u32(*d),
            DegreeBound::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DegreeBound {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(d) => Ok(DegreeBound::Finite(d)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A finite simple graph: symmetric, irreflexive adjacency on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_VERTICES {
            return Err(Error::Capacity { requested: order, limit: MAX_VERTICES });
        }
        Ok(Graph { adj: vec![0; order], labels: None })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!("edge ({u},{v}) out of range for order {n}")));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for a graph of order {}",
                labels.len(),
                self.order()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Path `P_n`, numbered along the walk.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `C_n` for `n >= 3`, numbered along the walk.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle C{n} needs at least 3 vertices")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::complete_multipartite(&vec![1; n])
    }

    /// Complete multipartite graph, numbered block by block.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let order: usize = parts.iter().sum();
        let mut g = Graph::empty(order)?;
        let mut block = Vec::with_capacity(order);
        for (i, &p) in parts.iter().enumerate() {
            block.extend(std::iter::repeat_n(i, p));
        }
        for u in 0..order {
            for v in u + 1..order {
                if block[u] != block[v] {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Star `K_{1,n}`: vertex 0 is the center.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
        Graph::from_edges(n + 1, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v] | 1 << v
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|a| a.count_ones()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in vertices_of(self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Induced subgraph on `set`, relabelled `0..|set|` in increasing order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Graph {
        let keep: Vec<usize> = vertices_of(set & self.vertex_set()).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| vertices_of(self.adj[v] & set).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        let labels = self.labels.as_ref().map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Graph { adj, labels }
    }

    /// `G - S`: delete the vertices of `set`.
    pub fn remove_vertices(&self, set: VertexSet) -> Graph {
        self.induced_subgraph(self.vertex_set() & !set)
    }

    /// Whether `G[set]` is a forest whose maximum degree is admitted by `bound`.
    pub fn induced_forest_check(&self, set: VertexSet, bound: DegreeBound) -> bool {
        let set = set & self.vertex_set();
        let mut edges = 0u32;
        for v in vertices_of(set) {
            let deg = (self.adj[v] & set).count_ones();
            if !bound.admits(deg) {
                return false;
            }
            edges += deg;
        }
        edges /= 2;
        // acyclic iff |E| = |V| - #components
        set.count_ones() - self.component_count(set) == edges
    }

    /// Number of connected components of `G[set]`.
    pub fn component_count(&self, set: VertexSet) -> u32 {
        let mut remaining = set;
        let mut count = 0;
        while remaining != 0 {
            let mut frontier = remaining & remaining.wrapping_neg();
            let mut seen = frontier;
            while frontier != 0 {
                let mut next = 0;
                for v in vertices_of(frontier) {
                    next |= self.adj[v] & set;
                }
                frontier = next & !seen;
                seen |= next;
            }
            remaining &= !seen;
            count += 1;
        }
        count
    }
}

/// Lexicographic product `G ∘ H`: vertex `(u, v)` is `u * |H| + v`.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.order(), h.order());
    let order = n * m;
    let mut p = Graph::empty(order)?;
    for u1 in 0..n {
        for v1 in 0..m {
            let a = u1 * m + v1;
            let mut row = 0u64;
            for u2 in 0..n {
                if u2 == u1 {
                    row |= h.neighbors(v1) << (u1 * m);
                } else if g.has_edge(u1, u2) {
                    row |= full_set(m) << (u2 * m);
                }
            }
            p.adj[a] = row;
        }
    }
    if let (Some(gl), Some(hl)) = (&g.labels, &h.labels) {
        let labels = (0..order).map(|i| format!("({},{})", gl[i / m], hl[i % m])).collect();
        p.labels = Some(labels);
    }
    Ok(p)
}

/// Parse a graph expression, e.g. `P5`, `C4`, `K3`, `K2,2,2`, `S3`, `lex(P3, K2)`.
pub fn make_graph(expr: &str) -> Result<Graph> {
    let compact: Vec<u8> = expr.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    let mut parser = ExprParser { src: &compact, pos: 0 };
    let g = parser.expr()?;
    if parser.pos != compact.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(g)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        make_graph(s)
    }
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at offset {} in `{}`",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let n: usize = digits.parse().map_err(|_| self.error("number out of range"))?;
        if n > MAX_VERTICES {
            return Err(Error::Capacity { requested: n, limit: MAX_VERTICES });
        }
        Ok(n)
    }

    fn expr(&mut self) -> Result<Graph> {
        if self.src[self.pos..].starts_with(b"lex(") {
            self.pos += 4;
            let g = self.expr()?;
            self.expect(b',')?;
            let h = self.expr()?;
            self.expect(b')')?;
            return lex_product(&g, &h);
        }
        match self.peek() {
            Some(b'P') => {
                self.pos += 1;
                let n = self.number()?;
                if n == 0 {
                    return Err(self.error("P0 is not a graph"));
                }
                Graph::path(n)
            }
            Some(b'C') => {
                self.pos += 1;
                Graph::cycle(self.number()?)
            }
            Some(b'S') => {
                self.pos += 1;
                Graph::star(self.number()?)
            }
            Some(b'K') => {
                self.pos += 1;
                let mut parts = vec![self.number()?];
                // a comma followed by a digit continues the part list
                while self.peek() == Some(b',')
                    && self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit())
                {
                    self.pos += 1;
                    parts.push(self.number()?);
                }
                if parts.contains(&0) {
                    return Err(self.error("empty part"));
                }
                if parts.len() == 1 {
                    Graph::complete(parts[0])
                } else {
                    Graph::complete_multipartite(&parts)
                }
            }
            _ => Err(self.error("expected P, C, K, S or lex(")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        let p2 = make_graph("P2").unwrap();
        assert_eq!((p2.order(), p2.edge_count()), (2, 1));
        let k22 = make_graph("K2,2").unwrap();
        assert_eq!((k22.order(), k22.edge_count()), (4, 4));
        assert!(k22.has_edge(0, 2) && !k22.has_edge(0, 1));
        let c5 = make_graph("C5").unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        let s3 = make_graph("S3").unwrap();
        assert_eq!(s3.degree(0), 3);
        assert_eq!(s3.edge_count(), 3);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(make_graph("Q3"), Err(Error::Parse(_))));
        assert!(matches!(make_graph("P"), Err(Error::Parse(_))));
        assert!(matches!(make_graph("lex(P2,K2"), Err(Error::Parse(_))));
        assert!(matches!(make_graph("P3x"), Err(Error::Parse(_))));
        assert!(matches!(make_graph("K65"), Err(Error::Capacity { .. })));
        assert!(matches!(make_graph("lex(P9, K8)"), Err(Error::Capacity { .. })));
        assert!(make_graph("C2").is_err());
    }

    #[test]
    fn whitespace_and_nesting() {
        let a = make_graph(" lex( K2 , P3 ) ").unwrap();
        assert_eq!((a.order(), a.edge_count()), (6, 13));
        let b = make_graph("lex(K2,2,P2)").unwrap();
        assert_eq!(b.order(), 8);
    }

    #[test]
    fn lex_product_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(lex_product(&k2, &k2).unwrap(), Graph::complete(4).unwrap());
        let p3 = Graph::path(3).unwrap();
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(lex_product(&p3, &k1).unwrap(), p3);
        let prod = lex_product(&k2, &p3).unwrap();
        assert_eq!(prod.edge_count(), 2 * p3.edge_count() + 9);
    }

    #[test]
    fn forest_predicate() {
        let c3 = Graph::cycle(3).unwrap();
        assert!(!c3.induced_forest_check(0b111, DegreeBound::Infinite));
        assert!(c3.induced_forest_check(0b011, DegreeBound::Finite(1)));
        let p4 = Graph::path(4).unwrap();
        assert!(!p4.induced_forest_check(0b1111, DegreeBound::Finite(1)));
        assert!(p4.induced_forest_check(0b1111, DegreeBound::Finite(2)));
        assert!(p4.induced_forest_check(0, DegreeBound::Finite(0)));
    }

    #[test]
    fn neighborhoods() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.closed_neighborhood(1), 0b0111);
        assert_eq!(p4.remove_vertices(p4.closed_neighborhood(0)), Graph::path(2).unwrap());
        assert_eq!(p4.component_count(0b1011), 2);
    }

    #[test]
    fn degree_bound_text() {
        assert_eq!("inf".parse::<DegreeBound>().unwrap(), DegreeBound::Infinite);
        assert_eq!(" 3".parse::<DegreeBound>().unwrap(), DegreeBound::Finite(3));
        assert!("-1".parse::<DegreeBound>().is_err());
        let json = serde_json::to_string(&[DegreeBound::Finite(2), DegreeBound::Infinite]).unwrap();
        assert_eq!(json, r#"[2,"inf"]"#);
        let back: Vec<DegreeBound> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![DegreeBound::Finite(2), DegreeBound::Infinite]);
    }
}
