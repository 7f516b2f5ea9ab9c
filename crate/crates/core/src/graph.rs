//! Simple graphs, edge-list I/O, 2-colouring and the labelled bipartite form
//! `x_1..x_n ∪ y_1..y_n` used by the cover lattice machinery.
//!
//! Vertices are 0-based in memory. Every text format is 1-based.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::bits::{BitSet, MAX_BITS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: malformed edge {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: loop on vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("vertex {vertex} is isolated")]
    Isolated { vertex: usize },
    #[error("graph has no edges")]
    Empty,
    #[error("{count} vertices exceed the supported maximum of {max}")]
    TooManyVertices { count: usize, max: usize },
    #[error("index {index} out of range 1..={n}")]
    OutOfRange { index: usize, n: usize },
    #[error("labelled graph is missing the matching edge {{x_{i}, y_{i}}}")]
    MissingMatchingEdge { i: usize },
    #[error("line {line}: bad header {text:?}, expected \"n=<n>\"")]
    BadHeader { line: usize, text: String },
}

/// Undirected simple graph without loops or isolated vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted, each pair `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from 0-based edges. `vertex_count` must equal the
    /// number of vertices that actually occur.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut builder = Builder::default();
        for (u, v) in edges {
            builder.push(0, u, v)?;
        }
        builder.finish(Some(vertex_count))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> BitSet {
        self.adjacency[v]
    }

    pub fn all_vertices(&self) -> BitSet {
        BitSet::full(self.vertex_count)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].contains(v)
    }

    /// True when every edge has an endpoint in `set`.
    pub fn is_cover(&self, set: BitSet) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| set.contains(u) || set.contains(v))
    }

    /// Applies a vertex permutation, `perm[old] = new`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("a permutation preserves validity")
    }

    /// Canonical edge-list text: one `u v` per line, 1-based, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

#[derive(Default)]
struct Builder {
    edges: BTreeSet<(usize, usize)>,
    max_vertex: Option<usize>,
}

impl Builder {
    fn push(&mut self, line: usize, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop {
                line,
                vertex: u + 1,
            });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if b >= MAX_BITS {
            return Err(GraphError::TooManyVertices {
                count: b + 1,
                max: MAX_BITS,
            });
        }
        if !self.edges.insert((a, b)) {
            return Err(GraphError::Duplicate {
                line,
                u: a + 1,
                v: b + 1,
            });
        }
        self.max_vertex = Some(self.max_vertex.map_or(b, |m| m.max(b)));
        Ok(())
    }

    fn finish(self, declared: Option<usize>) -> Result<Graph, GraphError> {
        let Some(max_vertex) = self.max_vertex else {
            return Err(GraphError::Empty);
        };
        let vertex_count = declared.unwrap_or(max_vertex + 1);
        if vertex_count > MAX_BITS {
            return Err(GraphError::TooManyVertices {
                count: vertex_count,
                max: MAX_BITS,
            });
        }
        if max_vertex >= vertex_count {
            return Err(GraphError::OutOfRange {
                index: max_vertex + 1,
                n: vertex_count,
            });
        }
        let mut adjacency = vec![BitSet::EMPTY; vertex_count];
        for &(u, v) in &self.edges {
            adjacency[u] = adjacency[u].with(v);
            adjacency[v] = adjacency[v].with(u);
        }
        if let Some(vertex) = adjacency.iter().position(|a| a.is_empty()) {
            return Err(GraphError::Isolated { vertex: vertex + 1 });
        }
        Ok(Graph {
            vertex_count,
            edges: self.edges.into_iter().collect(),
            adjacency,
        })
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let malformed = || GraphError::Malformed {
        line,
        text: text.to_string(),
    };
    let mut fields = text.split_whitespace();
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed());
    };
    let a: usize = a.parse().map_err(|_| malformed())?;
    let b: usize = b.parse().map_err(|_| malformed())?;
    if a == 0 || b == 0 {
        return Err(malformed());
    }
    Ok((a - 1, b - 1))
}

/// Parses a 1-based edge list, one `u v` per line, `#` comments allowed.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut builder = Builder::default();
    for (line, content) in content_lines(text) {
        let (u, v) = parse_pair(line, content)?;
        builder.push(line, u, v)?;
    }
    builder.finish(None)
}

/// Parses either a plain edge list or a labelled bipartite graph (recognised
/// by its `n=<n>` header). Labelled graphs map `x_i` to vertex `i` and `y_j`
/// to vertex `n + j`.
pub fn parse_graph_document(text: &str) -> Result<Graph, GraphError> {
    match content_lines(text).next() {
        Some((_, first)) if first.starts_with("n=") => Ok(parse_labeled_graph(text)?.to_graph()),
        _ => parse_graph(text),
    }
}

/// A 2-colouring of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_u: BitSet,
    pub side_v: BitSet,
}

/// BFS 2-colouring. Each component is rooted at its lowest vertex, which is
/// placed in `side_u`. Returns `None` when the graph has an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.vertex_count();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for w in g.neighbors(u).iter() {
                match colour[w] {
                    None => {
                        colour[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let side_v: BitSet = (0..n).filter(|&v| colour[v] == Some(true)).collect();
    Some(Bipartition {
        side_u: side_v.complement(n),
        side_v,
    })
}

/// Bipartite graph on `x_0..x_{n-1} ∪ y_0..y_{n-1}` that contains every
/// matching edge `{x_i, y_i}`. Edges are `(i, j)` meaning `{x_i, y_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledBipartiteGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    /// `x_adj[i]` = indices `j` with `{x_i, y_j}` an edge.
    x_adj: Vec<BitSet>,
}

impl LabeledBipartiteGraph {
    pub const MAX_N: usize = MAX_BITS / 2;

    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > Self::MAX_N {
            return Err(GraphError::TooManyVertices {
                count: 2 * n,
                max: MAX_BITS,
            });
        }
        let mut x_adj = vec![BitSet::EMPTY; n];
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            for index in [i, j] {
                if index >= n {
                    return Err(GraphError::OutOfRange {
                        index: index + 1,
                        n,
                    });
                }
            }
            set.insert((i, j));
            x_adj[i] = x_adj[i].with(j);
        }
        if let Some(i) = (0..n).find(|&i| !x_adj[i].contains(i)) {
            return Err(GraphError::MissingMatchingEdge { i: i + 1 });
        }
        Ok(LabeledBipartiteGraph {
            n,
            edges: set,
            x_adj,
        })
    }

    /// The graph with only the matching edges `{x_i, y_i}`.
    pub fn matching(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (0..n).map(|i| (i, i)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn x_neighbors(&self, i: usize) -> BitSet {
        self.x_adj[i]
    }

    /// Vertex index of `x_i` in [`Self::to_graph`].
    pub fn x_vertex(&self, i: usize) -> usize {
        i
    }

    /// Vertex index of `y_j` in [`Self::to_graph`].
    pub fn y_vertex(&self, j: usize) -> usize {
        self.n + j
    }

    /// Flattens to a plain graph on `2n` vertices, `x_i ↦ i`, `y_j ↦ n + j`.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(2 * self.n, self.edges.iter().map(|&(i, j)| (i, self.n + j)))
            .expect("labelled graphs have no loops or isolated vertices")
    }

    /// Header `n=<n>` followed by `i j` lines, 1-based and sorted.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "{} {}", i + 1, j + 1);
        }
        out
    }
}

/// Inverse of [`LabeledBipartiteGraph::to_text`].
pub fn parse_labeled_graph(text: &str) -> Result<LabeledBipartiteGraph, GraphError> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return Err(GraphError::Empty);
    };
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| GraphError::BadHeader {
            line,
            text: header.to_string(),
        })?;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, content) in lines {
        let (i, j) = parse_pair(line, content)?;
        if !seen.insert((i, j)) {
            return Err(GraphError::Duplicate {
                line,
                u: i + 1,
                v: j + 1,
            });
        }
        edges.push((i, j));
    }
    LabeledBipartiteGraph::new(n, edges)
}

/// `N(U') = { j : {x_i, y_j} ∈ E for some i ∈ U' }`.
pub fn neighborhood(g: &LabeledBipartiteGraph, u_sub: BitSet) -> Result<BitSet, GraphError> {
    if let Some(bad) = u_sub.difference(BitSet::full(g.n())).first() {
        return Err(GraphError::OutOfRange {
            index: bad + 1,
            n: g.n(),
        });
    }
    Ok(u_sub
        .iter()
        .fold(BitSet::EMPTY, |acc, i| acc.union(g.x_neighbors(i))))
}
