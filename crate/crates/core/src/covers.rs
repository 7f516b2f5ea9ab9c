//! Minimal vertex covers, unmixedness, and the normalisation of an unmixed
//! bipartite graph onto `x_1..x_n ∪ y_1..y_n` with `{x_i, y_i}` always an edge.

use std::fmt::Write as _;

use crate::bits::BitSet;
use crate::graph::{Bipartition, Graph, LabeledBipartiteGraph};

/// Default vertex cap for cover enumeration.
pub const DEFAULT_MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("graph has {vertices} vertices, over the enumeration cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("graph is not unmixed")]
    NotUnmixed,
    #[error("bipartition sides have sizes {u} and {v}")]
    SidesUnequal { u: usize, v: usize },
    #[error("inconsistency: unmixed bipartite graph without a perfect matching")]
    NoPerfectMatching,
    #[error("cover {cover:?} contains both or neither of x_{index} and y_{index}")]
    Complementarity { cover: BitSet, index: usize },
}

/// The minimal vertex covers of a graph, ordered by cardinality and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    vertex_count: usize,
    covers: Vec<BitSet>,
}

impl CoverFamily {
    pub fn covers(&self) -> &[BitSet] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The same covers in the vertex space of a relabelled graph.
    pub fn relabeled(&self, map: &RelabelMap) -> CoverFamily {
        let mut covers: Vec<BitSet> = self.covers.iter().map(|&c| map.map_set(c)).collect();
        covers.sort_by(BitSet::canonical_cmp);
        CoverFamily {
            vertex_count: 2 * map.x_vertex.len(),
            covers,
        }
    }

    /// One cover per line, 1-based vertices separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.covers {
            let line: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// All minimal vertex covers of `g`, as complements of the maximal
/// independent sets found by Bron–Kerbosch with pivoting on the complement
/// graph.
pub fn enumerate_minimal_covers(g: &Graph, cap: usize) -> Result<CoverFamily, CoverError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(CoverError::TooLarge { vertices: n, cap });
    }
    let all = g.all_vertices();
    // neighbourhoods in the complement graph
    let co_adj: Vec<BitSet> = (0..n)
        .map(|v| all.difference(g.neighbors(v)).without(v))
        .collect();
    let mut independents = Vec::new();
    bron_kerbosch(
        &co_adj,
        BitSet::EMPTY,
        all,
        BitSet::EMPTY,
        &mut independents,
    );
    let mut covers: Vec<BitSet> = independents.into_iter().map(|s| s.complement(n)).collect();
    covers.sort_by(BitSet::canonical_cmp);
    debug_assert!(covers.iter().all(|&c| is_minimal_cover(g, c)));
    Ok(CoverFamily {
        vertex_count: n,
        covers,
    })
}

fn bron_kerbosch(adj: &[BitSet], r: BitSet, mut p: BitSet, mut x: BitSet, out: &mut Vec<BitSet>) {
    let px = p.union(x);
    let Some(pivot) = px.iter().max_by_key(|&u| p.intersection(adj[u]).len()) else {
        out.push(r);
        return;
    };
    for v in p.difference(adj[pivot]).iter() {
        bron_kerbosch(
            adj,
            r.with(v),
            p.intersection(adj[v]),
            x.intersection(adj[v]),
            out,
        );
        p = p.without(v);
        x = x.with(v);
    }
}

/// Cover property plus minimality: dropping any member uncovers an edge.
pub fn is_minimal_cover(g: &Graph, c: BitSet) -> bool {
    g.is_cover(c) && c.iter().all(|v| !g.is_cover(c.without(v)))
}

pub fn is_unmixed(covers: &CoverFamily) -> bool {
    covers.covers.windows(2).all(|w| w[0].len() == w[1].len())
}

/// A perfect matching between the two sides, as `(u, v)` pairs sorted by
/// `u`. Vertices of `side_u` are processed in ascending order: each first
/// takes its lowest free neighbour, and only then are augmenting paths
/// (neighbours scanned ascending) searched for those left unmatched.
pub fn perfect_matching(g: &Graph, p: &Bipartition) -> Option<Vec<(usize, usize)>> {
    if p.side_u.len() != p.side_v.len() {
        return None;
    }
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for u in p.side_u.iter() {
        if let Some(v) = g.neighbors(u).iter().find(|&v| mate[v].is_none()) {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
    }
    for u in p.side_u.iter() {
        if mate[u].is_some() {
            continue;
        }
        let mut visited = BitSet::EMPTY;
        if !augment(g, u, &mut mate, &mut visited) {
            return None;
        }
    }
    Some(p.side_u.iter().map(|u| (u, mate[u].unwrap())).collect())
}

fn augment(g: &Graph, u: usize, mate: &mut [Option<usize>], visited: &mut BitSet) -> bool {
    for v in g.neighbors(u).iter() {
        if visited.contains(v) {
            continue;
        }
        *visited = visited.with(v);
        let free = match mate[v] {
            None => true,
            Some(w) => augment(g, w, mate, visited),
        };
        if free {
            mate[u] = Some(v);
            mate[v] = Some(u);
            return true;
        }
    }
    false
}

/// Where each label of a [`LabeledBipartiteGraph`] came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelabelMap {
    /// `x_vertex[i]` is the original vertex labelled `x_i`.
    pub x_vertex: Vec<usize>,
    /// `y_vertex[j]` is the original vertex labelled `y_j`.
    pub y_vertex: Vec<usize>,
}

impl RelabelMap {
    /// Maps an original vertex set onto the flat `2n` vertex space of the
    /// labelled graph (`x_i ↦ i`, `y_j ↦ n + j`).
    pub fn map_set(&self, set: BitSet) -> BitSet {
        let n = self.x_vertex.len();
        let xs = (0..n).filter(|&i| set.contains(self.x_vertex[i]));
        let ys = (0..n)
            .filter(|&j| set.contains(self.y_vertex[j]))
            .map(|j| n + j);
        xs.chain(ys).collect()
    }

    /// Text lines `x<i> <vertex>` / `y<j> <vertex>`, all 1-based.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.x_vertex.iter().enumerate() {
            let _ = writeln!(out, "x{} {}", i + 1, v + 1);
        }
        for (j, v) in self.y_vertex.iter().enumerate() {
            let _ = writeln!(out, "y{} {}", j + 1, v + 1);
        }
        out
    }
}

/// Relabels an unmixed bipartite graph so that `side_u` becomes
/// `x_1..x_n` in ascending order and `y_i` is the partner of `x_i` under
/// [`perfect_matching`].
pub fn relabel(
    g: &Graph,
    p: &Bipartition,
    covers: &CoverFamily,
) -> Result<(LabeledBipartiteGraph, RelabelMap), CoverError> {
    if !is_unmixed(covers) {
        return Err(CoverError::NotUnmixed);
    }
    if p.side_u.len() != p.side_v.len() {
        return Err(CoverError::SidesUnequal {
            u: p.side_u.len(),
            v: p.side_v.len(),
        });
    }
    let matching = perfect_matching(g, p).ok_or(CoverError::NoPerfectMatching)?;
    Ok(relabel_with_matching(g, &matching))
}

/// Relabels along an explicit perfect matching, `x_i` being the `i`-th pair's
/// first vertex.
pub fn relabel_with_matching(
    g: &Graph,
    matching: &[(usize, usize)],
) -> (LabeledBipartiteGraph, RelabelMap) {
    let n = matching.len();
    let mut x_label = vec![usize::MAX; g.vertex_count()];
    let mut y_label = vec![usize::MAX; g.vertex_count()];
    for (i, &(u, v)) in matching.iter().enumerate() {
        x_label[u] = i;
        y_label[v] = i;
    }
    let edges = g.edges().iter().map(|&(a, b)| {
        if x_label[a] != usize::MAX {
            (x_label[a], y_label[b])
        } else {
            (x_label[b], y_label[a])
        }
    });
    let labeled = LabeledBipartiteGraph::new(n, edges)
        .expect("a perfect matching yields a valid labelled graph");
    let map = RelabelMap {
        x_vertex: matching.iter().map(|&(u, _)| u).collect(),
        y_vertex: matching.iter().map(|&(_, v)| v).collect(),
    };
    (labeled, map)
}

/// `C' = C ∩ {x_1..x_n}` for every cover of a labelled graph, checking that
/// each cover holds exactly one of `x_i`, `y_i` for every `i`.
pub fn x_parts(g: &LabeledBipartiteGraph, covers: &CoverFamily) -> Result<Vec<BitSet>, CoverError> {
    let n = g.n();
    covers
        .covers()
        .iter()
        .map(|&c| {
            let x = c.intersection(BitSet::full(n));
            let y = BitSet(c.0 >> n);
            match x.union(y).complement(n).union(x.intersection(y)).first() {
                Some(index) => Err(CoverError::Complementarity {
                    cover: c,
                    index: index + 1,
                }),
                None => Ok(x),
            }
        })
        .collect()
}

/// First `U' ⊆ side_u` (in ascending mask order over the members of
/// `side_u`) with `|U'| > |N(U')|`, or `None` when Hall's condition holds.
pub fn hall_violation(g: &Graph, p: &Bipartition) -> Option<BitSet> {
    let side: Vec<usize> = p.side_u.iter().collect();
    assert!(
        side.len() <= 24,
        "exhaustive Hall check is limited to 24 vertices"
    );
    (0u64..1 << side.len()).find_map(|mask| {
        let sub: BitSet = BitSet(mask).iter().map(|k| side[k]).collect();
        let nb = sub
            .iter()
            .fold(BitSet::EMPTY, |acc, u| acc.union(g.neighbors(u)));
        (sub.len() > nb.len()).then_some(sub)
    })
}

/// Hall's condition for `U' ⊆ {x_1..x_n}` of a labelled graph, reported as a
/// subset of `[n]`.
pub fn hall_violation_labeled(g: &LabeledBipartiteGraph) -> Option<BitSet> {
    let n = g.n();
    let sides = Bipartition {
        side_u: BitSet::full(n),
        side_v: BitSet::full(2 * n).difference(BitSet::full(n)),
    };
    hall_violation(&g.to_graph(), &sides)
}
