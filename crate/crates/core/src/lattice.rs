//! Sublattices of the Boolean lattice on `[n]` that contain `∅` and `[n]`,
//! and their correspondence with unmixed bipartite graphs.
//!
//! For an unmixed labelled graph the `x`-parts of its minimal covers form
//! such a sublattice `L_G`. Conversely every such sublattice `L` comes from
//! exactly one labelled graph: `{x_i, y_j}` is an edge iff every `A ∈ L`
//! with `j ∈ A` also has `i ∈ A`. A cover `C` with `x`-part `A` meets the
//! edge `{x_i, y_j}` exactly when `i ∈ A` or `j ∉ A`, which is where the
//! rule comes from. [`graph_from_lattice`] re-enumerates the covers of its
//! result and refuses to return unless they reproduce `L` exactly.

use std::collections::{HashSet, VecDeque};
use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::covers::{enumerate_minimal_covers, x_parts, CoverError};
use crate::exec::Exec;
use crate::graph::LabeledBipartiteGraph;

/// Largest `n` for [`enumerate_sublattices`].
pub const MAX_ENUMERATE_N: usize = 4;
/// Largest `n` for [`random_sublattice`].
pub const MAX_RANDOM_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
}

/// Why a family of subsets is not a sublattice containing `∅` and `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureViolation {
    MissingBottom,
    MissingTop,
    OutOfRange {
        element: BitSet,
    },
    NotClosed {
        a: BitSet,
        b: BitSet,
        op: SetOp,
        missing: BitSet,
    },
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureViolation::MissingBottom => write!(f, "{{}} is missing"),
            ClosureViolation::MissingTop => write!(f, "the full set is missing"),
            ClosureViolation::OutOfRange { element } => {
                write!(f, "element {{{}}} is out of range", element.to_one_based())
            }
            ClosureViolation::NotClosed { a, b, op, missing } => {
                let sym = match op {
                    SetOp::Union => "∪",
                    SetOp::Intersection => "∩",
                };
                write!(
                    f,
                    "{{{}}} {} {{{}}} = {{{}}} is missing",
                    a.to_one_based(),
                    sym,
                    b.to_one_based(),
                    missing.to_one_based()
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("n must be at least 1")]
    ZeroN,
    #[error("n = {n} exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("not a sublattice: {0}")]
    NotSublattice(ClosureViolation),
    #[error("maximal chains have lengths between {shortest} and {longest}")]
    NotGraded { shortest: usize, longest: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("covers of the constructed graph give {got:?}, expected {expected:?}")]
    RoundTrip {
        expected: Vec<BitSet>,
        got: Vec<BitSet>,
    },
    #[error(transparent)]
    Cover(#[from] CoverError),
}

/// A sublattice of the Boolean lattice on `[n]` containing `∅` and `[n]`.
///
/// Elements are kept in canonical order (cardinality, then lexicographic).
/// Construction checks closure and gradedness, so the rank is always
/// available.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverLattice {
    n: usize,
    elements: Vec<BitSet>,
    rank: usize,
}

impl CoverLattice {
    pub fn new(n: usize, elements: impl IntoIterator<Item = BitSet>) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::ZeroN);
        }
        if n > LabeledBipartiteGraph::MAX_N {
            return Err(LatticeError::TooLarge {
                n,
                max: LabeledBipartiteGraph::MAX_N,
            });
        }
        let mut elements: Vec<BitSet> = elements.into_iter().collect();
        elements.sort_by(BitSet::canonical_cmp);
        elements.dedup();
        check_sublattice(n, &elements).map_err(LatticeError::NotSublattice)?;
        let rank = HasseDiagram::from_family(&elements).graded_rank()?;
        Ok(CoverLattice { n, elements, rank })
    }

    /// The whole Boolean lattice on `[n]`.
    pub fn boolean(n: usize) -> Result<Self, LatticeError> {
        if n > MAX_RANDOM_N {
            return Err(LatticeError::TooLarge {
                n,
                max: MAX_RANDOM_N,
            });
        }
        Self::new(n, (0u64..1 << n).map(BitSet))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[BitSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: BitSet) -> bool {
        self.elements
            .binary_search_by(|e| e.canonical_cmp(&a))
            .is_ok()
    }

    /// Header `n=<n>`, then one element per line as comma-separated 1-based
    /// indices, `{}` for the empty set.
    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for e in &self.elements {
            let _ = writeln!(out, "{}", e.to_one_based());
        }
        out
    }
}

/// Parsed lattice file contents before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFile {
    pub n: usize,
    pub family: Vec<BitSet>,
}

impl LatticeFile {
    pub fn into_lattice(self) -> Result<CoverLattice, LatticeError> {
        CoverLattice::new(self.n, self.family)
    }
}

/// Reads the format written by [`CoverLattice::to_text`]. Braces around
/// non-empty elements are tolerated; `#` starts a comment line.
pub fn parse_lattice(text: &str) -> Result<LatticeFile, LatticeError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(LatticeError::Parse {
        line: 0,
        message: "empty document".into(),
    })?;
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| LatticeError::Parse {
            line,
            message: format!("bad header {header:?}, expected \"n=<n>\""),
        })?;
    if n == 0 {
        return Err(LatticeError::ZeroN);
    }
    if n > LabeledBipartiteGraph::MAX_N {
        return Err(LatticeError::TooLarge {
            n,
            max: LabeledBipartiteGraph::MAX_N,
        });
    }
    let mut family = Vec::new();
    for (line, content) in lines {
        let inner = content
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .unwrap_or(content)
            .trim();
        let mut element = BitSet::EMPTY;
        for field in inner.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            let index: usize = field.parse().map_err(|_| LatticeError::Parse {
                line,
                message: format!("bad index {field:?}"),
            })?;
            if index == 0 || index > n {
                return Err(LatticeError::Parse {
                    line,
                    message: format!("index {index} out of range 1..={n}"),
                });
            }
            element = element.with(index - 1);
        }
        family.push(element);
    }
    Ok(LatticeFile { n, family })
}

/// Checks that `family` is closed under `∪` and `∩` and contains `∅` and
/// `[n]`. Closure is checked first; the first offending pair (in the given
/// order) is named.
pub fn check_sublattice(n: usize, family: &[BitSet]) -> Result<(), ClosureViolation> {
    let top = BitSet::full(n);
    if let Some(&element) = family.iter().find(|e| !e.is_subset(top)) {
        return Err(ClosureViolation::OutOfRange { element });
    }
    let members: HashSet<BitSet> = family.iter().copied().collect();
    for (k, &a) in family.iter().enumerate() {
        for &b in &family[k + 1..] {
            for (op, c) in [
                (SetOp::Union, a.union(b)),
                (SetOp::Intersection, a.intersection(b)),
            ] {
                if !members.contains(&c) {
                    return Err(ClosureViolation::NotClosed {
                        a,
                        b,
                        op,
                        missing: c,
                    });
                }
            }
        }
    }
    if !members.contains(&BitSet::EMPTY) {
        return Err(ClosureViolation::MissingBottom);
    }
    if !members.contains(&top) {
        return Err(ClosureViolation::MissingTop);
    }
    Ok(())
}

pub fn is_sublattice(n: usize, family: &[BitSet]) -> bool {
    check_sublattice(n, family).is_ok()
}

/// Builds `L_G` from the `x`-parts of an unmixed labelled graph's covers.
pub fn lattice_from_covers(x_parts: &[BitSet], n: usize) -> Result<CoverLattice, LatticeError> {
    CoverLattice::new(n, x_parts.iter().copied())
}

/// Cover relation of the inclusion order on a family of sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<BitSet>,
    /// `(lower, upper)` node indices.
    pub cover_edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Hasse diagram of an arbitrary family; `nodes` keeps the canonical order.
    pub fn from_family(family: &[BitSet]) -> HasseDiagram {
        let mut nodes = family.to_vec();
        nodes.sort_by(BitSet::canonical_cmp);
        nodes.dedup();
        let mut cover_edges = Vec::new();
        for (lo, &a) in nodes.iter().enumerate() {
            // supersets arrive in ascending cardinality, so any set strictly
            // between a and b has already been seen when b is examined
            let mut upper: Vec<usize> = Vec::new();
            for (hi, &b) in nodes.iter().enumerate().skip(lo + 1) {
                if a.is_proper_subset(b) && !upper.iter().any(|&u| nodes[u].is_proper_subset(b)) {
                    upper.push(hi);
                }
            }
            cover_edges.extend(upper.into_iter().map(|hi| (lo, hi)));
        }
        HasseDiagram { nodes, cover_edges }
    }

    /// Longest chain length minus one, after checking that every maximal
    /// chain from the bottom node to the top node has the same length.
    ///
    /// Expects a bounded family (first node below everything, last node above
    /// everything), as every [`CoverLattice`] is.
    pub fn graded_rank(&self) -> Result<usize, LatticeError> {
        let m = self.nodes.len();
        if m == 0 {
            return Ok(0);
        }
        // nodes are in a linear extension, so a single forward pass suffices
        let mut longest = vec![0usize; m];
        let mut shortest = vec![usize::MAX; m];
        shortest[0] = 0;
        let mut edges = self.cover_edges.clone();
        edges.sort_unstable();
        for &(lo, hi) in &edges {
            if shortest[lo] == usize::MAX {
                continue;
            }
            longest[hi] = longest[hi].max(longest[lo] + 1);
            shortest[hi] = shortest[hi].min(shortest[lo] + 1);
        }
        let (s, l) = (shortest[m - 1], longest[m - 1]);
        if s != l {
            return Err(LatticeError::NotGraded {
                shortest: s,
                longest: l,
            });
        }
        Ok(l)
    }

    /// Graphviz rendering with edges pointing from smaller to larger sets.
    pub fn to_dot(&self) -> String {
        let label = |e: &BitSet| {
            if e.is_empty() {
                "{}".to_string()
            } else {
                format!("{{{}}}", e.to_one_based())
            }
        };
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (k, e) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{k} [label=\"{}\"];", label(e));
        }
        for &(lo, hi) in &self.cover_edges {
            let _ = writeln!(out, "  n{lo} -> n{hi};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn hasse(lat: &CoverLattice) -> HasseDiagram {
    HasseDiagram::from_family(lat.elements())
}

pub fn rank(lat: &CoverLattice) -> usize {
    lat.rank
}

/// Full means rank `n`; for `L_G` this is the Cohen–Macaulay criterion.
pub fn is_full(lat: &CoverLattice) -> bool {
    lat.rank == lat.n
}

/// The unique labelled bipartite graph `G` with `L_G = lat`.
pub fn graph_from_lattice(lat: &CoverLattice) -> Result<LabeledBipartiteGraph, LatticeError> {
    let n = lat.n();
    let edges = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            lat.elements()
                .iter()
                .all(|a| !a.contains(j) || a.contains(i))
        });
    let g = LabeledBipartiteGraph::new(n, edges.collect::<Vec<_>>())
        .expect("(i, i) always satisfies the edge rule");
    let covers = enumerate_minimal_covers(&g.to_graph(), 2 * n)?;
    let mut got = x_parts(&g, &covers)?;
    got.sort_by(BitSet::canonical_cmp);
    if got != lat.elements() {
        return Err(LatticeError::RoundTrip {
            expected: lat.elements().to_vec(),
            got,
        });
    }
    Ok(g)
}

/// Every sublattice of the Boolean lattice on `[n]` containing `∅` and
/// `[n]`, found by testing all `2^(2^n)` families. Ordered by family bitmask.
pub fn enumerate_sublattices(n: usize, exec: Exec) -> Result<Vec<CoverLattice>, LatticeError> {
    if n == 0 {
        return Err(LatticeError::ZeroN);
    }
    if n > MAX_ENUMERATE_N {
        return Err(LatticeError::TooLarge {
            n,
            max: MAX_ENUMERATE_N,
        });
    }
    let subsets = 1usize << n;
    let top = subsets - 1;
    let families = exec.filter_range(0..1u64 << subsets, |family| {
        let has = |s: usize| family >> s & 1 == 1;
        has(0)
            && has(top)
            && (0..subsets).filter(|&a| has(a)).all(|a| {
                (a + 1..subsets)
                    .filter(|&b| has(b))
                    .all(|b| has(a | b) && has(a & b))
            })
    });
    families
        .into_iter()
        .map(|family| {
            let elements = (0..subsets as u64)
                .filter(|s| family >> s & 1 == 1)
                .map(BitSet);
            CoverLattice::new(n, elements)
        })
        .collect()
}

/// `∪`/`∩` closure of a family of subsets of `[n]` together with `∅`, `[n]`.
pub fn closure(n: usize, generators: impl IntoIterator<Item = BitSet>) -> Vec<BitSet> {
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut members: Vec<BitSet> = Vec::new();
    let mut queue: VecDeque<BitSet> = [BitSet::EMPTY, BitSet::full(n)]
        .into_iter()
        .chain(generators)
        .collect();
    while let Some(x) = queue.pop_front() {
        if !seen.insert(x) {
            continue;
        }
        for &y in &members {
            for z in [x.union(y), x.intersection(y)] {
                if !seen.contains(&z) {
                    queue.push_back(z);
                }
            }
        }
        members.push(x);
    }
    members.sort_by(BitSet::canonical_cmp);
    members
}

/// The closure of `generator_count` uniformly random subsets of `[n]`.
/// Deterministic in `seed`.
pub fn random_sublattice(
    n: usize,
    generator_count: usize,
    seed: u64,
) -> Result<CoverLattice, LatticeError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_sublattice_with(n, generator_count, &mut rng)
}

/// As [`random_sublattice`], drawing from a caller-supplied generator.
pub fn random_sublattice_with<R: Rng>(
    n: usize,
    generator_count: usize,
    rng: &mut R,
) -> Result<CoverLattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::ZeroN);
    }
    if n > MAX_RANDOM_N {
        return Err(LatticeError::TooLarge {
            n,
            max: MAX_RANDOM_N,
        });
    }
    let mask = BitSet::full(n).0;
    let generators: Vec<BitSet> = (0..generator_count)
        .map(|_| BitSet(rng.gen::<u64>() & mask))
        .collect();
    CoverLattice::new(n, closure(n, generators))
}
