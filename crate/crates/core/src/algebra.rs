//! Cover vectors, the exponent matrices `B_G` and `B̃_G`, and the dimension
//! of the semigroup ring generated by the cover monomials `u_C`.
//!
//! The dimension is the rank of `B_G`. [`dimension_report`] computes it next
//! to the rank of `B̃_G` (the `x` half of `B_G`) and the rank of the cover
//! lattice, and checks every relation between them that must hold for an
//! unmixed bipartite graph.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::bits::BitSet;
use crate::covers::{CoverError, CoverFamily};
use crate::graph::LabeledBipartiteGraph;
use crate::lattice::{is_full, rank, CoverLattice};
use crate::rank::{rank_exact, rank_mod_p};

/// The 0/1 incidence vector `b_C` of a cover: `n` entries for `x_1..x_n`
/// followed by `n` entries for `y_1..y_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverVector {
    n: usize,
    entries: Vec<u8>,
}

impl CoverVector {
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_part(&self) -> &[u8] {
        &self.entries[..self.n]
    }

    fn x_popcount(&self) -> usize {
        self.x_part().iter().filter(|&&e| e == 1).count()
    }
}

/// `b_C` for a cover `C` given in the flat vertex space of
/// [`LabeledBipartiteGraph::to_graph`].
pub fn cover_vector(c: BitSet, g: &LabeledBipartiteGraph) -> Result<CoverVector, CoverError> {
    let n = g.n();
    let entries: Vec<u8> = (0..2 * n).map(|k| u8::from(c.contains(k))).collect();
    if let Some(index) = (0..n).find(|&j| entries[j] == entries[n + j]) {
        return Err(CoverError::Complementarity {
            cover: c,
            index: index + 1,
        });
    }
    Ok(CoverVector { n, entries })
}

/// `u_C` written out, e.g. `x1*x2` or `x1*y2`.
pub fn monomial_string(v: &CoverVector) -> String {
    let n = v.n;
    let factors: Vec<String> = v
        .entries
        .iter()
        .enumerate()
        .filter(|(_, &e)| e == 1)
        .map(|(k, _)| {
            if k < n {
                format!("x{}", k + 1)
            } else {
                format!("y{}", k - n + 1)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// `B_G`: one row per minimal cover. The all-`x` cover comes first and the
/// all-`y` cover last; rows are ordered by decreasing `x`-count, ties broken
/// lexicographically on the `x` indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    pub n: usize,
    pub rows: Vec<CoverVector>,
}

/// `B̃_G`: the first `n` columns of `B_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMatrix {
    pub rows: Vec<Vec<u8>>,
}

impl ExponentMatrix {
    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn to_integer_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.entries.iter().map(|&e| i64::from(e)).collect())
            .collect()
    }

    pub fn truncate(&self) -> TruncatedMatrix {
        TruncatedMatrix {
            rows: self.rows.iter().map(|r| r.x_part().to_vec()).collect(),
        }
    }
}

impl TruncatedMatrix {
    pub fn to_integer_rows(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&e| i64::from(e)).collect())
            .collect()
    }
}

fn row_order(a: &CoverVector, b: &CoverVector) -> std::cmp::Ordering {
    let ones = |v: &CoverVector| -> Vec<usize> {
        v.x_part()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 1)
            .map(|(k, _)| k)
            .collect()
    };
    b.x_popcount()
        .cmp(&a.x_popcount())
        .then_with(|| ones(a).cmp(&ones(b)))
}

pub fn build_matrices(
    covers: &CoverFamily,
    g: &LabeledBipartiteGraph,
) -> Result<(ExponentMatrix, TruncatedMatrix), CoverError> {
    let mut rows = covers
        .covers()
        .iter()
        .map(|&c| cover_vector(c, g))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(row_order);
    let b = ExponentMatrix { n: g.n(), rows };
    let bt = b.truncate();
    Ok((b, bt))
}

/// Everything [`dimension_report`] measures about one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub n: usize,
    /// Number of minimal covers.
    pub d: usize,
    pub rank_b: usize,
    pub rank_b_trunc: usize,
    pub lattice_rank: usize,
    pub dim: usize,
    pub theorem_holds: bool,
    pub cm: bool,
    /// Rank of `B_G` over GF(2); diagnostic only.
    pub rank_b_mod2: usize,
    /// Rank of `B_G` over GF(3); diagnostic only.
    pub rank_b_mod3: usize,
}

impl DimensionReport {
    /// One `key=value` per line.
    pub fn to_key_values(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "d={}", self.d);
        let _ = writeln!(out, "rank_B={}", self.rank_b);
        let _ = writeln!(out, "rank_B_trunc={}", self.rank_b_trunc);
        let _ = writeln!(out, "rank={}", self.lattice_rank);
        let _ = writeln!(out, "dim={}", self.dim);
        let _ = writeln!(out, "theorem_holds={}", yes_no(self.theorem_holds));
        let _ = writeln!(out, "cm={}", yes_no(self.cm));
        let _ = writeln!(out, "rank_B_mod2={}", self.rank_b_mod2);
        let _ = writeln!(out, "rank_B_mod3={}", self.rank_b_mod3);
        out
    }
}

/// Which relation failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// first row all-`x`, last row all-`y`
    BoundaryRows,
    /// column `n+j` equals the all-ones column minus column `j`
    ColumnIdentity,
    /// `rank B_G = rank B̃_G + 1`
    RankDrop,
    /// `rank B̃_G = rank L_G`
    TruncatedEqualsLattice,
    /// `dim = rank L_G + 1`
    Dimension,
    /// full lattice implies `dim = n + 1`
    FullDimension,
    /// cover count disagrees with lattice size
    CoverCount,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Relation::BoundaryRows => "first/last rows of B are not the all-x/all-y covers",
            Relation::ColumnIdentity => "column n+j of B is not 1 - column j",
            Relation::RankDrop => "rank B != rank B_trunc + 1",
            Relation::TruncatedEqualsLattice => "rank B_trunc != rank L",
            Relation::Dimension => "dim != rank L + 1",
            Relation::FullDimension => "full lattice but dim != n + 1",
            Relation::CoverCount => "cover count differs from lattice size",
        };
        f.write_str(s)
    }
}

/// A relation that must hold for every unmixed bipartite graph was violated.
/// Carries the whole instance so it can be reproduced.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize)]
#[error("inconsistency: {relation}\nreport:\n{report_text}instance:\n{instance}")]
pub struct Inconsistency {
    pub relation: Relation,
    pub report: DimensionReport,
    #[serde(skip)]
    report_text: String,
    /// The labelled graph in its text format.
    pub instance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Inconsistent(#[from] Box<Inconsistency>),
}

/// Builds `B_G`, `B̃_G`, computes their exact ranks, and checks them against
/// the rank of `lat`.
pub fn dimension_report(
    g: &LabeledBipartiteGraph,
    covers: &CoverFamily,
    lat: &CoverLattice,
) -> Result<DimensionReport, AlgebraError> {
    let (b, bt) = build_matrices(covers, g)?;
    let b_int = b.to_integer_rows();
    let rank_b = rank_exact(&b_int);
    let rank_b_trunc = rank_exact(&bt.to_integer_rows());
    let lattice_rank = rank(lat);
    let n = g.n();
    let dim = rank_b;
    let report = DimensionReport {
        n,
        d: b.d(),
        rank_b,
        rank_b_trunc,
        lattice_rank,
        dim,
        theorem_holds: dim == lattice_rank + 1,
        cm: is_full(lat),
        rank_b_mod2: rank_mod_p(&b_int, 2),
        rank_b_mod3: rank_mod_p(&b_int, 3),
    };

    let first_last_ok = b.d() >= 2
        && b.rows[0].entries[..n].iter().all(|&e| e == 1)
        && b.rows[b.d() - 1].entries[n..].iter().all(|&e| e == 1);
    let columns_ok = b
        .rows
        .iter()
        .all(|r| (0..n).all(|j| r.entries[n + j] == 1 - r.entries[j]));
    let checks = [
        (Relation::CoverCount, b.d() == lat.len()),
        (Relation::BoundaryRows, first_last_ok),
        (Relation::ColumnIdentity, columns_ok),
        (Relation::RankDrop, rank_b == rank_b_trunc + 1),
        (
            Relation::TruncatedEqualsLattice,
            rank_b_trunc == lattice_rank,
        ),
        (Relation::Dimension, report.theorem_holds),
        (Relation::FullDimension, !report.cm || dim == n + 1),
    ];
    if let Some(&(relation, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Box::new(Inconsistency {
            relation,
            report_text: report.to_key_values(),
            report,
            instance: g.to_text(),
        })
        .into());
    }
    Ok(report)
}
