//! Batch verification: run every instance through the full pipeline and
//! check round trips, rank relations, Hall's condition and the growth oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{build_matrices, dimension_report, DimensionReport};
use crate::covers::{hall_violation, hall_violation_labeled, DEFAULT_MAX_VERTICES};
use crate::exec::Exec;
use crate::growth::{self, growth_oracle, GrowthError};
use crate::lattice::{
    enumerate_sublattices, graph_from_lattice, random_sublattice_with, CoverLattice, LatticeError,
};
use crate::pipeline::analyze;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub growth_max_degree: usize,
    /// Largest `n` on which Hall's condition is checked exhaustively.
    pub hall_max_n: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            growth_max_degree: 10,
            hall_max_n: 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "value")]
pub enum GrowthStatus {
    Matched(usize),
    /// Outside the guard: not attempted.
    OutOfRange,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceOutcome {
    pub lattice: String,
    pub report: DimensionReport,
    pub growth: GrowthStatus,
    pub hall_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceFailure {
    pub stage: &'static str,
    pub message: String,
    /// The offending lattice in its text format.
    pub lattice: String,
}

/// Runs one lattice through lattice → graph → covers → matrices → report.
pub fn verify_lattice(
    lat: &CoverLattice,
    cfg: &SweepConfig,
) -> Result<InstanceOutcome, InstanceFailure> {
    let fail = |stage: &'static str, message: String| InstanceFailure {
        stage,
        message,
        lattice: lat.to_text(),
    };

    // round trip A happens inside graph_from_lattice
    let g = graph_from_lattice(lat).map_err(|e| fail("round_trip_a", e.to_string()))?;

    // round trip B, starting from the flat graph as if read from a file
    let flat = g.to_graph();
    let analysis = analyze(&flat, DEFAULT_MAX_VERTICES.max(flat.vertex_count()))
        .map_err(|e| fail("pipeline", e.to_string()))?;
    let Some(part) = &analysis.bipartition else {
        return Err(fail("pipeline", "graph is not bipartite".into()));
    };
    let Some(form) = analysis.form else {
        return Err(fail("pipeline", "graph is not unmixed".into()));
    };
    if &form.lattice != lat {
        return Err(fail(
            "round_trip_b",
            format!("recovered lattice differs:\n{}", form.lattice.to_text()),
        ));
    }
    match graph_from_lattice(&form.lattice) {
        Ok(back) if back == form.labeled => {}
        Ok(back) => {
            return Err(fail(
                "round_trip_b",
                format!("rebuilt graph differs:\n{}", back.to_text()),
            ))
        }
        Err(e) => return Err(fail("round_trip_b", e.to_string())),
    }
    if form.labeled != g {
        return Err(fail(
            "uniqueness",
            format!("relabelled graph differs:\n{}", form.labeled.to_text()),
        ));
    }

    let hall_checked = lat.n() <= cfg.hall_max_n;
    if hall_checked {
        if let Some(sub) = hall_violation_labeled(&form.labeled) {
            return Err(fail("hall", format!("|U'| > |N(U')| for U' = {sub:?}")));
        }
        if let Some(sub) = hall_violation(&flat, part) {
            return Err(fail("hall", format!("|U'| > |N(U')| for U' = {sub:?}")));
        }
    }

    let report = dimension_report(&form.labeled, &form.covers, &form.lattice)
        .map_err(|e| fail("dimension", e.to_string()))?;

    let (b, _) =
        build_matrices(&form.covers, &form.labeled).map_err(|e| fail("matrices", e.to_string()))?;
    let growth = match growth_oracle(&b, cfg.growth_max_degree) {
        Ok(dim) if dim == report.rank_b => GrowthStatus::Matched(dim),
        Ok(dim) => {
            return Err(fail(
                "growth",
                format!("growth oracle gives {dim}, rank B = {}", report.rank_b),
            ))
        }
        Err(GrowthError::Guard { .. }) => GrowthStatus::OutOfRange,
        Err(GrowthError::Inconclusive { .. }) => GrowthStatus::Inconclusive,
    };

    Ok(InstanceOutcome {
        lattice: lat.to_text(),
        report,
        growth,
        hall_checked,
    })
}

/// True when the growth oracle's guard admits this lattice's matrix.
pub fn within_growth_guard(lat: &CoverLattice, max_degree: usize) -> bool {
    lat.len() <= growth::MAX_ROWS && lat.n() <= growth::MAX_N && max_degree <= growth::MAX_DEGREE
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub full: usize,
    pub growth_matched: usize,
    pub growth_skipped: usize,
    pub hall_checked: usize,
    pub failures: Vec<InstanceFailure>,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub outcomes: Vec<Result<InstanceOutcome, InstanceFailure>>,
    pub summary: SweepSummary,
}

impl SweepResult {
    fn collect(outcomes: Vec<Result<InstanceOutcome, InstanceFailure>>) -> SweepResult {
        let mut s = SweepSummary {
            instances: outcomes.len(),
            ..SweepSummary::default()
        };
        for o in &outcomes {
            match o {
                Ok(out) => {
                    s.passed += 1;
                    s.full += usize::from(out.report.cm);
                    s.hall_checked += usize::from(out.hall_checked);
                    match out.growth {
                        GrowthStatus::Matched(_) => s.growth_matched += 1,
                        GrowthStatus::Inconclusive => s.growth_skipped += 1,
                        GrowthStatus::OutOfRange => {}
                    }
                }
                Err(f) => {
                    s.failed += 1;
                    s.failures.push(f.clone());
                }
            }
        }
        SweepResult {
            outcomes,
            summary: s,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

pub fn verify_all(lattices: &[CoverLattice], cfg: &SweepConfig, exec: Exec) -> SweepResult {
    SweepResult::collect(exec.map(lattices, |l| verify_lattice(l, cfg)))
}

/// Every sublattice of the Boolean lattice on `[n]`, `n <= 4`.
pub fn verify_exhaustive(
    n: usize,
    cfg: &SweepConfig,
    exec: Exec,
) -> Result<SweepResult, LatticeError> {
    let lattices = enumerate_sublattices(n, exec)?;
    Ok(verify_all(&lattices, cfg, exec))
}

/// `count` random lattices on `[n]`. Instance `i` uses its own ChaCha
/// stream of `seed`, and closes `1 + U{0..=n}` random generators.
pub fn random_lattices(
    n: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<CoverLattice>, LatticeError> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let generators = 1 + rng.gen_range(0..=n);
            random_sublattice_with(n, generators, &mut rng)
        })
        .collect()
}

pub fn verify_random(
    n: usize,
    count: usize,
    seed: u64,
    cfg: &SweepConfig,
    exec: Exec,
) -> Result<SweepResult, LatticeError> {
    let lattices = random_lattices(n, count, seed)?;
    Ok(verify_all(&lattices, cfg, exec))
}
