//! Graph → covers → labelled graph → cover lattice, as used by the CLI.

use crate::covers::{
    enumerate_minimal_covers, is_unmixed, relabel, x_parts, CoverError, CoverFamily, RelabelMap,
};
use crate::graph::{bipartition, Bipartition, Graph, LabeledBipartiteGraph};
use crate::lattice::{lattice_from_covers, CoverLattice, LatticeError};

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// The normalised form of an unmixed bipartite graph.
#[derive(Debug, Clone)]
pub struct UnmixedForm {
    pub labeled: LabeledBipartiteGraph,
    pub map: RelabelMap,
    /// Minimal covers in the labelled graph's vertex space.
    pub covers: CoverFamily,
    pub lattice: CoverLattice,
}

#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub bipartition: Option<Bipartition>,
    pub covers: CoverFamily,
    pub unmixed: bool,
    /// Present exactly when the graph is bipartite and unmixed.
    pub form: Option<UnmixedForm>,
}

pub fn analyze(g: &Graph, max_vertices: usize) -> Result<GraphAnalysis, PipelineError> {
    let covers = enumerate_minimal_covers(g, max_vertices)?;
    let unmixed = is_unmixed(&covers);
    let part = bipartition(g);
    let form = match &part {
        Some(p) if unmixed => Some(normalize(g, p, &covers)?),
        _ => None,
    };
    Ok(GraphAnalysis {
        bipartition: part,
        covers,
        unmixed,
        form,
    })
}

/// Relabels an unmixed bipartite graph and builds `L_G`.
pub fn normalize(
    g: &Graph,
    p: &Bipartition,
    covers: &CoverFamily,
) -> Result<UnmixedForm, PipelineError> {
    let (labeled, map) = relabel(g, p, covers)?;
    let covers = covers.relabeled(&map);
    let parts = x_parts(&labeled, &covers)?;
    let lattice = lattice_from_covers(&parts, labeled.n())?;
    Ok(UnmixedForm {
        labeled,
        map,
        covers,
        lattice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitSet;
    use crate::covers::DEFAULT_MAX_VERTICES;
    use crate::graph::parse_graph;

    #[test]
    fn four_cycle() {
        let g = parse_graph("1 2\n2 3\n3 4\n1 4").unwrap();
        let a = analyze(&g, DEFAULT_MAX_VERTICES).unwrap();
        assert!(a.unmixed);
        let form = a.form.unwrap();
        assert_eq!(form.lattice.elements(), &[BitSet::EMPTY, BitSet::full(2)]);
        assert_eq!(
            form.covers.covers(),
            &[BitSet::from_indices([0, 1]), BitSet::from_indices([2, 3])]
        );
    }

    #[test]
    fn mixed_and_odd() {
        let g = parse_graph("1 2\n2 3\n3 4\n1 4\n4 5").unwrap();
        let a = analyze(&g, DEFAULT_MAX_VERTICES).unwrap();
        assert!(a.bipartition.is_some() && !a.unmixed && a.form.is_none());
        let t = parse_graph("1 2\n2 3\n1 3").unwrap();
        let a = analyze(&t, DEFAULT_MAX_VERTICES).unwrap();
        assert!(a.bipartition.is_none() && a.unmixed && a.form.is_none());
    }
}
