//! Minimal vertex covers of unmixed bipartite graphs, the sublattice of the
//! Boolean lattice they determine, and the dimension of the semigroup ring
//! generated by the cover monomials.
//!
//! The pipeline for a graph `G` is
//! [`graph::parse_graph`] → [`covers::enumerate_minimal_covers`] →
//! [`covers::relabel`] → [`lattice::lattice_from_covers`] →
//! [`algebra::dimension_report`]. [`lattice::graph_from_lattice`] runs the
//! correspondence backwards, and [`sweep`] checks everything over whole
//! families of lattices.

pub mod algebra;
pub mod bits;
pub mod cli;
pub mod covers;
pub mod exec;
pub mod graph;
pub mod growth;
pub mod lattice;
pub mod pipeline;
pub mod rank;
pub mod sweep;

pub use bits::BitSet;
pub use exec::Exec;
