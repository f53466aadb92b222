//! Discrete spinor generators, the six covering groups of the full Lorentz
//! group, their one-dimensional twists and the Majorana reality scan.

pub mod generators;
pub mod groups;
pub mod majorana;
pub mod partial;
pub mod representation;
pub mod vector;

pub use generators::{discrete_mult_table, DiscreteGen};
pub use groups::{
    commutation_check, group_relations_check, similarity_witness, witness_a, CoveringGroupId, GroupElement, NormalForm,
    SimilarityWitness,
};
pub use majorana::{majorana_reality_scan, GroupReality};
pub use partial::{partly_extended_analysis, PartialAnalysis, PartialFamily};
pub use representation::{flip_f, rep_equivalence_check, rep_value, EquivalenceResult, RepLabel, RepTag};
pub use vector::{vector_rep, VectorRepLabel};
