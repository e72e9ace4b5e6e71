//! Module categories over `A_k(G)`: SU(2) ADE graphs, modular invariants,
//! conformal embeddings and their global dimensions.

mod ade;
mod catalog;
mod global;
mod partition;

pub use ade::{annular_matrices, essential_matrix, module_quantum_dims, AdeGraph};
pub use catalog::{
    embedding_catalog, find_embedding, generate_catalog, load_catalog, parse_catalog, EmbeddingRecord, InnerFactor,
    DEFAULT_G_MAX,
};
pub use global::{
    ambient_category, conformal_subgroup_dim, induction_qdim, level1_global_dim, level1_global_dim_computed,
    level1_q_vector, module_global_dim, peter_weyl_check, series_ratio_check, Route, RouteInputs,
};
pub use partition::{ade_trig_identity, sandwich_identity, PartitionFunction};
