//! Exact k-defective colouring of small graphs, enumeration of triangle-free
//! graphs up to isomorphism, and exhaustive checks of the classification of
//! triangle-free graphs of order 9 and 10 with 1-defective chromatic number 3.

pub mod catalog;
pub mod coloring;
pub mod decompose;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod verify;

pub use coloring::{
    defective_chromatic_number, find_mk_coloring, is_k_independent, is_mk_critical, is_mk_edge_critical,
    lovasz_bound, ChiResult, DefectivePartition,
};
pub use enumerate::{enumerate_triangle_free, EnumerationSummary, EnumerationTask, Filter, Shard};
pub use graph::{Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use iso::{are_isomorphic, canonical_form, contains_vertex_deleted_copy, CanonicalForm, VertexMap};
pub use catalog::{catalog_graph, validate_catalog, CatalogEntry, CatalogError};
pub use verify::{run_check, CheckOptions, Outcome, Universes, VerificationReport, VerifyError};
