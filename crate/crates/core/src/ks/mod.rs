//! Kochen-Specker vector sets: orthogonality graphs, contexts, the KS
//! property, completeness, and the built-in catalog.

pub mod catalog;
mod coloring;
mod completion;
mod graph;
mod vector_set;

pub use catalog::{builtin, ceg18, conway_kochen31, merged_peres, peres24, Builtin};
pub use coloring::{check_ks_property, EdgeSemantics, KsDecision, Verdict};
pub use completion::{check_completeness, complete_set, CompletenessReport, MAX_COMPLETED_VECTORS};
pub use graph::{build_orthogonality_graph, enumerate_contexts, Context, OrthogonalityGraph};
pub use vector_set::VectorSet;
