//! Exact distinguishing numbers and distinguishing indices of small graphs,
//! closed-form values for windmills and complete bipartite graphs, the
//! constructive labelings behind the √Δ bounds, and exhaustive certification
//! of those bounds over small graph populations.

pub mod budget;
pub mod constructive;
pub mod distinguishing;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod perm;
pub mod survey;

pub use budget::Budget;
pub use constructive::{
    label_min_degree_two, label_two_minimally, label_windmill, Constructed, Method,
};
pub use distinguishing::{
    distinguishing_index, distinguishing_number, find_edge_labeling, is_distinguishing_edge,
    EdgeLabeling, VertexLabeling,
};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use formulas::BoundKind;
pub use graph::{Edge, Graph, Vertex};
pub use graph6::{parse_graph6, to_graph6};
pub use perm::{automorphisms, AutGroup, Permutation};
pub use survey::{certify_bound, conjecture_scan, Report, Summary, SurveyBound};
