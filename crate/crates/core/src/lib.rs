//! Connected greedy colorings: exact parameters, gadget generators and
//! certification tools.

pub mod budget;
pub mod chromatic;
pub mod coloring;
pub mod enumerate;
pub mod equality;
pub mod error;
pub mod formats;
pub mod gadgets;
pub mod graph;
pub mod params;
mod realize;
pub mod search;
pub mod structure;
pub mod verifier;

pub use budget::{Outcome, SearchBudget};
pub use chromatic::{chromatic_number, chromatic_number_with, for_each_coloring, SearchResult, Witness};
pub use coloring::{greedy_color, is_connected_ordering, Color, Coloring, OrderingRun};
pub use error::{Error, Result};
pub use graph::{
    add_universal_vertex, disjoint_union, double_mycielskian, identify_vertices, line_graph, make_graph, Embedding,
    Graph, VertexOrdering,
};
pub use search::{exists_cgc, exists_cgc_with, CgcSearch, SearchOptions, Verdict};
pub use structure::{component_12, contains_induced, find_dominating_structure, longest_induced_path_from, DominatingStructure};
pub use params::{
    cgc_spectrum, connected_chromatic_index, connected_chromatic_number, connected_grundy_number, grundy_number,
    vcgc_upper_bound_witness, EdgeSearchResult, Spectrum,
};
pub use equality::{cgc_equality_p5free, extend_cgc_from_dominating_set, swap_color_classes};
