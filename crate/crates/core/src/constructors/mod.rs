//! Graph families, the direct product, graph6 I/O, exhaustive enumeration
//! and corpus descriptions.

mod corpus;
mod enumerate;
mod families;
mod graph6;
mod product;
mod random;

pub use corpus::{CorpusItem, CorpusSource, CorpusSpec};
pub use enumerate::{
    canonical_form, canonical_labeling, enumerate_connected_graphs, enumerate_connected_graphs_up_to,
    DEFAULT_ENUMERATION_BUDGET, MAX_ENUMERATION_ORDER,
};
pub use families::{
    barbell_graph, complete_bipartite_graph, complete_graph, cycle_graph, named_family, path_graph, petersen_graph,
    star_graph, total_graph, Family,
};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_lines};
pub use product::{direct_product, DirectProduct, ProductVertex};
pub use random::erdos_renyi;
