//! Edge-connectivity `λ`, restricted edge-connectivity `λ′`, and the
//! maximally / super (restricted) edge-connected classifications, for
//! plain graphs and for direct products `G × K_n` and `G × T_n`.
//!
//! ```
//! use lplab::constructors::{complete_graph, cycle_graph, direct_product};
//! use lplab::connectivity::{restricted_edge_connectivity, ExtCount};
//!
//! let g = direct_product(&cycle_graph(4)?, &complete_graph(5)?)?;
//! assert_eq!(restricted_edge_connectivity(&g)?, ExtCount::Finite(14));
//! # Ok::<(), lplab::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod bitset;
pub mod cli;
pub mod connectivity;
pub mod constructors;
pub mod error;
pub mod graph;
pub mod harness;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, Graph, Vertex};
