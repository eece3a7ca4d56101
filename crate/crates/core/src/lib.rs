//! Minor models `K^ℓ_{ℓ,m}` in graphs with independence number at most two.
//!
//! Graphs have at most 64 vertices and use one `u64` adjacency mask per
//! vertex. The two constructors in [`construct`] return certificates whose
//! models have been checked by [`minor::validate_model`].

pub mod canon;
pub mod certificate;
pub mod cli;
pub mod connectivity;
pub mod construct;
pub mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod matching;
pub mod minor;
pub mod packing;

pub use certificate::{Certificate, Form, StepDetail, TraceStep};
pub use construct::{construct_chi_minor, construct_half_minor, select_edge_small_case, ConstructOptions};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6};
pub use minor::{find_minor_bruteforce, validate_model, MinorModel, MinorTarget, OracleLimits};
