//! Canonical forms and isomorphism testing for planar graphs.

pub mod canonizer;
pub mod cli_io;
pub mod component_canon;
pub mod decompose;
pub mod graph_model;
pub mod tree_order;
