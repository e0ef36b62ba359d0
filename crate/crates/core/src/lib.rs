//! Exact toughness, independence number, vertex connectivity and graph
//! spectra for small graphs, together with evaluators for the spectral
//! toughness and independence bounds and an exhaustive sweep engine that
//! certifies them over labeled corpora.
//!
//! ```
//! use tough_core::{exact, graph::Graph};
//!
//! let cert = exact::toughness(&Graph::petersen()).unwrap();
//! assert_eq!(cert.tau().to_string(), "4/3");
//! ```

pub mod bounds;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod spectra;
pub mod sweep;

pub use error::{Error, ParseError, Result};
pub use graph::{ComponentPartition, Graph, VertexSet};
