//! Geodesic betweenness on small graphs: interval functions, transit-function
//! axioms, and recognition of weakly modular graph classes.

pub mod error;
pub mod fixtures;
pub mod formats;
pub mod gated;
pub mod graph;
pub mod metric;
pub mod pattern;
pub mod transit;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use transit::{AxiomId, AxiomReport, TransitFunction};
pub use vertex_set::VertexSet;
