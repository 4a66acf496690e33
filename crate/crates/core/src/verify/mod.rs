//! Exhaustive and sampled verification campaigns.

pub mod campaign;
pub mod corpus;
pub mod enumerate;
pub mod facts;
pub mod minimize;

pub use campaign::{
    check_subject, verify_theorem, verify_theorems, Budget, CampaignReport, Subject, TheoremId,
    UniversePart, Violation,
};
pub use enumerate::{
    enumerate_connected_graphs, enumerate_transit_functions, random_connected_graph, TransitSampler,
};
pub use facts::{AxiomCache, AxiomOracle, GraphFacts};
pub use minimize::{delete_element, minimize_counterexample, minimize_with};
