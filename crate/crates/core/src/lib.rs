pub mod error;
pub mod linalg;
pub mod graph;
pub mod spectral;
pub mod feasibility;
pub mod constructions;
pub mod star;
pub mod nonexistence;
