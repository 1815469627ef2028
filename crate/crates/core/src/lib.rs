//! Exact graph homomorphism search, hom-complexity and injective
//! hom-complexity with certificates, constructive optimal quasi-homomorphisms,
//! and edge covering numbers.

pub mod budget;
pub mod complexity;
pub mod covers;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod hom;
pub mod invariants;
pub mod json;

pub use budget::Budget;
pub use complexity::{ComplexityResult, Kind, Method, MethodChoice, Piece, QuasiHom, Value};
pub use decompose::DesignPlan;
pub use error::{Error, Result};
pub use graph::{Graph, Mode, SubgraphRef};
pub use hom::{is_hom, HomReport, MapFlags, Require, VertexMap, Violation};
