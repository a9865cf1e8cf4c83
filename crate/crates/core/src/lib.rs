//! Independent-set stars on trees, with executable star-center injections
//! for spiders and brute-force checks of EKR-type statements.

pub mod ekr;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod injections;
pub mod spider;
pub mod vertex_set;

pub use enumeration::{alpha, enum_indep_sets, mu, star_sizes, StarTable};
pub use error::{CountError, EkrError, GraphError, InjectionError};
pub use graph::Tree;
pub use spider::{spider_order, Coord, Spider};
pub use vertex_set::VertexSet;
