//! Finite orthoalgebras, their posets of Boolean subalgebras (orthodomains),
//! directions and reconstruction, the point/line/plane hypergraph view, and
//! the morphism functor between the two worlds.
//!
//! Everything is desk-scale and exhaustively checkable: carriers are capped
//! at 64 elements by default and all searches are complete.

pub mod catalog;
pub mod domain;
pub mod dot;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod iso;
pub mod morphism;
pub mod oa;
pub mod partition;
pub mod poset;
pub mod shadow;
pub mod validate;

pub use error::CoreError;
pub use oa::{BsubPoset, EnumCap, OrthoAlgebra, SubalgebraSet};
pub use poset::FinitePoset;
