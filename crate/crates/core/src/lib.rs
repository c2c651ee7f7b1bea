//! Characteristic subobjects, commutators, centralisers and actors of finite
//! groups, rings, non-associative rings and Lie algebras over `Z_m`.

pub mod action;
pub mod actor;
pub mod algebra;
pub mod automorphism;
pub mod corpus;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod linalg;
pub mod morphism;
pub mod report;
pub mod spec_format;
pub mod subobject;
pub mod variety;

pub use algebra::{Element, FiniteAlgebra, Op};
pub use error::{Error, Result};
pub use morphism::Morphism;
pub use subobject::{Congruence, Subobject};
pub use variety::{Variety, VarietyTag};
