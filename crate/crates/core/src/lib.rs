//! Finite commutative Krasner hyperrings and generalised prime and primary hyperideals.
//!
//! Rings are explicit tables over at most 64 elements. On top of them the crate
//! enumerates hyperideal lattices, evaluates reduction and expansion functions,
//! decides φ-δ-primariness, builds quotients, products and homomorphisms, and
//! runs exhaustive checks of the structural theorems about these notions.

pub mod classify;
pub mod construct;
pub mod corpus;
pub mod ideals;
pub mod maps;
pub mod ring;
pub mod set;
pub mod theorems;

pub use classify::{Classification, Variant, Verdict, Witness};
pub use construct::{direct_product, quotient, unit_quotient, zmod, GoodHom};
pub use ideals::Ideal;
pub use maps::{Expansion, Reduced, Reduction};
pub use ring::{verify_krasner, AxiomReport, HyperRing};
pub use set::IndexSet;
