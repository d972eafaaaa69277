//! Abelian groups, Mackey functors for Z/2, and cochain complexes of them.

pub mod abgroup;
pub mod complex;
pub mod functor;

pub use abgroup::{AbGroup, GroupFingerprint};
pub use complex::{MackeyCochainComplex, MackeyMorphism};
pub use functor::{AxiomViolation, CatalogName, MackeyFingerprint, MackeyFunctor};
