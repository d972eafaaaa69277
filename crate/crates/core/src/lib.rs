//! Exact computations in the Z/2-equivariant ordinary cohomology of a point,
//! of EP and E(A,P), and of the projective space CP^∞ with its extended
//! grading, together with chain-level and exactness oracles.

pub mod chain_oracle;
pub mod error;
pub mod expr;
pub mod mackey;
pub mod matrix;
pub mod point;
pub mod projective;
pub mod tables;
pub mod verify;

pub use error::Error;
