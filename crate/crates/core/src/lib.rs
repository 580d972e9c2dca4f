//! Traceless projection of mixed tensors `V^⊗m ⊗ V*^⊗n` under GL(N), in the
//! factorized form `∏ (1 − 𝒜/a)`, together with the walled Brauer algebra
//! idempotent that maps onto it and a brute-force exact oracle.

pub mod error;
pub mod lr;
pub mod partitions;
pub mod rational;
pub mod spectrum;
pub mod tensor;
pub mod verify;
pub mod wbalgebra;

pub use error::{Error, Result};
pub use partitions::{Partition, RationalLabel, SkewShape, StaircaseClass};
pub use rational::{Poly, Q};
