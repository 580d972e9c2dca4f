//! Dense mixed tensors and the operators acting on them.

mod dense;
pub mod hermitian;
pub mod json;
pub mod ops;
pub mod oracle;
pub mod projector;
mod scalar;

pub use dense::DenseTensor;
pub use hermitian::HermitianMetric;
pub use json::{AnyMetric, AnyTensor};
pub use scalar::{Scalar, ScalarKind};
